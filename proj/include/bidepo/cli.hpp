#pragma once

#include <iosfwd>

namespace bidepo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Entry point of the `bidepo` tool, with the output streams injected.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bidepo
