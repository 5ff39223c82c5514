#pragma once

// The acceptance suite: ten numbered criteria, each made of named checks.
// Shared by the acceptance test binary and `bidepo verify`.

#include "bidepo/json_io.hpp"
#include "bidepo/parallel.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bidepo {

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;  // the measured quantity
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Check> checks;
  double seconds = 0.0;

  bool pass() const;
};

struct VerifyOptions {
  std::uint64_t seed = 20240613;
  Exec exec = Exec::parallel;
};

inline constexpr int kCriterionCount = 10;

/// Suite names: all, positivity, cp, eb, ea, hadamard, certificates.
bool is_known_suite(std::string_view suite);
/// Criterion ids run by a suite, ascending. Throws on an unknown name.
std::vector<int> suite_criteria(std::string_view suite);

CriterionResult run_criterion(int id, const VerifyOptions& options);
std::vector<CriterionResult> run_suite(std::string_view suite, const VerifyOptions& options);

/// "[PASS] 3 title (1.2 s)" plus, for failures, the failing checks.
std::string summary_line(const CriterionResult& r);
Json to_json(const CriterionResult& r);

}  // namespace bidepo
