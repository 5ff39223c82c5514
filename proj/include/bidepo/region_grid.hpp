#pragma once

// Rasterized classification over a box or slice of (alpha, beta, gamma).

#include "bidepo/analytic_classify.hpp"
#include "bidepo/parallel.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace bidepo {

struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;  // 1 pins the parameter at lo

  double value(int k) const;
};

struct GridSpec {
  Dims dims{4, 4};
  std::array<Axis, 3> axes;  // alpha, beta, gamma

  std::size_t cell_count() const;
  /// Throws std::invalid_argument on steps < 1 or non-finite bounds.
  void validate() const;
};

struct CellFlags {
  bool positive = false;
  bool cp = false;
  bool cocp = false;
  bool eb = false;
  bool ppt_inducing = false;
  bool ea = false;
};

struct RegionGrid {
  GridSpec spec;
  std::vector<CellFlags> cells;  // alpha outermost, gamma innermost

  PhiParams point(std::size_t cell) const;
};

CellFlags flags_of(const ClassificationReport& r);

RegionGrid sweep(const GridSpec& spec, Exec exec = Exec::parallel);

/// Header alpha,beta,gamma,positive,cp,cocp,eb,ppt_inducing,ea; booleans as
/// 0/1, reals with 17 significant digits.
void write_csv(const RegionGrid& grid, std::ostream& out);

inline constexpr const char* kCsvHeader = "alpha,beta,gamma,positive,cp,cocp,eb,ppt_inducing,ea";

}  // namespace bidepo
