#include "bidepo/region_grid.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace bidepo {

double Axis::value(int k) const {
  if (steps <= 1) return lo;
  if (k == steps - 1) return hi;
  return lo + (hi - lo) * double(k) / double(steps - 1);
}

std::size_t GridSpec::cell_count() const {
  std::size_t c = 1;
  for (const auto& a : axes) c *= std::size_t(a.steps);
  return c;
}

void GridSpec::validate() const {
  for (const auto& a : axes) {
    if (a.steps < 1) throw std::invalid_argument("grid axis needs at least one step");
    if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) {
      throw std::invalid_argument("grid axis bounds must be finite");
    }
  }
}

PhiParams RegionGrid::point(std::size_t cell) const {
  const int nb = spec.axes[1].steps;
  const int ng = spec.axes[2].steps;
  const int k = int(cell % std::size_t(ng));
  const int j = int((cell / std::size_t(ng)) % std::size_t(nb));
  const int i = int(cell / (std::size_t(ng) * std::size_t(nb)));
  return {spec.axes[0].value(i), spec.axes[1].value(j), spec.axes[2].value(k), spec.dims};
}

CellFlags flags_of(const ClassificationReport& r) {
  return {r.positive, r.cp, r.cocp, r.eb, r.ppt_inducing, r.ea};
}

RegionGrid sweep(const GridSpec& spec, Exec exec) {
  spec.validate();
  RegionGrid grid;
  grid.spec = spec;
  grid.cells.resize(spec.cell_count());
  for_each_index(
      grid.cells.size(),
      [&](std::size_t c) { grid.cells[c] = flags_of(classify(grid.point(c))); }, exec);
  return grid;
}

void write_csv(const RegionGrid& grid, std::ostream& out) {
  out << kCsvHeader << '\n';
  char buf[160];
  for (std::size_t c = 0; c < grid.cells.size(); ++c) {
    const PhiParams p = grid.point(c);
    const CellFlags& f = grid.cells[c];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d,%d,%d,%d,%d,%d\n", p.alpha, p.beta,
                  p.gamma, f.positive, f.cp, f.cocp, f.eb, f.ppt_inducing, f.ea);
    out << buf;
  }
}

}  // namespace bidepo
