#pragma once

// Deterministic evaluation loops. Values are computed per index (in parallel
// when requested) into a buffer, then reduced serially in index order, so
// the result does not depend on the thread count.

#include <cstddef>
#include <limits>
#include <vector>

namespace bidepo {

enum class Exec { serial, parallel };

struct MinResult {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

template <class F>
std::vector<double> evaluate_all(std::size_t count, F&& f, Exec exec) {
  std::vector<double> out(count);
  const long long n = static_cast<long long>(count);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < n; ++i) out[std::size_t(i)] = f(std::size_t(i));
  } else {
    for (long long i = 0; i < n; ++i) out[std::size_t(i)] = f(std::size_t(i));
  }
  return out;
}

/// Smallest value; ties go to the lowest index.
inline MinResult argmin(const std::vector<double>& values) {
  MinResult r;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < r.value) {
      r.value = values[i];
      r.index = i;
    }
  }
  return r;
}

template <class F>
MinResult min_reduce(std::size_t count, F&& f, Exec exec) {
  return argmin(evaluate_all(count, std::forward<F>(f), exec));
}

template <class F>
void for_each_index(std::size_t count, F&& f, Exec exec) {
  const long long n = static_cast<long long>(count);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < n; ++i) f(std::size_t(i));
  } else {
    for (long long i = 0; i < n; ++i) f(std::size_t(i));
  }
}

}  // namespace bidepo
