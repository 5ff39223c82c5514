#include "bidepo/numeric_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace bidepo {

namespace {

CVector schmidt_input(const PhiParams& p, const RVector& lambda) {
  const int dB = p.dims.dB;
  CVector v = CVector::Zero(p.dims.total());
  for (int i = 0; i < p.dims.n(); ++i) v(i * dB + i) = std::sqrt(std::max(0.0, lambda(i)));
  return v;
}

// Candidate k: 0 uniform, 1..n vertices, then Dirichlet draws.
RVector lambda_candidate(int n, std::uint64_t seed, std::size_t k) {
  if (k == 0) return RVector::Constant(n, 1.0 / n);
  if (k <= std::size_t(n)) {
    RVector v = RVector::Zero(n);
    v(Eigen::Index(k - 1)) = 1.0;
    return v;
  }
  Rng rng = make_stream(seed, k);
  return random_simplex(n, rng);
}

CMatrix choi_partial_transpose(const SuperOp& op) {
  return partial_transpose(op.choi, op.dim, op.dim, Side::second);
}

}  // namespace

double positive_value_at(const PhiParams& p, const RVector& lambda) {
  const CVector v = schmidt_input(p, lambda);
  return min_eigenvalue(phi_apply(p, projector(v)));
}

double positive_block_minimum(const PhiParams& p, const RVector& lambda) {
  const int n = p.dims.n();
  auto lam = [&](int i) { return i < n ? lambda(i) : 0.0; };
  double m = std::numeric_limits<double>::infinity();
  // |ij> with i on A, j on B; indices beyond n carry zero weight.
  for (int i = 0; i < p.dims.dA; ++i)
    for (int j = 0; j < p.dims.dB; ++j)
      if (i != j || i >= n) m = std::min(m, 1.0 + p.alpha * lam(j) + p.beta * lam(i));
  RVector root(n);
  for (int i = 0; i < n; ++i) root(i) = std::sqrt(std::max(0.0, lambda(i)));
  Eigen::MatrixXd block = p.gamma * root * root.transpose();
  block.diagonal().array() += 1.0;
  block.diagonal() += (p.alpha + p.beta) * lambda.head(n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(block, Eigen::EigenvaluesOnly);
  return std::min(m, es.eigenvalues()(0));
}

OracleVerdict oracle_positive(const PhiParams& p, std::size_t samples, std::uint64_t seed,
                              Exec exec) {
  const int n = p.dims.n();
  const std::size_t count = std::size_t(n) + 1 + samples;
  const MinResult best = min_reduce(
      count, [&](std::size_t k) { return positive_value_at(p, lambda_candidate(n, seed, k)); },
      exec);
  OracleVerdict v;
  v.property = "positive";
  v.worst = best.value;
  v.witness_index = best.index;
  v.witness_lambda = lambda_candidate(n, seed, best.index);
  v.witness_state = schmidt_input(p, v.witness_lambda);
  v.samples = samples;
  v.seed = seed;
  v.block_minimum = positive_block_minimum(p, v.witness_lambda);
  return v;
}

OracleVerdict oracle_cp(const PhiParams& p) {
  OracleVerdict v;
  v.property = "cp";
  v.worst = min_eigenvalue(phi_choi(p).choi);
  v.witness_family = 0;
  return v;
}

OracleVerdict oracle_cocp(const PhiParams& p) {
  OracleVerdict v;
  v.property = "cocp";
  v.worst = min_eigenvalue(choi_partial_transpose(phi_choi(p)));
  v.witness_family = 1;
  return v;
}

double eb_family_value(const PhiParams& p, int family) {
  const SuperOp op = phi_choi(p);
  switch (family) {
    case 0: return min_eigenvalue(op.choi);
    case 1: return min_eigenvalue(choi_partial_transpose(op));
    case 2: {
      const int dA = p.dims.dA, dB = p.dims.dB;
      if (dA == dB) throw std::invalid_argument("composed EB test needs dA != dB");
      const bool on_b = dA < dB;
      const int small = std::min(dA, dB);
      const LinearMap local = trace_plus_identity(1.0, -1.0 / small, on_b ? dB : dA);
      const Side side = on_b ? Side::second : Side::first;
      // (L (x) I_{A'B'}) R_Phi is the Choi matrix of L o Phi.
      const LinearMap on_ab = [&](const CMatrix& x) {
        return apply_on_factor(local, x, dA, dB, side);
      };
      return min_eigenvalue(apply_on_factor(on_ab, op.choi, op.dim, op.dim, Side::first));
    }
    default: throw std::invalid_argument("EB test family must be 0, 1 or 2");
  }
}

OracleVerdict oracle_eb(const PhiParams& p) {
  const int families = p.dims.dA == p.dims.dB ? 2 : 3;
  OracleVerdict v;
  v.property = "eb";
  v.worst = std::numeric_limits<double>::infinity();
  for (int f = 0; f < families; ++f) {
    const double value = eb_family_value(p, f);
    if (value < v.worst) {
      v.worst = value;
      v.witness_family = f;
    }
  }
  v.samples = std::size_t(families);
  return v;
}

CVector pure_sample(const PhiParams& p, std::uint64_t seed, std::size_t index) {
  if (index == 0) {
    const int dB = p.dims.dB;
    CVector v = CVector::Zero(p.dims.total());
    v(0) = v(dB + 1) = 1.0 / std::sqrt(2.0);
    return v;
  }
  Rng rng = make_stream(seed, index);
  return random_pure(p.dims.total(), rng);
}

double ppt_value_at(const PhiParams& p, const CVector& psi) {
  const CMatrix out = phi_apply(p, projector(psi));
  return min_eigenvalue(partial_transpose(out, p.dims.dA, p.dims.dB, Side::second));
}

double ea_value_at(const PhiParams& p, const CVector& psi) {
  const CMatrix out = phi_apply(p, projector(psi));
  return std::min(min_eigenvalue(out),
                  min_eigenvalue(partial_transpose(out, p.dims.dA, p.dims.dB, Side::second)));
}

namespace {

OracleVerdict pure_input_oracle(const PhiParams& p, std::size_t samples, std::uint64_t seed,
                                Exec exec, const char* property,
                                double (*value)(const PhiParams&, const CVector&)) {
  const MinResult best = min_reduce(
      samples + 1, [&](std::size_t k) { return value(p, pure_sample(p, seed, k)); }, exec);
  OracleVerdict v;
  v.property = property;
  v.worst = best.value;
  v.witness_index = best.index;
  v.witness_state = pure_sample(p, seed, best.index);
  v.samples = samples;
  v.seed = seed;
  return v;
}

}  // namespace

OracleVerdict oracle_ppt_inducing(const PhiParams& p, std::size_t samples, std::uint64_t seed,
                                  Exec exec) {
  return pure_input_oracle(p, samples, seed, exec, "ppt_inducing", &ppt_value_at);
}

OracleVerdict oracle_ea_small(const PhiParams& p, std::size_t samples, std::uint64_t seed,
                              Exec exec) {
  OracleVerdict v = pure_input_oracle(p, samples, seed, exec, "ea", &ea_value_at);
  v.exact = p.dims.total() <= 6;
  return v;
}

double witness_detect(const CMatrix& state, const LinearMap& map, int d1, int d2) {
  return min_eigenvalue(apply_on_factor(map, state, d1, d2, Side::first));
}

namespace {

double fvalue(double a, const std::vector<double>& l) {
  double s = 0.0;
  for (double x : l) s += x / (1.0 + a * x);
  return s;
}

void grid_search(double a, int n, int resolution, std::vector<int>& parts, int pos, int left,
                 double& best, std::vector<double>& arg) {
  if (pos == n - 1) {
    parts[pos] = left;
    std::vector<double> l(n);
    for (int i = 0; i < n; ++i) l[i] = double(parts[i]) / resolution;
    const double f = fvalue(a, l);
    if (f > best) {
      best = f;
      arg = l;
    }
    return;
  }
  for (int k = 0; k <= left; ++k) {
    parts[pos] = k;
    grid_search(a, n, resolution, parts, pos + 1, left - k, best, arg);
  }
}

}  // namespace

double simplex_fmax(double a, int n, int resolution) {
  if (n < 1 || resolution < 1) throw std::invalid_argument("simplex_fmax: bad size");
  std::vector<int> parts(n);
  std::vector<double> l;
  double best = -std::numeric_limits<double>::infinity();
  grid_search(a, n, resolution, parts, 0, resolution, best, l);

  for (double h = 1.0 / resolution; h > 1e-13;) {
    bool moved = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double t = std::min(h, l[j]);
        if (t <= 0.0) continue;
        l[i] += t;
        l[j] -= t;
        const double f = fvalue(a, l);
        if (f > best) {
          best = f;
          moved = true;
        } else {
          l[i] -= t;
          l[j] += t;
        }
      }
    }
    if (!moved) h *= 0.5;
  }
  return best;
}

}  // namespace bidepo
