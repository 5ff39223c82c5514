#include "bidepo/hadamard_tools.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bidepo {

LoccHadamard locc_hadamard(const CMatrix& rho, const CMatrix& sigma, Dims dims) {
  const Eigen::Index d = dims.total();
  if (rho.rows() != d || rho.cols() != d || sigma.rows() != d || sigma.cols() != d) {
    throw DimensionError("locc_hadamard: both operators must act on dA x dB");
  }
  const int dA = dims.dA, dB = dims.dB;
  const std::array<int, 4> abab{dA, dB, dA, dB};
  const std::array<int, 4> perm{0, 2, 1, 3};
  const CMatrix joint = permute_subsystems(kron(rho, sigma), abab, perm);

  // Index of |a a'>|b b'> in A A' B B'.
  auto idx = [&](int a, int a2, int b, int b2) {
    return Eigen::Index(a * dA + a2) * (dB * dB) + (b * dB + b2);
  };
  RVector mask = RVector::Zero(joint.rows());
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b) mask(idx(a, a, b, b)) = 1.0;

  LoccHadamard out;
  out.projected = mask.asDiagonal() * joint * mask.asDiagonal();
  out.compressed.resize(d, d);
  for (int a = 0; a < dA; ++a)
    for (int b = 0; b < dB; ++b)
      for (int a2 = 0; a2 < dA; ++a2)
        for (int b2 = 0; b2 < dB; ++b2)
          out.compressed(a * dB + b, a2 * dB + b2) = out.projected(idx(a, a, b, b), idx(a2, a2, b2, b2));
  out.probability = out.compressed.trace().real();
  return out;
}

SuperOp choi_hadamard_product(const SuperOp& a, const SuperOp& b) {
  if (a.dim != b.dim || a.choi.rows() != b.choi.rows() || a.choi.cols() != b.choi.cols()) {
    throw DimensionError("Hadamard product of maps with different dimensions");
  }
  return SuperOp{double(a.dim) * a.choi.cwiseProduct(b.choi), a.dim};
}

SuperOp cocp_hadamard_product(const SuperOp& a, const SuperOp& b) {
  return choi_hadamard_product(a, b);
}

int schmidt_rank(const CVector& v, int d1, int d2, double tol) {
  if (v.size() != Eigen::Index(d1) * d2) throw DimensionError("schmidt_rank: size mismatch");
  // Row i holds the coefficients of |i>|.>.
  const CMatrix m = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic,
                                                   Eigen::RowMajor>>(v.data(), d1, d2);
  const RVector sv = Eigen::JacobiSVD<CMatrix>(m).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  return int((sv.array() > tol * sv(0)).count());
}

CVector hadamard(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw DimensionError("hadamard: length mismatch");
  return a.cwiseProduct(b);
}

int VandermondeSpec::order() const { return N > 0 ? N : std::max(n, r * s); }

void VandermondeSpec::validate() const {
  if (n < 1) throw std::invalid_argument("Vandermonde spec: n must be positive");
  if (r < 1 || r > n || s < 1 || s > n) {
    throw std::invalid_argument("Vandermonde spec: need 1 <= r, s <= n");
  }
  if (N != 0 && N < std::max(n, r * s)) {
    throw std::invalid_argument("Vandermonde spec: need N >= max(n, r s)");
  }
}

VandermondePair vandermonde_states(const VandermondeSpec& spec) {
  spec.validate();
  const int n = spec.n;
  const int N = spec.order();
  auto root = [N](long long k) {
    const double t = 2.0 * std::numbers::pi * double(k % N) / N;
    return Complex(std::cos(t), std::sin(t));
  };
  // sum_k |c_k>|c_k*> for columns c_k(l) = w^{step k l}.
  auto build = [&](int terms, int step) {
    CVector v = CVector::Zero(Eigen::Index(n) * n);
    for (int k = 0; k < terms; ++k) {
      for (int l = 0; l < n; ++l)
        for (int m = 0; m < n; ++m)
          v(l * n + m) += root(1LL * step * k * l) * std::conj(root(1LL * step * k * m));
    }
    return CVector(v.normalized());
  };
  return {build(spec.r, 1), build(spec.s, spec.r)};
}

double geometric_slack(std::span<const Complex> z) {
  double abs_sum = 0.0, sq_sum = 0.0;
  Complex sum = 0.0;
  for (const Complex& x : z) {
    abs_sum += std::abs(x);
    sq_sum += std::norm(x);
    sum += x;
  }
  return 0.5 * (abs_sum * abs_sum + std::norm(sum)) - sq_sum;
}

}  // namespace bidepo
