#include "bidepo/tensor_core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace bidepo {

Dims::Dims(int a, int b) : dA(a), dB(b) {
  if (a < 2 || b < 2) {
    throw DimensionError("local dimensions must be at least 2, got (" +
                         std::to_string(a) + ", " + std::to_string(b) + ")");
  }
}

namespace {

void check_cap(Eigen::Index rows, Eigen::Index cols, Eigen::Index cap) {
  if (rows > cap || cols > cap) {
    throw ResourceLimitError("tensor product of size " + std::to_string(rows) +
                             "x" + std::to_string(cols) +
                             " exceeds the dimension cap " +
                             std::to_string(cap));
  }
}

void check_bipartite(const CMatrix& m, int d1, int d2) {
  if (d1 < 1 || d2 < 1 || m.rows() != m.cols() ||
      m.rows() != Eigen::Index(d1) * d2) {
    throw DimensionError("operator of size " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " does not act on " +
                         std::to_string(d1) + " x " + std::to_string(d2));
  }
}

// Maps each output composite index to the input composite index it reads.
std::vector<Eigen::Index> permutation_table(std::span<const int> dims,
                                            std::span<const int> perm) {
  const std::size_t k = dims.size();
  if (perm.size() != k) throw DimensionError("permutation length mismatch");
  std::vector<int> seen(k, 0);
  for (int p : perm) {
    if (p < 0 || std::size_t(p) >= k || seen[p]++) {
      throw DimensionError("invalid subsystem permutation");
    }
  }
  std::vector<int> out_dims(k);
  for (std::size_t j = 0; j < k; ++j) out_dims[j] = dims[perm[j]];
  // Stride of each input factor in the input composite index.
  std::vector<Eigen::Index> in_stride(k, 1);
  for (std::size_t j = k; j-- > 1;) in_stride[j - 1] = in_stride[j] * dims[j];
  const Eigen::Index total = in_stride.empty() ? 1 : in_stride[0] * dims[0];

  std::vector<Eigen::Index> table(total);
  std::vector<int> digits(k, 0);
  for (Eigen::Index out = 0; out < total; ++out) {
    Eigen::Index in = 0;
    for (std::size_t j = 0; j < k; ++j) in += digits[j] * in_stride[perm[j]];
    table[out] = in;
    for (std::size_t j = k; j-- > 0;) {
      if (++digits[j] < out_dims[j]) break;
      digits[j] = 0;
    }
  }
  return table;
}

}  // namespace

CMatrix kron(const CMatrix& a, const CMatrix& b, Eigen::Index cap) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  check_cap(rows, cols, cap);
  CMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CVector kron(const CVector& a, const CVector& b, Eigen::Index cap) {
  check_cap(a.size() * b.size(), 1, cap);
  CVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

CMatrix partial_transpose(const CMatrix& m, int d1, int d2, Side side) {
  check_bipartite(m, d1, d2);
  CMatrix out(m.rows(), m.cols());
  for (int i = 0; i < d1; ++i) {
    for (int k = 0; k < d2; ++k) {
      for (int j = 0; j < d1; ++j) {
        for (int l = 0; l < d2; ++l) {
          const Complex v = m(i * d2 + k, j * d2 + l);
          if (side == Side::second) {
            out(i * d2 + l, j * d2 + k) = v;
          } else {
            out(j * d2 + k, i * d2 + l) = v;
          }
        }
      }
    }
  }
  return out;
}

CMatrix partial_trace(const CMatrix& m, int d1, int d2, Side keep) {
  check_bipartite(m, d1, d2);
  if (keep == Side::first) {
    CMatrix out = CMatrix::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j)
        for (int k = 0; k < d2; ++k) out(i, j) += m(i * d2 + k, j * d2 + k);
    return out;
  }
  CMatrix out = CMatrix::Zero(d2, d2);
  for (int k = 0; k < d2; ++k)
    for (int l = 0; l < d2; ++l)
      for (int i = 0; i < d1; ++i) out(k, l) += m(i * d2 + k, i * d2 + l);
  return out;
}

CMatrix permute_subsystems(const CMatrix& m, std::span<const int> dims,
                           std::span<const int> perm) {
  const auto table = permutation_table(dims, perm);
  const auto total = Eigen::Index(table.size());
  if (m.rows() != total || m.cols() != total) {
    throw DimensionError("operator size does not match subsystem dimensions");
  }
  CMatrix out(total, total);
  for (Eigen::Index c = 0; c < total; ++c)
    for (Eigen::Index r = 0; r < total; ++r) out(r, c) = m(table[r], table[c]);
  return out;
}

CVector permute_subsystems(const CVector& v, std::span<const int> dims,
                           std::span<const int> perm) {
  const auto table = permutation_table(dims, perm);
  if (v.size() != Eigen::Index(table.size())) {
    throw DimensionError("vector size does not match subsystem dimensions");
  }
  CVector out(v.size());
  for (Eigen::Index r = 0; r < v.size(); ++r) out(r) = v(table[r]);
  return out;
}

double max_abs(const CMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

bool is_hermitian(const CMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  const double scale = max_abs(m);
  return max_abs(m - m.adjoint()) <= rel_tol * scale;
}

RVector herm_spectrum(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("spectrum of a non-square matrix");
  if (!is_hermitian(m, 1e-10)) {
    throw NotHermitianError("matrix deviates from Hermitian beyond 1e-10 relative");
  }
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    const Eigen::MatrixXd sym = 0.5 * (m.real() + m.real().transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
    return es.eigenvalues();
  }
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(sym, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

double min_eigenvalue(const CMatrix& m) { return herm_spectrum(m)(0); }

bool is_prob_vector(const RVector& p, double tol) {
  if (p.size() == 0 || (p.array() < 0.0).any()) return false;
  return std::abs(p.sum() - 1.0) <= tol;
}

CVector SchmidtDecomposition::reconstruct() const {
  const Eigen::Index d1 = basis_first.rows();
  const Eigen::Index d2 = basis_second.rows();
  CVector v = CVector::Zero(d1 * d2);
  for (Eigen::Index i = 0; i < weights.size(); ++i) {
    v += std::sqrt(weights(i)) *
         kron(CVector(basis_first.col(i)), CVector(basis_second.col(i)));
  }
  return v;
}

SchmidtDecomposition schmidt(const CVector& v, int d1, int d2) {
  if (d1 < 1 || d2 < 1 || v.size() != Eigen::Index(d1) * d2) {
    throw DimensionError("vector size does not match d1 * d2");
  }
  if (std::abs(v.norm() - 1.0) > 1e-12) {
    throw NotNormalizedError("Schmidt decomposition requires a unit vector");
  }
  CMatrix c(d1, d2);
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d2; ++k) c(i, k) = v(i * d2 + k);

  // c = U S V^dagger, so v = sum_i s_i |u_i> (x) |conj(v_i)>.
  Eigen::JacobiSVD<CMatrix> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SchmidtDecomposition out;
  out.weights = svd.singularValues().array().square();
  out.basis_first = svd.matrixU();
  out.basis_second = svd.matrixV().conjugate();
  for (Eigen::Index i = 0; i < out.basis_first.cols(); ++i) {
    auto col = out.basis_first.col(i);
    Eigen::Index r = 0;
    while (r < col.size() && std::abs(col(r)) < 1e-14) ++r;
    if (r == col.size()) continue;
    const Complex phase = col(r) / std::abs(col(r));
    out.basis_first.col(i) *= std::conj(phase);
    if (i < out.basis_second.cols()) out.basis_second.col(i) *= phase;
  }
  return out;
}

Rng make_stream(std::uint64_t root_seed, std::uint64_t stream) {
  std::seed_seq seq{std::uint32_t(root_seed), std::uint32_t(root_seed >> 32),
                    std::uint32_t(stream), std::uint32_t(stream >> 32)};
  return Rng(seq);
}

CVector random_pure(int dim, Rng& rng) {
  if (dim < 1) throw DimensionError("random_pure needs dim >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(dim);
  for (int i = 0; i < dim; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

CVector random_pure(int dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(dim, rng);
}

CMatrix random_unitary(int dim, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(dim, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const double a = std::abs(r(j, j));
    if (a > 0) q.col(j) *= r(j, j) / a;
  }
  return q;
}

CMatrix random_density(int dim, Rng& rng, int rank) {
  if (rank <= 0) rank = dim;
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix g(dim, rank);
  for (int j = 0; j < rank; ++j)
    for (int i = 0; i < dim; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  CMatrix rho = g * g.adjoint();
  return rho / rho.trace().real();
}

RVector random_simplex(int n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  RVector p(n);
  for (int i = 0; i < n; ++i) p(i) = expo(rng);
  return p / p.sum();
}

CMatrix projector(const CVector& v) { return v * v.adjoint(); }

}  // namespace bidepo
