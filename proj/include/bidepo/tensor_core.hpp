#pragma once

// Dense complex linear algebra shared by every other module.
//
// Index convention: a basis vector |i>|k> of a d1 x d2 bipartite space has
// composite index i * d2 + k. Every routine in the library uses this order.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

namespace bidepo {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline constexpr Eigen::Index kDefaultDimensionCap = 4096;

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ResourceLimitError : std::length_error {
  using std::length_error::length_error;
};

struct NotHermitianError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotNormalizedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Local dimensions of a bipartite system AB. Both must be at least 2.
struct Dims {
  int dA = 2;
  int dB = 2;

  Dims() = default;
  Dims(int a, int b);

  int n() const { return dA < dB ? dA : dB; }
  int total() const { return dA * dB; }
  Dims swapped() const { return Dims(dB, dA); }

  friend bool operator==(const Dims&, const Dims&) = default;
};

enum class Side { first, second };

CMatrix kron(const CMatrix& a, const CMatrix& b,
             Eigen::Index cap = kDefaultDimensionCap);
CVector kron(const CVector& a, const CVector& b,
             Eigen::Index cap = kDefaultDimensionCap);

/// Transposes the chosen tensor factor of an operator on d1 x d2.
CMatrix partial_transpose(const CMatrix& m, int d1, int d2, Side side);

/// Traces out the factor that is not kept.
CMatrix partial_trace(const CMatrix& m, int d1, int d2, Side keep);

/// Reorders tensor factors. Output factor k is input factor perm[k].
CMatrix permute_subsystems(const CMatrix& m, std::span<const int> dims,
                           std::span<const int> perm);
CVector permute_subsystems(const CVector& v, std::span<const int> dims,
                           std::span<const int> perm);

double max_abs(const CMatrix& m);
bool is_hermitian(const CMatrix& m, double rel_tol = 1e-10);

/// Ascending real spectrum of a Hermitian matrix. The input is symmetrized
/// before solving; purely real input takes the real symmetric solver.
/// Throws NotHermitianError beyond 1e-10 relative deviation.
RVector herm_spectrum(const CMatrix& m);
double min_eigenvalue(const CMatrix& m);

bool is_prob_vector(const RVector& p, double tol = 1e-12);

/// v = sum_i sqrt(weights[i]) |a_i>|b_i>, where a_i and b_i are the columns
/// of basis_first and basis_second. Weights are descending. Both bases are
/// complete (d1 and d2 columns), and the first nonzero entry of every a_i is
/// real and positive.
struct SchmidtDecomposition {
  RVector weights;
  CMatrix basis_first;
  CMatrix basis_second;

  CVector reconstruct() const;
};

SchmidtDecomposition schmidt(const CVector& v, int d1, int d2);

/// Independent PRNG stream k of a root seed.
Rng make_stream(std::uint64_t root_seed, std::uint64_t stream);

/// Haar-distributed unit vector (normalized complex Gaussian vector).
CVector random_pure(int dim, Rng& rng);
CVector random_pure(int dim, std::uint64_t seed);

/// Haar unitary from the QR decomposition of a complex Ginibre matrix.
CMatrix random_unitary(int dim, Rng& rng);

/// Unit-trace density matrix G G^dagger / Tr with G of size dim x rank.
CMatrix random_density(int dim, Rng& rng, int rank = -1);

/// Uniform point of the probability simplex (symmetric Dirichlet(1)).
RVector random_simplex(int n, Rng& rng);

CMatrix projector(const CVector& v);

}  // namespace bidepo
