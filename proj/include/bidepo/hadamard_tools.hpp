#pragma once

// Schur (Hadamard) products of states, maps and vectors, all in the
// canonical basis.

#include "bidepo/map_family.hpp"

#include <span>

namespace bidepo {

struct LoccHadamard {
  CMatrix projected;   // (Pi0_AA' (x) Pi0_BB') rho (x) sigma (...), on A A' B B'
  CMatrix compressed;  // projected pulled back through |i> -> |ii> on each side
  double probability = 0.0;
};

/// Pi0 = sum_i |ii><ii| on AA' and on BB', applied to rho_AB (x) sigma_A'B'.
/// The compressed block equals rho o sigma.
LoccHadamard locc_hadamard(const CMatrix& rho, const CMatrix& sigma, Dims dims);

/// Map whose Choi matrix is the entrywise product of the two Choi matrices,
/// taken unnormalized. In the state-normalized convention that is
/// d * (R1 o R2).
SuperOp choi_hadamard_product(const SuperOp& a, const SuperOp& b);

/// Same product; named for its use on completely copositive maps, where the
/// result is again completely copositive.
SuperOp cocp_hadamard_product(const SuperOp& a, const SuperOp& b);

/// Number of singular values of v reshaped to d1 x d2 above tol * largest.
int schmidt_rank(const CVector& v, int d1, int d2, double tol = 1e-8);

/// Entrywise product of two vectors of equal length.
CVector hadamard(const CVector& a, const CVector& b);

struct VandermondeSpec {
  int n = 2;
  int r = 1;
  int s = 1;
  int N = 0;  // 0 selects max(n, r * s)

  int order() const;
  /// Throws std::invalid_argument unless 1 <= r, s <= n and N >= max(n, r s).
  void validate() const;
};

struct VandermondePair {
  CVector psi;  // Schmidt rank r
  CVector phi;  // Schmidt rank s; psi o phi has rank min(n, r s)
};

/// psi ~ sum_{i<r} |a_i>|a_i*>, phi ~ sum_{j<s} |b_j>|b_j*> with
/// a_i = sum_l w^{il}|l>, b_j = sum_l w^{jrl}|l>, w = exp(2 pi i / N); unit norm.
VandermondePair vandermonde_states(const VandermondeSpec& spec);

/// (1/2)((sum |z_i|)^2 + |sum z_i|^2) - sum |z_i|^2, never negative.
double geometric_slack(std::span<const Complex> z);

}  // namespace bidepo
