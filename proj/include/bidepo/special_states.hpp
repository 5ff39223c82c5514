#pragma once

// Named states of the family and explicit separability certificates.

#include "bidepo/map_family.hpp"

#include <array>
#include <string>
#include <vector>

namespace bidepo {

/// (1/sqrt(d)) sum_i |ii> on d x d.
CVector max_entangled(int d);
/// (1/sqrt(dA)) sum_{i < dA} |ii> on dA x dB, dA <= dB.
CVector tilde_entangled(int dA, int dB);
/// |E> = |e>_AA' |e>_BB' written in the A B A' B' ordering.
CVector doubled_entangled(Dims dims);

/// Reorders an operator on A A' B B' into A B A' B' (and back).
CMatrix aabb_to_abab(const CMatrix& m, Dims dims);
CMatrix abab_to_aabb(const CMatrix& m, Dims dims);

/// Isotropic U (x) U* twirl on d x d, in closed form.
CMatrix isotropic_twirl(int d, const CMatrix& x);

struct PptEntangledState {
  CMatrix state;  // A B A' B' ordering
  Dims dims;
  /// False when dA == dB: the operator is then separable.
  bool entanglement_expected = false;
};

/// 1 - 1_AA' (x) e_BB' - e_AA' (x) 1_BB' + (dA dB - dB + dA) e_AA' (x) e_BB'.
/// Requires dA <= dB. With unit_trace the operator is rescaled to trace 1.
PptEntangledState ppt_entangled_state(int dA, int dB, bool unit_trace = false);

/// F + n|e><e| = sum_{i != j} |ii><jj| + sum_{ij} |ij><ij|.
CMatrix flag_plus_eps(int n);

enum class PieceKind {
  twirl_of_product,    // (P_AA' (x) P_BB') of an AB|A'B' product state
  product_state,       // |a>|b><a|<b|
  hadamard_flag_image  // local unitary image of (I (x) zeta_A)(F + n|e><e|)
};

std::string to_string(PieceKind kind);

struct CertificatePiece {
  PieceKind kind = PieceKind::product_state;
  double weight = 0.0;
  CMatrix op;
  /// Factors asserted positive semidefinite for the piece to be separable.
  std::vector<CMatrix> psd_factors;
  /// True when separability of the piece rests on a known result rather
  /// than an explicit product decomposition.
  bool cited = false;
  std::string note;
};

struct SeparableCertificate {
  std::string label;
  CMatrix target;
  std::vector<CertificatePiece> pieces;
  double residual = 0.0;        // max |sum_k w_k op_k - target|
  double min_psd_margin = 0.0;  // smallest eigenvalue over all psd_factors
  bool weights_nonnegative = true;

  CMatrix reconstruct() const;
  bool valid(double tol = 1e-12) const;
};

/// Fills residual, min_psd_margin and weights_nonnegative.
void finalize(SeparableCertificate& cert);

/// Vertices of the entanglement-breaking double pyramid (dA <= dB):
///   1: (-1/dB, -1/dB, 1)        2: (1, -1/dA, -1/dA)   3: (-1/dB, 1, -1/dB)
///   4: (-1/dB, -1/dA, 1/(dA dB))  5: (1, 1, 1)
PhiParams eb_vertex(int vertex_id, Dims dims);

/// Separable decomposition of the Choi matrix at an EB vertex.
SeparableCertificate vertex_certificate(int vertex_id, Dims dims);

struct EaDecomposition {
  SeparableCertificate certificate;
  RVector lambda;                   // Schmidt weights, descending
  CMatrix multiplier;               // 1 - 2 D_lambda + |psi><psi|
  double multiplier_min_eigenvalue = 0.0;
  Eigen::MatrixXd remainder;        // 1 - l_i - l_j + l_i delta_ij
};

/// Separable decomposition of 2 1 - 2 1 (x) rho_B - rho_A (x) 1 + |Psi><Psi|
/// for a unit vector Psi on n x n.
EaDecomposition ea_decomposition(const CVector& psi, int n);

}  // namespace bidepo
