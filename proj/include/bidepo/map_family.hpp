#pragma once

// The bipartite depolarizing family
//
//   Phi[alpha, beta, gamma] = 1 Tr + alpha 1_A Tr (x) I + beta I (x) 1_B Tr
//                             + gamma I
//
// its single-system relative chi[a, c], local depolarizing maps and Hadamard
// channels. Choi matrices are state-normalized:
//
//   R_phi = (phi (x) I)(|E><E|),  |E> = d^{-1/2} sum_x |x>|x>,
//
// with the output factor first. For maps on AB the doubled space is ordered
// A B A' B'.

#include "bidepo/tensor_core.hpp"

#include <array>
#include <functional>

namespace bidepo {

using LinearMap = std::function<CMatrix(const CMatrix&)>;

struct PhiParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  Dims dims;
};

/// Unnormalized member of the family: the coefficient of 1 Tr is free.
/// Compositions inside the family land here before rescaling.
struct PhiCoefficients {
  double trace = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  static PhiCoefficients from(const PhiParams& p) {
    return {1.0, p.alpha, p.beta, p.gamma};
  }
};

struct ChiParams {
  double a = 0.0;
  double c = 0.0;
  int n = 2;
};

struct DepolParams {
  double lambda = 1.0;
  int d = 2;
};

struct SuperOp {
  CMatrix choi;  // state-normalized, size dim^2
  int dim = 0;   // input = output dimension
};

CMatrix phi_apply(const PhiParams& p, const CMatrix& x);
CMatrix phi_apply(const PhiCoefficients& c, Dims dims, const CMatrix& x);
LinearMap phi_map(const PhiParams& p);

CMatrix chi_apply(const ChiParams& p, const CMatrix& x);

SuperOp phi_choi(const PhiParams& p);
SuperOp phi_choi(const PhiCoefficients& c, Dims dims);

/// Closed-form Choi spectrum, ascending, with multiplicities
/// (dA^2-1)(dB^2-1), dA^2-1, dB^2-1 and 1 for the four distinct values.
RVector phi_choi_spectrum(const PhiParams& p);
std::array<double, 4> phi_choi_distinct_eigenvalues(const PhiCoefficients& c,
                                                    Dims dims);

/// Result of composing a local map u 1 Tr + v I after Phi on one side:
/// (local (x) I) o Phi_p = scale * Phi_params. When scale vanishes the
/// composition has no representative with unit trace coefficient and only
/// `raw` is meaningful.
struct ComposeResult {
  bool degenerate = false;
  double scale = 0.0;
  PhiParams params;
  PhiCoefficients raw;
};

ComposeResult compose_local(const PhiParams& p, Side side, double u, double v);

/// u 1 Tr + v I on a d-dimensional system.
LinearMap trace_plus_identity(double u, double v, int d);

LinearMap depolarizing_map(DepolParams p);
SuperOp depolarizing_choi(DepolParams p);

/// Delta_q1 (x) Delta_q2 = scale * Phi[params] for interior q values, with
/// scale = (1 - q1)(1 - q2)/d^2.
/// Points with q in {0, 1} are flagged degenerate and carry no params.
struct LocalProductForm {
  bool degenerate = false;
  double scale = 0.0;
  PhiParams params;
};

LocalProductForm local_product_as_phi(double q1, double q2, int d);
LinearMap local_product_map(double q1, double q2, int d);

/// zeta_A(X) = A o X in the canonical basis. Completely positive iff A is
/// positive semidefinite; the flag records whether that holds (to -1e-10).
struct HadamardChannel {
  CMatrix multiplier;
  bool completely_positive = false;

  CMatrix operator()(const CMatrix& x) const;
};

HadamardChannel hadamard_channel(CMatrix a);

/// Applies `map` to one tensor factor of an operator on d1 x d2.
CMatrix apply_on_factor(const LinearMap& map, const CMatrix& m, int d1, int d2,
                        Side side);

/// Numerical Choi matrix from matrix units.
SuperOp choi_of(const LinearMap& map, int dim);

/// phi(X) = d Tr_2[R (1 (x) X^T)].
CMatrix apply_via_choi(const SuperOp& op, const CMatrix& x);

}  // namespace bidepo
