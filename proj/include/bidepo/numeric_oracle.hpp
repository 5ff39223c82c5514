#pragma once

// Brute-force checks of the closed-form regions: eigenvalue minimization over
// structured inputs, Choi and partial-transpose spectra, witness detection.
// Sampled inputs come from independent streams make_stream(seed, k), so a
// witness can be regenerated from (seed, index) alone.

#include "bidepo/map_family.hpp"
#include "bidepo/parallel.hpp"

#include <cstdint>
#include <string>

namespace bidepo {

struct OracleVerdict {
  std::string property;
  double worst = 0.0;           // smallest eigenvalue found
  RVector witness_lambda;       // positivity: Schmidt weights of the worst input
  CVector witness_state;        // pure-input oracles: the worst input
  int witness_family = -1;      // EB: 0 Choi, 1 partial transpose, 2 composed map
  std::size_t witness_index = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  bool exact = true;            // false when only a necessary condition is tested
  double block_minimum = 0.0;   // positivity: reduced-block minimum at the witness

  bool holds(double tol = 1e-9) const { return worst >= -tol; }
};

inline constexpr double kOracleTol = 1e-9;

/// Phi(|Psi_l><Psi_l|), Psi_l = sum_i sqrt(l_i)|ii>, over the uniform point, the
/// simplex vertices and `samples` Dirichlet(1) draws.
OracleVerdict oracle_positive(const PhiParams& p, std::size_t samples, std::uint64_t seed,
                              Exec exec = Exec::parallel);
double positive_value_at(const PhiParams& p, const RVector& lambda);
/// Minimum over the blocks 1 + alpha l_j + beta l_i (i != j) and
/// 1 + (alpha+beta) D_l + gamma |psi><psi|.
double positive_block_minimum(const PhiParams& p, const RVector& lambda);

OracleVerdict oracle_cp(const PhiParams& p);
OracleVerdict oracle_cocp(const PhiParams& p);

/// Minimum over the Choi spectrum, the partial-transposed Choi spectrum and,
/// for unequal dimensions, the Choi spectrum of (1 Tr - I/n) applied after Phi
/// on the larger factor.
OracleVerdict oracle_eb(const PhiParams& p);
/// Smallest eigenvalue of one EB test family.
double eb_family_value(const PhiParams& p, int family);

/// Minimum partial-transpose eigenvalue of Phi(|Psi><Psi|) over
/// (|00>+|11>)/sqrt2 and `samples` Haar states.
OracleVerdict oracle_ppt_inducing(const PhiParams& p, std::size_t samples, std::uint64_t seed,
                                  Exec exec = Exec::parallel);
double ppt_value_at(const PhiParams& p, const CVector& psi);
CVector pure_sample(const PhiParams& p, std::uint64_t seed, std::size_t index);

/// Entanglement annihilation on pure inputs. For dA dB <= 6 PPT outputs are
/// separable and the verdict is exact; otherwise it is the PPT-inducing test
/// flagged exact = false.
OracleVerdict oracle_ea_small(const PhiParams& p, std::size_t samples, std::uint64_t seed,
                              Exec exec = Exec::parallel);
double ea_value_at(const PhiParams& p, const CVector& psi);

/// Smallest eigenvalue of (map (x) I)(state) for a state on d1 x d2; the map
/// acts on the first factor.
double witness_detect(const CMatrix& state, const LinearMap& map, int d1, int d2);

/// max over the simplex of sum_i l_i / (1 + a l_i): grid of the given
/// resolution, then pairwise coordinate ascent from the best grid point.
double simplex_fmax(double a, int n, int resolution = 50);

}  // namespace bidepo
