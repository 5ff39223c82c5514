#pragma once

// Closed-form region membership for Phi[alpha, beta, gamma] and related maps.
// Every region is closed: an inequality holds when its slack is >= -1e-12.
// Slacks are the left-hand sides of the defining inequalities, unscaled.

#include "bidepo/map_family.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace bidepo {

inline constexpr double kBoundaryTol = 1e-12;

struct Slack {
  std::string_view group;
  std::string_view name;
  double value = 0.0;
};

using Slacks = std::vector<Slack>;

struct Verdict {
  bool holds = false;
  Slacks slacks;
};

double min_slack(const Slacks& slacks);
bool all_hold(const Slacks& slacks);

Verdict chi_positive(const ChiParams& p);
Verdict phi_positive(const PhiParams& p);
Verdict phi_cp(const PhiParams& p);
/// Complete positivity of an unnormalized family member (any trace coefficient).
Verdict family_cp(const PhiCoefficients& c, Dims dims);
Verdict phi_cocp(const PhiParams& p);
Verdict phi_eb(const PhiParams& p);
Verdict phi_ea(const PhiParams& p);

struct ClassificationReport {
  bool positive = false;
  bool cp = false;
  bool cocp = false;
  bool eb = false;
  /// Positive and PPT-inducing (equivalent to entanglement-annihilating
  /// within this family).
  bool ppt_inducing = false;
  bool ea = false;
  Slacks slacks;
};

ClassificationReport classify(const PhiParams& p);

/// Single-system depolarizing map Delta_lambda on a d-dimensional system.
struct DepolarizingReport {
  bool positive = false;
  bool cp = false;
  bool cocp = false;
  bool eb = false;
  Slacks slacks;
};

DepolarizingReport classify_depolarizing(double lambda, int d);

struct LocalNoiseVerdict {
  bool positive = false;
  bool ea = false;
  Slacks slacks;
};

/// Delta_q1 (x) Delta_q2 on d x d.
LocalNoiseVerdict classify_local_product(double q1, double q2, int d);

struct GlobalNoiseVerdict {
  bool positive = false;
  bool ea = false;
  double slack = 0.0;
};

/// q I + (1 - q) 1/d^2 Tr on d x d.
GlobalNoiseVerdict classify_global_depolarizing(double q, int d);

/// Endpoints of the symmetric annihilation interval q_low <= q <= q_high.
double local_noise_upper_threshold(int d);
double local_noise_lower_threshold(int d);
double global_noise_threshold(int d);

/// Earlier bounds for symmetric local noise: a sufficient annihilation bound
/// and a necessary PPT-inducing bound.
double prior_sufficient_bound(int d);
double prior_ppt_necessary_bound(int d);

}  // namespace bidepo
