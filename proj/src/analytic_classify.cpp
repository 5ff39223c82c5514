#include "bidepo/analytic_classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bidepo {

double min_slack(const Slacks& slacks) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : slacks) m = std::min(m, s.value);
  return m;
}

bool all_hold(const Slacks& slacks) { return min_slack(slacks) >= -kBoundaryTol; }

namespace {

Verdict make(Slacks s) {
  Verdict v;
  v.holds = all_hold(s);
  v.slacks = std::move(s);
  return v;
}

void append(Slacks& into, const Slacks& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace

Verdict chi_positive(const ChiParams& p) {
  if (p.a >= 0.0) {
    return make({{"chi", "a", p.a}, {"chi", "c+a/n+1", p.c + p.a / p.n + 1.0}});
  }
  return make({{"chi", "a+2", p.a + 2.0}, {"chi", "a+c+1", p.a + p.c + 1.0}});
}

Verdict phi_positive(const PhiParams& p) {
  const double s = p.alpha + p.beta;
  Slacks sl{{"positive", "alpha+1", p.alpha + 1.0}, {"positive", "beta+1", p.beta + 1.0}};
  if (s >= 0.0) {
    sl.push_back({"positive", "gamma+(alpha+beta)/n+1", p.gamma + s / p.dims.n() + 1.0});
  } else {
    sl.push_back({"positive", "alpha+beta+gamma+1", s + p.gamma + 1.0});
  }
  return make(std::move(sl));
}

Verdict family_cp(const PhiCoefficients& c, Dims dims) {
  // Distinct Choi eigenvalues scaled by dA*dB.
  const double dA = dims.dA;
  const double dB = dims.dB;
  return make({{"cp", "trace", c.trace},
               {"cp", "trace+dB*alpha", c.trace + dB * c.alpha},
               {"cp", "trace+dA*beta", c.trace + dA * c.beta},
               {"cp", "trace+dB*alpha+dA*beta+dA*dB*gamma",
                c.trace + dB * c.alpha + dA * c.beta + dA * dB * c.gamma}});
}

Verdict phi_cp(const PhiParams& p) {
  const double dA = p.dims.dA;
  const double dB = p.dims.dB;
  return make({{"cp", "alpha+1/dB", p.alpha + 1.0 / dB},
               {"cp", "beta+1/dA", p.beta + 1.0 / dA},
               {"cp", "1+dB*alpha+dA*beta+dA*dB*gamma",
                1.0 + dB * p.alpha + dA * p.beta + dA * dB * p.gamma}});
}

Verdict phi_cocp(const PhiParams& p) {
  const double a = p.alpha, b = p.beta, g = p.gamma;
  return make({{"cocp", "1+alpha+beta+gamma", 1.0 + a + b + g},
               {"cocp", "1+alpha-beta-gamma", 1.0 + a - b - g},
               {"cocp", "1-alpha+beta-gamma", 1.0 - a + b - g},
               {"cocp", "1-alpha-beta+gamma", 1.0 - a - b + g}});
}

Verdict phi_eb(const PhiParams& p) {
  // Stated for dA <= dB; the reversed case exchanges the roles of A and B.
  double a = p.alpha, b = p.beta;
  const double g = p.gamma;
  double dA = p.dims.dA, dB = p.dims.dB;
  if (dA > dB) {
    std::swap(a, b);
    std::swap(dA, dB);
  }
  // The last inequality is kept when dA == dB: it reduces to beta >= -1/dA,
  // which the remaining ones do not imply in that case.
  return make({{"eb", "alpha+1/dB", a + 1.0 / dB},
               {"eb", "1+dB*alpha+dA*beta+dA*dB*gamma", 1.0 + dB * a + dA * b + dA * dB * g},
               {"eb", "1-alpha+beta-gamma", 1.0 - a + b - g},
               {"eb", "1+alpha-beta-gamma", 1.0 + a - b - g},
               {"eb", "1-alpha-beta+gamma", 1.0 - a - b + g},
               {"eb", "(dA*dB-1)(dA*beta+1)-(dB-dA)(alpha+dA*gamma)",
                (dA * dB - 1.0) * (dA * b + 1.0) - (dB - dA) * (a + dA * g)}});
}

Verdict phi_ea(const PhiParams& p) {
  Verdict pos = phi_positive(p);
  Slacks sl;
  for (auto s : pos.slacks) {
    s.group = "ea";
    sl.push_back(s);
  }
  sl.push_back({"ea", "alpha+beta+2-gamma", p.alpha + p.beta + 2.0 - p.gamma});
  return make(std::move(sl));
}

ClassificationReport classify(const PhiParams& p) {
  const Verdict pos = phi_positive(p);
  const Verdict cp = phi_cp(p);
  const Verdict cocp = phi_cocp(p);
  const Verdict eb = phi_eb(p);
  const double ppt_slack = p.alpha + p.beta + 2.0 - p.gamma;

  ClassificationReport r;
  r.positive = pos.holds;
  r.cp = cp.holds;
  r.cocp = cocp.holds;
  r.eb = eb.holds;
  r.ppt_inducing = pos.holds && ppt_slack >= -kBoundaryTol;
  r.ea = r.ppt_inducing;
  r.slacks.reserve(pos.slacks.size() + cp.slacks.size() + cocp.slacks.size() +
                   eb.slacks.size() + 1);
  append(r.slacks, pos.slacks);
  append(r.slacks, cp.slacks);
  append(r.slacks, cocp.slacks);
  append(r.slacks, eb.slacks);
  r.slacks.push_back({"ea", "alpha+beta+2-gamma", ppt_slack});
  return r;
}

DepolarizingReport classify_depolarizing(double lambda, int d) {
  const double dd = d;
  DepolarizingReport r;
  r.slacks = {{"positive", "lambda+1/(d-1)", lambda + 1.0 / (dd - 1.0)},
              {"positive", "1-lambda", 1.0 - lambda},
              {"cp", "lambda+1/(d^2-1)", lambda + 1.0 / (dd * dd - 1.0)},
              {"cocp", "1/(d+1)-lambda", 1.0 / (dd + 1.0) - lambda}};
  const auto ok = [](double s) { return s >= -kBoundaryTol; };
  r.positive = ok(r.slacks[0].value) && ok(r.slacks[1].value);
  r.cp = ok(r.slacks[2].value) && ok(r.slacks[1].value);
  r.cocp = ok(r.slacks[0].value) && ok(r.slacks[3].value);
  r.eb = r.cp && r.cocp;
  return r;
}

LocalNoiseVerdict classify_local_product(double q1, double q2, int d) {
  const double dd = d;
  const double low = -1.0 / (dd - 1.0);
  LocalNoiseVerdict v;
  v.slacks = {{"positive", "q1+1/(d-1)", q1 - low},
              {"positive", "1-q1", 1.0 - q1},
              {"positive", "q2+1/(d-1)", q2 - low},
              {"positive", "1-q2", 1.0 - q2},
              {"ea", "2+(d-2)(q1+q2)-(d^2+2d-2)q1q2",
               2.0 + (dd - 2.0) * (q1 + q2) - (dd * dd + 2.0 * dd - 2.0) * q1 * q2}};
  v.positive = true;
  for (int k = 0; k < 4; ++k) v.positive = v.positive && v.slacks[k].value >= -kBoundaryTol;
  v.ea = v.positive && v.slacks[4].value >= -kBoundaryTol;
  return v;
}

GlobalNoiseVerdict classify_global_depolarizing(double q, int d) {
  const double d2 = double(d) * d;
  GlobalNoiseVerdict v;
  // Equivalent to (1-q)/d^2 Phi[0, 0, d^2 q/(1-q)].
  v.positive = q + 1.0 / (d2 - 1.0) >= -kBoundaryTol && 1.0 - q >= -kBoundaryTol;
  v.slack = 2.0 - (d2 + 2.0) * q;
  v.ea = v.positive && v.slack >= -kBoundaryTol;
  return v;
}

// Roots of (d^2+2d-2) q^2 - 2(d-2) q - 2 = 0, the symmetric case q1 = q2 of
// the annihilation inequality. Its discriminant is 12 d^2.
double local_noise_upper_threshold(int d) {
  const double dd = d;
  return (dd - 2.0 + std::sqrt(3.0) * dd) / (dd * dd + 2.0 * dd - 2.0);
}

double local_noise_lower_threshold(int d) {
  const double dd = d;
  return (dd - 2.0 - std::sqrt(3.0) * dd) / (dd * dd + 2.0 * dd - 2.0);
}

double global_noise_threshold(int d) { return 2.0 / (double(d) * d + 2.0); }

double prior_sufficient_bound(int d) {
  const double dd = d;
  return (dd - 2.0 + dd * std::sqrt(2.0 * dd / (dd + 1.0))) / ((dd - 1.0) * (dd + 2.0));
}

double prior_ppt_necessary_bound(int d) {
  const double r3 = std::sqrt(3.0);
  return (1.0 + r3) / (double(d) + 1.0 + r3);
}

}  // namespace bidepo
