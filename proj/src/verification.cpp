#include "bidepo/verification.hpp"

#include "bidepo/analytic_classify.hpp"
#include "bidepo/hadamard_tools.hpp"
#include "bidepo/numeric_oracle.hpp"
#include "bidepo/region_grid.hpp"
#include "bidepo/special_states.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

namespace bidepo {

bool CriterionResult::pass() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string dims_name(Dims d) { return std::to_string(d.dA) + "x" + std::to_string(d.dB); }

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double slack_named(const Slacks& s, std::string_view name) {
  for (const auto& x : s)
    if (x.name == name) return x.value;
  throw std::logic_error("no slack named " + std::string(name));
}

// Stream ids are spaced per criterion so that suites run in any order draw
// the same inputs.
std::uint64_t stream_id(int criterion, std::uint64_t k) { return std::uint64_t(criterion) << 40 | k; }

// 1. Numerical Choi spectrum against the closed form.
CriterionResult choi_spectrum(const VerifyOptions& o) {
  CriterionResult r{1, "Choi spectrum matches the closed form", {}, 0.0};
  const auto t0 = Clock::now();
  constexpr std::size_t points = 1000;
  std::vector<double> err(points);
  for_each_index(
      points,
      [&](std::size_t k) {
        Rng rng = make_stream(o.seed, stream_id(1, k));
        const Dims dims(uniform_int(rng, 2, 4), uniform_int(rng, 2, 5));
        const PhiParams p{uniform(rng, -2, 2), uniform(rng, -2, 2), uniform(rng, -2, 2), dims};
        const RVector numeric = herm_spectrum(phi_choi(p).choi);
        err[k] = (numeric - phi_choi_spectrum(p)).cwiseAbs().maxCoeff();
      },
      o.exec);
  const double worst = *std::max_element(err.begin(), err.end());
  const double t = seconds_since(t0);
  r.checks.push_back({"max spectrum deviation <= 1e-10 over 1000 points", worst <= 1e-10, worst,
                      fmt("%.3g", worst)});
  r.checks.push_back({"runtime < 10 s", t < 10.0, t, fmt("%.2f s", t)});
  return r;
}

// 2. Region nesting on random points.
CriterionResult region_lattice(const VerifyOptions& o) {
  CriterionResult r{2, "Region lattice implications", {}, 0.0};
  constexpr std::size_t points = 100000;
  struct Tally {
    int eb_not_cp_cocp = 0, cp_not_positive = 0, ea_mismatch = 0, eb = 0, cp = 0, ea = 0;
  };
  std::vector<Tally> per(points);
  for_each_index(
      points,
      [&](std::size_t k) {
        Rng rng = make_stream(o.seed, stream_id(2, k));
        const Dims dims(uniform_int(rng, 2, 4), uniform_int(rng, 2, 5));
        // Half the points in a wide box, half near the entanglement-breaking region.
        const double w = (k % 2 == 0) ? 3.0 : 1.2;
        const PhiParams p{uniform(rng, -w, w), uniform(rng, -w, w), uniform(rng, -w, w), dims};
        const ClassificationReport c = classify(p);
        const bool ea_expected = phi_positive(p).holds &&
                                 p.gamma - (p.alpha + p.beta + 2.0) <= kBoundaryTol;
        Tally& t = per[k];
        t.eb_not_cp_cocp = c.eb && !(c.cp && c.cocp);
        t.cp_not_positive = c.cp && !c.positive;
        t.ea_mismatch = c.ea != ea_expected;
        t.eb = c.eb;
        t.cp = c.cp;
        t.ea = c.ea;
      },
      o.exec);
  Tally sum;
  for (const auto& t : per) {
    sum.eb_not_cp_cocp += t.eb_not_cp_cocp;
    sum.cp_not_positive += t.cp_not_positive;
    sum.ea_mismatch += t.ea_mismatch;
    sum.eb += t.eb;
    sum.cp += t.cp;
    sum.ea += t.ea;
  }
  r.checks.push_back({"eb => cp and cocp", sum.eb_not_cp_cocp == 0, double(sum.eb_not_cp_cocp),
                      std::to_string(sum.eb_not_cp_cocp) + " violations, " +
                          std::to_string(sum.eb) + " eb points"});
  r.checks.push_back({"cp => positive", sum.cp_not_positive == 0, double(sum.cp_not_positive),
                      std::to_string(sum.cp_not_positive) + " violations, " +
                          std::to_string(sum.cp) + " cp points"});
  r.checks.push_back({"ea <=> positive and gamma <= alpha+beta+2", sum.ea_mismatch == 0,
                      double(sum.ea_mismatch),
                      std::to_string(sum.ea_mismatch) + " violations, " +
                          std::to_string(sum.ea) + " ea points"});
  r.checks.push_back({"every region populated", sum.eb > 0 && sum.cp > 0 && sum.ea > 0,
                      double(sum.eb), "eb/cp/ea counts above"});
  return r;
}

// 3. Closed forms against the brute-force oracles on a grid.
CriterionResult oracle_agreement(const VerifyOptions& o) {
  CriterionResult r{3, "Analytic and oracle verdicts agree", {}, 0.0};
  const Dims all_dims[] = {{2, 2}, {2, 3}, {3, 3}, {2, 6}};
  // Offset grid so that no point sits on a rational boundary by construction.
  constexpr int steps = 13;
  auto coord = [](int k) { return -1.45 + 0.3 * k; };
  for (std::size_t di = 0; di < std::size(all_dims); ++di) {
    const Dims dims = all_dims[di];
    const auto t0 = Clock::now();
    int compared = 0, positive_bad = 0, cp_bad = 0, cocp_bad = 0, eb_bad = 0, pos_true = 0,
        eb_true = 0;
    std::string first_bad;
    for (int i = 0; i < steps; ++i) {
      for (int j = 0; j < steps; ++j) {
        for (int k = 0; k < steps; ++k) {
          const PhiParams p{coord(i), coord(j), coord(k), dims};
          const ClassificationReport c = classify(p);
          bool clear = std::abs(p.alpha + p.beta) >= 1e-3;
          for (const auto& s : c.slacks) clear = clear && std::abs(s.value) >= 1e-3;
          if (!clear) continue;
          ++compared;
          const std::uint64_t seed =
              make_stream(o.seed, stream_id(3, di * 10000 + std::uint64_t((i * steps + j) * steps + k)))();
          const bool pos = oracle_positive(p, 500, seed, o.exec).holds(kOracleTol);
          const bool cp = oracle_cp(p).holds(kOracleTol);
          const bool cocp = oracle_cocp(p).holds(kOracleTol);
          const bool eb = oracle_eb(p).holds(kOracleTol);
          pos_true += pos;
          eb_true += eb;
          const bool bad = pos != c.positive || cp != c.cp || cocp != c.cocp || eb != c.eb;
          positive_bad += pos != c.positive;
          cp_bad += cp != c.cp;
          cocp_bad += cocp != c.cocp;
          eb_bad += eb != c.eb;
          if (bad && first_bad.empty()) {
            first_bad = " first at (" + fmt("%g", p.alpha) + ", " + fmt("%g", p.beta) + ", " +
                        fmt("%g", p.gamma) + ")";
          }
        }
      }
    }
    const double t = seconds_since(t0);
    const int bad = positive_bad + cp_bad + cocp_bad + eb_bad;
    r.checks.push_back(
        {dims_name(dims) + " verdicts agree", bad == 0 && compared > 0, double(bad),
         std::to_string(compared) + " points (" + std::to_string(pos_true) + " positive, " +
             std::to_string(eb_true) + " eb); mismatches positive/cp/cocp/eb = " +
             std::to_string(positive_bad) + "/" + std::to_string(cp_bad) + "/" +
             std::to_string(cocp_bad) + "/" + std::to_string(eb_bad) + first_bad});
    r.checks.push_back({dims_name(dims) + " runtime < 60 s", t < 60.0, t, fmt("%.2f s", t)});
  }
  return r;
}

// 4. The PPT but not entanglement-breaking gap.
CriterionResult ppt_not_eb(const VerifyOptions&) {
  CriterionResult r{4, "PPT-not-EB gap at 2x6 and its absence at 2x2", {}, 0.0};
  const PhiParams red{-1.0 / 6.0, -0.5, 2.0 / 3.0, Dims(2, 6)};
  const Verdict cp = phi_cp(red), cocp = phi_cocp(red), eb = phi_eb(red);
  const double line3 =
      slack_named(eb.slacks, "(dA*dB-1)(dA*beta+1)-(dB-dA)(alpha+dA*gamma)");
  r.checks.push_back({"(-1/6,-1/2,2/3) is cp", cp.holds, min_slack(cp.slacks),
                      "min slack " + fmt("%.3g", min_slack(cp.slacks))});
  r.checks.push_back({"(-1/6,-1/2,2/3) is cocp", cocp.holds, min_slack(cocp.slacks),
                      "min slack " + fmt("%.3g", min_slack(cocp.slacks))});
  r.checks.push_back({"last eb slack = -14/3", std::abs(line3 + 14.0 / 3.0) <= 1e-12, line3,
                      fmt("%.17g", line3)});
  const OracleVerdict ov = oracle_eb(red);
  r.checks.push_back({"composed-map test refutes eb", ov.worst < -1e-9 && ov.witness_family == 2,
                      ov.worst,
                      "family " + std::to_string(ov.witness_family) + ", value " + fmt("%.3g", ov.worst)});

  GridSpec spec;
  spec.axes = {Axis{-1, 2, 61}, Axis{-1, 2, 61}, Axis{-1, 2, 61}};
  auto gap_cells = [&](Dims d) {
    spec.dims = d;
    const RegionGrid g = sweep(spec);
    return std::count_if(g.cells.begin(), g.cells.end(),
                         [](const CellFlags& f) { return f.cp && f.cocp && !f.eb; });
  };
  const auto n22 = gap_cells(Dims(2, 2));
  const auto n26 = gap_cells(Dims(2, 6));
  r.checks.push_back({"2x2 grid has no cp & cocp & !eb cell", n22 == 0, double(n22),
                      std::to_string(n22) + " cells"});
  r.checks.push_back({"2x6 grid has cp & cocp & !eb cells", n26 > 0, double(n26),
                      std::to_string(n26) + " cells"});
  return r;
}

// 5. PPT entangled state detected by a positive map.
CriterionResult indecomposability(const VerifyOptions&) {
  CriterionResult r{5, "PPT entangled state and its witness", {}, 0.0};
  const PptEntangledState s = ppt_entangled_state(2, 3);
  const int d = 6;
  const double min_eig = min_eigenvalue(s.state);
  const double min_pt = min_eigenvalue(partial_transpose(s.state, d, d, Side::second));
  const LinearMap local = trace_plus_identity(1.0, -0.5, 3);
  const LinearMap on_ab = [&](const CMatrix& x) {
    return apply_on_factor(local, x, 2, 3, Side::second);
  };
  const double w = witness_detect(s.state, on_ab, d, d);
  r.checks.push_back({"state is PSD", min_eig >= -1e-12, min_eig, fmt("%.3g", min_eig)});
  r.checks.push_back({"state is PPT", min_pt >= -1e-12, min_pt, fmt("%.3g", min_pt)});
  r.checks.push_back({"witness value < -1e-6", w < -1e-6, w, fmt("%.17g", w)});
  return r;
}

// 6. Vertex certificates.
CriterionResult vertex_certificates(const VerifyOptions&) {
  CriterionResult r{6, "Separable certificates at the five EB vertices", {}, 0.0};
  for (const Dims dims : {Dims(2, 6), Dims(3, 3)}) {
    for (int v = 1; v <= 5; ++v) {
      const SeparableCertificate c = vertex_certificate(v, dims);
      r.checks.push_back({dims_name(dims) + " vertex " + std::to_string(v) + " reconstructs",
                          c.valid(1e-12), c.residual,
                          "residual " + fmt("%.3g", c.residual) + ", psd margin " +
                              fmt("%.3g", c.min_psd_margin)});
    }
  }
  return r;
}

// 7. Separable decomposition behind entanglement annihilation.
CriterionResult ea_decompositions(const VerifyOptions& o) {
  CriterionResult r{7, "EA decomposition for random 3x3 pure states", {}, 0.0};
  double residual = 0.0, a_min = std::numeric_limits<double>::infinity(),
         rem_min = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng = make_stream(o.seed, stream_id(7, k));
    const EaDecomposition e = ea_decomposition(random_pure(9, rng), 3);
    residual = std::max(residual, e.certificate.residual);
    a_min = std::min(a_min, e.multiplier_min_eigenvalue);
    rem_min = std::min(rem_min, e.remainder.minCoeff());
  }
  r.checks.push_back({"residual <= 1e-12", residual <= 1e-12, residual, fmt("%.3g", residual)});
  r.checks.push_back({"1 - 2 D + |psi><psi| is PSD", a_min >= -1e-12, a_min, fmt("%.3g", a_min)});
  r.checks.push_back({"remainder coefficients >= 0", rem_min >= -1e-12, rem_min,
                      fmt("%.3g", rem_min)});
  return r;
}

// 8. Noise thresholds.
CriterionResult noise_thresholds(const VerifyOptions&) {
  CriterionResult r{8, "Local and global noise thresholds", {}, 0.0};
  const double r3 = std::sqrt(3.0);
  auto local_flip = [&](int d, double q, bool upper) {
    const double eps = 1e-9;
    const bool inside = classify_local_product(q + (upper ? -eps : eps), q + (upper ? -eps : eps), d).ea;
    const bool outside = classify_local_product(q + (upper ? eps : -eps), q + (upper ? eps : -eps), d).ea;
    return inside && !outside;
  };
  const struct {
    int d;
    double q;
    bool upper;
    const char* name;
  } flips[] = {{2, 1.0 / r3, true, "d=2 flips at 1/sqrt3"},
               {2, -(r3 - 1.0) / (3.0 - r3), false, "d=2 flips at -(sqrt3-1)/(3-sqrt3)"},
               {3, (1.0 + r3) / (4.0 + r3), true, "d=3 flips at (1+sqrt3)/(4+sqrt3)"},
               {3, -(r3 - 1.0) / (4.0 - r3), false, "d=3 flips at -(sqrt3-1)/(4-sqrt3)"}};
  for (const auto& f : flips) {
    r.checks.push_back({f.name, local_flip(f.d, f.q, f.upper), f.q, fmt("%.17g", f.q)});
  }
  const bool g_in = classify_global_depolarizing(1.0 / 3.0 - 1e-12, 2).ea;
  const bool g_out = classify_global_depolarizing(1.0 / 3.0 + 1e-12, 2).ea;
  r.checks.push_back({"global d=2 flips at 1/3", g_in && !g_out, 1.0 / 3.0,
                      fmt("%.17g", global_noise_threshold(2))});
  for (int d = 2; d <= 6; ++d) {
    const double prior = prior_sufficient_bound(d);
    const double upper = (1.0 + r3) / (d + 1.0 + r3);
    const double lower = -(r3 - 1.0) / (d + 1.0 - r3);
    const double gap = upper - prior;
    // Strict containment, beyond rounding.
    const bool strict = gap > 1e-12 && prior > lower;
    r.checks.push_back({"d=" + std::to_string(d) + " prior bound strictly inside", strict, gap,
                        "gap " + fmt("%.3g", gap)});
  }
  return r;
}

// 9. Hadamard products.
CriterionResult hadamard_suite(const VerifyOptions& o) {
  CriterionResult r{9, "Hadamard product identities", {}, 0.0};
  double locc = 0.0;
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng = make_stream(o.seed, stream_id(9, k));
    const Dims dims = k < 50 ? Dims(2, 2) : Dims(2, 3);
    const CMatrix rho = random_density(dims.total(), rng);
    const CMatrix sigma = random_density(dims.total(), rng);
    const LoccHadamard h = locc_hadamard(rho, sigma, dims);
    locc = std::max(locc, max_abs(h.compressed - rho.cwiseProduct(sigma)));
  }
  r.checks.push_back({"LOCC projection gives rho o sigma", locc <= 1e-12, locc, fmt("%.3g", locc)});

  double cocp = std::numeric_limits<double>::infinity();
  for (std::uint64_t k = 0; k < 100; ++k) {
    Rng rng = make_stream(o.seed, stream_id(9, 1000 + k));
    const int d = 2 + int(k % 2);
    // Partial transposes of positive matrices are Choi matrices of coCP maps.
    const SuperOp a{partial_transpose(random_density(d * d, rng), d, d, Side::second), d};
    const SuperOp b{partial_transpose(random_density(d * d, rng), d, d, Side::second), d};
    const SuperOp c = cocp_hadamard_product(a, b);
    cocp = std::min(cocp, min_eigenvalue(partial_transpose(c.choi, d, d, Side::second)));
  }
  r.checks.push_back({"coCP closed under Hadamard product", cocp >= -1e-10, cocp,
                      fmt("%.3g", cocp)});

  const struct {
    int n, r, s, expected;
  } cases[] = {{6, 2, 3, 6}, {4, 2, 2, 4}, {5, 2, 3, 5}};
  for (const auto& c : cases) {
    const VandermondePair v = vandermonde_states({c.n, c.r, c.s, 0});
    const int rp = schmidt_rank(v.psi, c.n, c.n);
    const int rf = schmidt_rank(v.phi, c.n, c.n);
    const int rh = schmidt_rank(hadamard(v.psi, v.phi), c.n, c.n);
    const std::string name = "Vandermonde (" + std::to_string(c.n) + "," + std::to_string(c.r) +
                             "," + std::to_string(c.s) + ")";
    r.checks.push_back({name + " product rank " + std::to_string(c.expected),
                        rp == c.r && rf == c.s && rh == c.expected, double(rh),
                        "ranks " + std::to_string(rp) + "," + std::to_string(rf) + "," +
                            std::to_string(rh)});
  }
  return r;
}

// 10. Scalar inequalities.
CriterionResult scalar_inequalities(const VerifyOptions& o) {
  CriterionResult r{10, "Geometric inequality and simplex maximum", {}, 0.0};
  constexpr std::size_t tuples = 1000000;
  constexpr std::size_t chunk = 10000;
  std::vector<double> chunk_min(tuples / chunk);
  for_each_index(
      chunk_min.size(),
      [&](std::size_t c) {
        Rng rng = make_stream(o.seed, stream_id(10, c));
        std::normal_distribution<double> g;
        std::uniform_int_distribution<int> len(1, 8);
        Complex z[8];
        double m = std::numeric_limits<double>::infinity();
        for (std::size_t t = 0; t < chunk; ++t) {
          const int n = len(rng);
          for (int i = 0; i < n; ++i) z[i] = Complex(g(rng), g(rng));
          m = std::min(m, geometric_slack(std::span<const Complex>(z, std::size_t(n))));
        }
        chunk_min[c] = m;
      },
      o.exec);
  const double gmin = *std::min_element(chunk_min.begin(), chunk_min.end());
  r.checks.push_back({"geometric inequality slack >= -1e-12", gmin >= -1e-12, gmin,
                      fmt("%.3g", gmin)});
  double worst = 0.0;
  for (double a : {0.5, 1.0, 2.0, 5.0})
    for (int n : {2, 3, 4}) worst = std::max(worst, std::abs(simplex_fmax(a, n) - 1.0 / (1.0 + a / n)));
  r.checks.push_back({"simplex maximum = 1/(1+a/n)", worst <= 1e-6, worst, fmt("%.3g", worst)});
  return r;
}

const std::map<std::string_view, std::vector<int>>& suites() {
  static const std::map<std::string_view, std::vector<int>> s{
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}},
      {"positivity", {2, 3, 10}},
      {"cp", {1, 2, 3}},
      {"eb", {2, 3, 4, 5, 6}},
      {"ea", {2, 7, 8}},
      {"hadamard", {9}},
      {"certificates", {6, 7}},
  };
  return s;
}

}  // namespace

bool is_known_suite(std::string_view suite) { return suites().count(suite) > 0; }

std::vector<int> suite_criteria(std::string_view suite) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown suite: " + std::string(suite));
  return it->second;
}

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  using Fn = CriterionResult (*)(const VerifyOptions&);
  static constexpr Fn table[] = {choi_spectrum,       region_lattice,    oracle_agreement,
                                 ppt_not_eb,          indecomposability, vertex_certificates,
                                 ea_decompositions,   noise_thresholds,  hadamard_suite,
                                 scalar_inequalities};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id out of range");
  const auto t0 = Clock::now();
  CriterionResult r = table[id - 1](options);
  r.seconds = seconds_since(t0);
  return r;
}

std::vector<CriterionResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, options));
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char head[256];
  std::snprintf(head, sizeof head, "[%s] %2d %s (%.2f s)", r.pass() ? "PASS" : "FAIL", r.id,
                r.title.c_str(), r.seconds);
  std::string out = head;
  for (const auto& c : r.checks) {
    if (!c.pass) out += "\n       failed: " + c.name + (c.detail.empty() ? "" : " [" + c.detail + "]");
  }
  return out;
}

Json to_json(const CriterionResult& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j{{"name", c.name}, {"pass", c.pass}};
    j["value"] = std::isfinite(c.value) ? Json(c.value) : Json(nullptr);
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return Json{{"id", r.id}, {"title", r.title}, {"pass", r.pass()}, {"seconds", r.seconds},
              {"checks", std::move(checks)}};
}

}  // namespace bidepo
