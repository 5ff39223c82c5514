#include "bidepo/cli.hpp"

#include "bidepo/analytic_classify.hpp"
#include "bidepo/json_io.hpp"
#include "bidepo/numeric_oracle.hpp"
#include "bidepo/region_grid.hpp"
#include "bidepo/special_states.hpp"
#include "bidepo/verification.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace bidepo {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t seed_or_env(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("BIDEPO_SEED"); env && *env) {
    try {
      std::size_t used = 0;
      const std::uint64_t s = std::stoull(env, &used);
      if (used == std::string(env).size()) return s;
    } catch (const std::exception&) {
    }
    throw UsageError("BIDEPO_SEED is not an unsigned integer");
  }
  return VerifyOptions{}.seed;
}

// Decimal or p/q, so that boundary points such as -1/6 are exact to rounding.
double parse_real(const std::string& text) {
  auto whole = [&](const std::string& t) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) throw UsageError("not a number: " + text);
    return v;
  };
  const auto slash = text.find('/');
  const double v = slash == std::string::npos
                       ? whole(text)
                       : whole(text.substr(0, slash)) / whole(text.substr(slash + 1));
  if (!std::isfinite(v)) throw UsageError("not a finite number: " + text);
  return v;
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void print_report(const PhiParams& p, const ClassificationReport& r, std::ostream& out) {
  out << "dims " << p.dims.dA << "x" << p.dims.dB << "  alpha " << num(p.alpha) << "  beta "
      << num(p.beta) << "  gamma " << num(p.gamma) << "\n\n";
  const std::pair<const char*, bool> rows[] = {{"positive", r.positive}, {"cp", r.cp},
                                               {"cocp", r.cocp},         {"eb", r.eb},
                                               {"ppt_inducing", r.ppt_inducing}, {"ea", r.ea}};
  for (const auto& [name, v] : rows) {
    char line[64];
    std::snprintf(line, sizeof line, "  %-13s %s\n", name, v ? "true" : "false");
    out << line;
  }
  out << "\nslacks (>= 0 holds)\n";
  for (const auto& s : r.slacks) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-10.*s %-48.*s % .6g\n", int(s.group.size()),
                  s.group.data(), int(s.name.size()), s.name.data(), s.value);
    out << line;
  }
}

// "gamma=0.5" -> (2, 0.5)
std::pair<int, double> parse_plane(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos) throw UsageError("--plane expects name=value, got " + text);
  const std::string name = text.substr(0, eq);
  int axis = -1;
  if (name == "alpha") axis = 0;
  if (name == "beta") axis = 1;
  if (name == "gamma") axis = 2;
  if (axis < 0) throw UsageError("--plane parameter must be alpha, beta or gamma");
  return {axis, parse_real(text.substr(eq + 1))};
}

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("--range expects lo:hi");
  return {parse_real(text.substr(0, colon)), parse_real(text.substr(colon + 1))};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bipartite depolarizing maps: classification, sweeps and verification", "bidepo"};
  app.require_subcommand(1);

  int da = 2, db = 2;
  std::string alpha = "0", beta = "0", gamma = "0";
  bool as_json = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one parameter point");
  classify_cmd->add_option("--da", da, "dimension of A")->capture_default_str();
  classify_cmd->add_option("--db", db, "dimension of B")->capture_default_str();
  classify_cmd->add_option("--alpha", alpha, "decimal or p/q")->capture_default_str();
  classify_cmd->add_option("--beta", beta)->capture_default_str();
  classify_cmd->add_option("--gamma", gamma)->capture_default_str();
  classify_cmd->add_flag("--json", as_json, "print JSON instead of a table");

  int sda = 4, sdb = 4, steps = 61;
  std::vector<std::string> planes;
  std::string range = "-1:2", out_path;
  bool serial = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Classify every cell of a parameter grid (CSV)");
  sweep_cmd->add_option("--da", sda)->capture_default_str();
  sweep_cmd->add_option("--db", sdb)->capture_default_str();
  sweep_cmd->add_option("--plane", planes, "fix a parameter, e.g. gamma=0.5 (repeatable)");
  sweep_cmd->add_option("--range", range, "lo:hi for every free parameter")->capture_default_str();
  sweep_cmd->add_option("--steps", steps, "grid points per free parameter")->capture_default_str();
  sweep_cmd->add_option("--out", out_path, "CSV path (stdout when omitted)");
  sweep_cmd->add_flag("--serial", serial, "use the serial reference kernel");

  std::string suite = "all";
  std::optional<std::uint64_t> seed;
  auto* verify_cmd = app.add_subcommand("verify", "Run acceptance checks");
  verify_cmd->add_option("--suite", suite, "all|positivity|cp|eb|ea|hadamard|certificates")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "root seed (falls back to BIDEPO_SEED)");

  auto* demo_cmd = app.add_subcommand("demo", "Emit a JSON artifact");
  demo_cmd->require_subcommand(1);
  int pda = 2, pdb = 3, nd = 2;
  bool with_state = false;
  auto* ppt_cmd = demo_cmd->add_subcommand("ppt-entangled", "PPT entangled state and witness");
  ppt_cmd->add_option("--da", pda)->capture_default_str();
  ppt_cmd->add_option("--db", pdb)->capture_default_str();
  ppt_cmd->add_flag("--state", with_state, "include the state matrix");
  auto* local_cmd = demo_cmd->add_subcommand("local-noise", "Local depolarizing thresholds");
  local_cmd->add_option("--d", nd)->capture_default_str();
  auto* global_cmd = demo_cmd->add_subcommand("global-noise", "Global depolarizing threshold");
  global_cmd->add_option("--d", nd)->capture_default_str();

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) {
      const PhiParams p{parse_real(alpha), parse_real(beta), parse_real(gamma), Dims(da, db)};
      const ClassificationReport r = classify(p);
      if (as_json) {
        Json j = to_json(p);
        j["report"] = to_json(r);
        out << j.dump(2) << "\n";
      } else {
        print_report(p, r, out);
      }
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      GridSpec spec;
      spec.dims = Dims(sda, sdb);
      if (steps < 1) throw UsageError("--steps must be positive");
      const auto [lo, hi] = parse_range(range);
      for (auto& a : spec.axes) a = Axis{lo, hi, steps};
      for (const auto& text : planes) {
        const auto [axis, value] = parse_plane(text);
        spec.axes[std::size_t(axis)] = Axis{value, value, 1};
      }
      const RegionGrid grid = sweep(spec, serial ? Exec::serial : Exec::parallel);
      if (out_path.empty()) {
        write_csv(grid, out);
      } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
          err << "error: cannot write " << out_path << "\n";
          return kExitUsage;
        }
        write_csv(grid, file);
        file.flush();
        if (!file) {
          err << "error: write to " << out_path << " failed\n";
          return kExitUsage;
        }
      }
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      if (!is_known_suite(suite)) {
        err << "error: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      VerifyOptions options;
      options.seed = seed_or_env(seed);
      Json failures = Json::array();
      for (int id : suite_criteria(suite)) {
        const CriterionResult r = run_criterion(id, options);
        out << summary_line(r) << "\n" << std::flush;
        if (!r.pass()) failures.push_back(to_json(r));
      }
      if (failures.empty()) return kExitOk;
      Json report{{"suite", suite}, {"seed", options.seed}, {"failed", std::move(failures)}};
      out << report.dump(2) << "\n";
      return kExitVerifyFailed;
    }

    if (ppt_cmd->parsed()) {
      const PptEntangledState s = ppt_entangled_state(pda, pdb);
      const int d = pda * pdb;
      const LinearMap local = trace_plus_identity(1.0, -1.0 / pda, pdb);
      const LinearMap on_ab = [&](const CMatrix& x) {
        return apply_on_factor(local, x, pda, pdb, Side::second);
      };
      Json j{{"demo", "ppt-entangled"},
             {"dA", pda},
             {"dB", pdb},
             {"coefficient", double(pda) * pdb - pdb + pda},
             {"min_eigenvalue", min_eigenvalue(s.state)},
             {"min_pt_eigenvalue", min_eigenvalue(partial_transpose(s.state, d, d, Side::second))},
             {"witness", "I_A (x) (1 Tr - I/dA)_B on AB"},
             {"witness_value", witness_detect(s.state, on_ab, d, d)},
             {"entanglement_expected", s.entanglement_expected}};
      if (!s.entanglement_expected) {
        j["warning"] = "dA == dB: the operator is separable and no detection is expected";
      }
      if (with_state) j["state"] = matrix_json(s.state);
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (local_cmd->parsed()) {
      if (nd < 2) throw UsageError("--d must be at least 2");
      Json j{{"demo", "local-noise"},
             {"d", nd},
             {"q_star", local_noise_upper_threshold(nd)},
             {"q_lower", local_noise_lower_threshold(nd)},
             {"positivity_range", {-1.0 / (nd - 1.0), 1.0}},
             {"prior_sufficient_bound", prior_sufficient_bound(nd)},
             {"prior_ppt_necessary_bound", prior_ppt_necessary_bound(nd)},
             {"ea_at_q_star", classify_local_product(local_noise_upper_threshold(nd),
                                                      local_noise_upper_threshold(nd), nd)
                                  .ea}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (global_cmd->parsed()) {
      if (nd < 2) throw UsageError("--d must be at least 2");
      const double q = global_noise_threshold(nd);
      Json j{{"demo", "global-noise"},
             {"d", nd},
             {"q_star", q},
             {"positivity_range", {-1.0 / (double(nd) * nd - 1.0), 1.0}},
             {"ea_at_q_star", classify_global_depolarizing(q, nd).ea}};
      out << j.dump(2) << "\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace bidepo
