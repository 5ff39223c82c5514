#include "bidepo/cli.hpp"
#include "bidepo/analytic_classify.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

using namespace bidepo;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"bidepo"};
  argv.insert(argv.end(), args);
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json classify_json(std::initializer_list<const char*> args) {
  std::vector<const char*> a{"classify", "--json"};
  a.insert(a.end(), args);
  std::vector<const char*> argv{"bidepo"};
  argv.insert(argv.end(), a.begin(), a.end());
  std::ostringstream out, err;
  EXPECT_EQ(run_cli(int(argv.size()), argv.data(), out, err), kExitOk) << err.str();
  return json::parse(out.str());
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// Cells with cp and cocp but not eb.
std::size_t gap_cells(const std::string& csv) {
  std::size_t count = 0;
  const auto rows = csv_rows(csv);
  for (std::size_t i = 1; i < rows.size(); ++i)
    count += rows[i][4] == "1" && rows[i][5] == "1" && rows[i][6] == "0";
  return count;
}

}  // namespace

TEST(CliClassify, Examples) {
  const json v = classify_json({"--da", "2", "--db", "6", "--alpha", "1", "--beta", "1", "--gamma", "1"});
  EXPECT_TRUE(v["report"]["eb"].get<bool>());

  // Four-digit rounding lands just outside the CP region.
  const json rounded = classify_json(
      {"--da", "2", "--db", "6", "--alpha", "-0.1667", "--beta", "-0.5", "--gamma", "0.6667"});
  EXPECT_FALSE(rounded["report"]["cp"].get<bool>());
  EXPECT_TRUE(rounded["report"]["cocp"].get<bool>());
  EXPECT_FALSE(rounded["report"]["eb"].get<bool>());

  const json exact = classify_json(
      {"--da", "2", "--db", "6", "--alpha", "-1/6", "--beta", "-0.5", "--gamma", "2/3"});
  EXPECT_TRUE(exact["report"]["cp"].get<bool>());
  EXPECT_TRUE(exact["report"]["cocp"].get<bool>());
  EXPECT_FALSE(exact["report"]["eb"].get<bool>());
  EXPECT_NEAR(exact["alpha"].get<double>(), -1.0 / 6, 1e-16);

  const json zero = classify_json({"--alpha", "0", "--beta", "0", "--gamma", "0"});
  for (const char* k : {"positive", "cp", "cocp", "eb", "ppt_inducing", "ea"})
    EXPECT_TRUE(zero["report"][k].get<bool>()) << k;
  EXPECT_TRUE(zero["report"]["slacks"].contains("eb.alpha+1/dB"));
}

TEST(CliClassify, TableOutput) {
  const CliRun r = run({"classify", "--da", "2", "--db", "3", "--alpha", "0.5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("dims 2x3"), std::string::npos);
  EXPECT_NE(r.out.find("slacks"), std::string::npos);
}

TEST(CliClassify, BadInput) {
  EXPECT_EQ(run({"classify", "--alpha", "abc"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "--alpha", "1/0"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "--da", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(CliSweep, HeaderAndShape) {
  const CliRun r = run({"sweep", "--da", "2", "--db", "3", "--steps", "3", "--plane", "gamma=0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 10u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "alpha,beta,gamma,positive,cp,cocp,eb,ppt_inducing,ea");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].size(), 9u);
    EXPECT_EQ(rows[i][2], "0.5");
  }
  // alpha is the outer axis.
  EXPECT_EQ(rows[1][0], "-1");
  EXPECT_EQ(rows[1][1], "-1");
  EXPECT_EQ(rows[2][1], "0.5");
  EXPECT_EQ(rows[4][0], "0.5");
}

TEST(CliSweep, GapSetIsNonEmptyOnlyForUnequalDimensions) {
  const CliRun a = run({"sweep", "--da", "2", "--db", "6", "--range", "-1:2", "--steps", "61"});
  const CliRun b = run({"sweep", "--da", "2", "--db", "2", "--range", "-1:2", "--steps", "61"});
  ASSERT_EQ(a.code, kExitOk);
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_GT(gap_cells(a.out), 0u);
  EXPECT_EQ(gap_cells(b.out), 0u);
  EXPECT_EQ(csv_rows(a.out).size(), 61u * 61u * 61u + 1u);
}

TEST(CliSweep, SingleCellMatchesClassify) {
  const CliRun r = run({"sweep", "--da", "2", "--db", "6", "--plane", "alpha=1", "--plane", "beta=1",
                     "--plane", "gamma=1"});
  ASSERT_EQ(r.code, kExitOk);
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  const json c = classify_json({"--da", "2", "--db", "6", "--alpha", "1", "--beta", "1", "--gamma", "1"});
  const char* keys[] = {"positive", "cp", "cocp", "eb", "ppt_inducing", "ea"};
  for (int k = 0; k < 6; ++k)
    EXPECT_EQ(rows[1][3 + k], c["report"][keys[k]].get<bool>() ? "1" : "0") << keys[k];
}

TEST(CliSweep, DeterministicAndKernelIndependent) {
  const CliRun a = run({"sweep", "--da", "3", "--db", "4", "--steps", "21"});
  const CliRun b = run({"sweep", "--da", "3", "--db", "4", "--steps", "21"});
  const CliRun c = run({"sweep", "--da", "3", "--db", "4", "--steps", "21", "--serial"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
}

TEST(CliSweep, FileOutput) {
  const auto path = std::filesystem::temp_directory_path() / "bidepo_cli_test.csv";
  const std::string p = path.string();
  const CliRun r = run({"sweep", "--steps", "4", "--out", p.c_str()});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(path, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(text, run({"sweep", "--steps", "4"}).out);
  std::filesystem::remove(path);

  EXPECT_EQ(run({"sweep", "--out", "/nonexistent-dir/x.csv"}).code, kExitUsage);
}

TEST(CliSweep, BadFlags) {
  EXPECT_EQ(run({"sweep", "--steps", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--plane", "delta=1"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--plane", "gamma"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--range", "2"}).code, kExitUsage);
}

TEST(CliVerify, Suites) {
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kExitUsage);
  const CliRun h = run({"verify", "--suite", "hadamard"});
  EXPECT_EQ(h.code, kExitOk) << h.out;
  EXPECT_NE(h.out.find("[PASS]"), std::string::npos);
  const CliRun c = run({"verify", "--suite", "certificates", "--seed", "7"});
  EXPECT_EQ(c.code, kExitOk) << c.out;
  std::size_t lines = 0;
  for (char ch : c.out) lines += ch == '\n';
  EXPECT_EQ(lines, 2u);
}

TEST(CliVerify, SeedFromEnvironment) {
  ::setenv("BIDEPO_SEED", "7", 1);
  const CliRun env = run({"verify", "--suite", "certificates"});
  ::unsetenv("BIDEPO_SEED");
  const CliRun flag = run({"verify", "--suite", "certificates", "--seed", "7"});
  EXPECT_EQ(env.code, kExitOk);
  // Summary lines carry timings; compare the check outcome only.
  EXPECT_EQ(env.out.substr(0, 10), flag.out.substr(0, 10));

  ::setenv("BIDEPO_SEED", "not-a-number", 1);
  const CliRun bad = run({"verify", "--suite", "hadamard"});
  ::unsetenv("BIDEPO_SEED");
  EXPECT_EQ(bad.code, kExitUsage);
}

TEST(CliDemo, PptEntangled) {
  const CliRun r = run({"demo", "ppt-entangled", "--da", "2", "--db", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_GE(j["min_pt_eigenvalue"].get<double>(), -1e-12);
  EXPECT_GE(j["min_eigenvalue"].get<double>(), -1e-12);
  EXPECT_LT(j["witness_value"].get<double>(), 0.0);
  EXPECT_TRUE(j["entanglement_expected"].get<bool>());
  EXPECT_FALSE(j.contains("state"));

  const json eq = json::parse(run({"demo", "ppt-entangled", "--da", "2", "--db", "2", "--state"}).out);
  EXPECT_FALSE(eq["entanglement_expected"].get<bool>());
  EXPECT_TRUE(eq.contains("warning"));
  EXPECT_EQ(eq["state"]["rows"].get<int>(), 16);

  EXPECT_EQ(run({"demo", "ppt-entangled", "--da", "3", "--db", "2"}).code, kExitUsage);
}

TEST(CliDemo, Noise) {
  const json l = json::parse(run({"demo", "local-noise", "--d", "2"}).out);
  EXPECT_NEAR(l["q_star"].get<double>(), 0.577350, 1e-6);
  EXPECT_TRUE(l["ea_at_q_star"].get<bool>());
  const json g = json::parse(run({"demo", "global-noise", "--d", "2"}).out);
  EXPECT_NEAR(g["q_star"].get<double>(), 1.0 / 3, 1e-15);
  EXPECT_TRUE(g["ea_at_q_star"].get<bool>());
  EXPECT_EQ(run({"demo", "global-noise", "--d", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"demo"}).code, kExitUsage);
}
