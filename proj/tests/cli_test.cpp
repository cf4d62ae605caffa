#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "support.hpp"
#include "tauhh/cli.hpp"
#include "tauhh/report.hpp"

namespace tauhh {
namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "tauhh");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::size_t dim_of(const DimReport& r, const std::string& invariant, std::size_t degree) {
  for (const auto& row : r.rows) {
    if (row.invariant == invariant && row.degree == degree) return row.dimension;
  }
  ADD_FAILURE() << "no row " << invariant << " " << degree;
  return 0;
}

DimReport json_run(const std::vector<std::string>& args) {
  std::vector<std::string> full = {"--format", "json"};
  full.insert(full.end(), args.begin(), args.end());
  CliRun r = run(full);
  EXPECT_EQ(r.code, 0) << r.err;
  return parse_json_report(r.out);
}

std::vector<DimRow> table_rows(const std::string& text) {
  std::vector<DimRow> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) continue;
    std::istringstream fields(line);
    DimRow row;
    fields >> row.invariant >> row.degree >> row.dimension;
    rows.push_back(row);
  }
  return rows;
}

TEST(Cli, HhOnLambdaQ) {
  DimReport r = json_run({"hh", test::data_path("lambda_q2.quiver"), "--max-degree", "3"});
  EXPECT_EQ(dim_of(r, "HH_cohomology", 0), 2u);
  EXPECT_EQ(dim_of(r, "HH_cohomology", 1), 2u);
  EXPECT_EQ(dim_of(r, "HH_cohomology", 2), 1u);
  EXPECT_EQ(dim_of(r, "HH_cohomology", 3), 0u);
}

TEST(Cli, TauOnTauNotDerived) {
  DimReport r = json_run({"tau", test::data_path("tau_not_derived.quiver"), "--max-degree", "1"});
  EXPECT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(dim_of(r, "tauHH_cohomology", 1), 2u);
  EXPECT_EQ(dim_of(r, "tauHH_homology", 1), 3u);
}

TEST(Cli, TauOnLambdaQ) {
  DimReport r = json_run({"tau", test::data_path("lambda_q2.quiver")});
  for (std::size_t n = 3; n <= 6; ++n) EXPECT_EQ(dim_of(r, "tauHH_cohomology", n), 2 * n + 3);
}

TEST(Cli, DualAndFileCoefficients) {
  DimReport self = json_run({"tau", test::data_path("aba.quiver"), "--max-degree", "3"});
  DimReport dual = json_run(
      {"tau", test::data_path("aba.quiver"), "--max-degree", "3", "--coefficients", "dual"});
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(dim_of(self, "tauHH_homology", n), dim_of(dual, "tauHH_cohomology", n));
  }
  DimReport file = json_run({"hh", test::data_path("two_cycle_bimodule.quiver"), "--coefficients",
                             "file", "--max-degree", "2"});
  EXPECT_EQ(file.rows.size(), 6u);
  CliRun missing = run({"hh", test::data_path("aba.quiver"), "--coefficients", "file"});
  EXPECT_EQ(missing.code, kExitInput);
  EXPECT_NE(missing.err.find("bimodule"), std::string::npos);
}

TEST(Cli, CheckReportsTheCertificate) {
  DimReport r = json_run({"check", test::data_path("no_go_further.quiver")});
  EXPECT_EQ(dim_of(r, "dim", 0), 5u);
  EXPECT_EQ(dim_of(r, "nilpotency_index", 0), 3u);
  EXPECT_EQ(dim_of(r, "peirce(y,y)", 0), 2u);
}

TEST(Cli, ExtAndClassify) {
  DimReport e = json_run({"ext", test::data_path("lambda_q2.quiver"), "--max-degree", "6"});
  for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(dim_of(e, "ext_total", n), n + 1);
  DimReport c = json_run({"classify", test::data_path("aba.quiver")});
  EXPECT_EQ(dim_of(c, "plus_witnesses", 8), 1u);
  bool evidence = false;
  for (const auto& n : c.notes) evidence = evidence || n == "infinite + global dimension: evidence";
  EXPECT_TRUE(evidence);
}

TEST(Cli, RsqSubcommand) {
  DimReport r = json_run({"rsq", test::data_path("kronecker.quiver"), "--max-degree", "3"});
  EXPECT_EQ(dim_of(r, "HH_cohomology", 1), 3u);
  DimReport loop = json_run({"rsq", test::data_path("one_loop_rsq.quiver"), "--max-degree", "4"});
  EXPECT_EQ(dim_of(loop, "tauHH_homology", 1), 2u);
  EXPECT_EQ(dim_of(loop, "tauHH_homology", 2), 1u);
  ASSERT_FALSE(loop.notes.empty());
  EXPECT_NE(loop.notes[0].find("unavailable"), std::string::npos);
  CliRun bad = run({"rsq", test::data_path("aba.quiver")});
  EXPECT_EQ(bad.code, kExitInput);
  EXPECT_NE(bad.err.find("b*a"), std::string::npos) << bad.err;
}

TEST(Cli, ExitCodes) {
  CliRun loop = run({"check", test::data_path("one_loop_free.quiver")});
  EXPECT_EQ(loop.code, kExitInput);
  EXPECT_NE(loop.err.find("admissibility"), std::string::npos) << loop.err;
  EXPECT_EQ(run({"check", test::data_path("missing.quiver")}).code, kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(run({}).code, kExitInput);
  EXPECT_EQ(run({"--format", "xml", "check", test::data_path("aba.quiver")}).code, kExitInput);
  CliRun help = run({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("classify"), std::string::npos);
  CliRun capped = run({"--cell-cap", "10", "hh", test::data_path("lambda_q2.quiver")});
  EXPECT_EQ(capped.code, kExitFailure);
  EXPECT_NE(capped.err.find("resource"), std::string::npos);
  CliRun cap = run({"--degree-cap", "2", "check", test::data_path("no_go_further.quiver")});
  EXPECT_EQ(cap.code, kExitInput);
}

TEST(Cli, TableAndJsonAgree) {
  const std::vector<std::vector<std::string>> commands = {
      {"check", test::data_path("tau_not_derived.quiver")},
      {"ext", test::data_path("no_go_further.quiver"), "--max-degree", "4"},
      {"hh", test::data_path("aba.quiver"), "--max-degree", "3"},
      {"tau", test::data_path("lambda_q2.quiver"), "--max-degree", "4"},
      {"rsq", test::data_path("two_cycle_rsq.quiver"), "--max-degree", "4"},
      {"classify", test::data_path("lambda_q2.quiver"), "--bound", "5"},
  };
  for (const auto& cmd : commands) {
    SCOPED_TRACE(cmd[0]);
    CliRun table = run(cmd);
    ASSERT_EQ(table.code, 0) << table.err;
    DimReport json = json_run(cmd);
    EXPECT_EQ(table_rows(table.out), json.rows);
    std::vector<std::string> csv_cmd = {"--format", "csv"};
    csv_cmd.insert(csv_cmd.end(), cmd.begin(), cmd.end());
    CliRun csv = run(csv_cmd);
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "invariant,degree,dimension");
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'),
              static_cast<long>(json.rows.size() + 1));
  }
}

}  // namespace
}  // namespace tauhh
