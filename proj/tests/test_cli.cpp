#include "lef/cli.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "lef/report.hpp"

namespace {

struct CliResult {
  int code = 0;
  std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = lef::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DeterminantExample) {
  const CliResult r =
      run_cli({"det", "--t", "2", "--a", "1", "--b", "1", "--c", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "closed: 6\ngauss: 6\nagree: true\n");
}

TEST(Cli, DeterminantPrimeField) {
  const CliResult r = run_cli({"det", "--t", "2", "--a", "1", "--char", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "closed: 6 mod 7\ngauss: 6 mod 7\nagree: true\n");
}

TEST(Cli, HilbertRow) {
  const CliResult r = run_cli({"hilbert", "--t", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 3 6 6 3 0\n");
}

TEST(Cli, PointsListing) {
  const CliResult r = run_cli({"points", "--t", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
  EXPECT_TRUE(r.out.starts_with("[1 : 0 : 0 : 0]\n"));
}

TEST(Cli, VerdictsAreDataNotExitCodes) {
  const CliResult holds = run_cli({"wlp", "--t", "1"});
  EXPECT_EQ(holds.code, 0);
  EXPECT_NE(holds.out.find("verdict:  true"), std::string::npos);

  const CliResult fails = run_cli({"wlp", "--t", "2"});
  EXPECT_EQ(fails.code, 0);  // a false verdict is still a success
  EXPECT_NE(fails.out.find("verdict:  false"), std::string::npos);
}

TEST(Cli, SlpCommand) {
  const CliResult r = run_cli({"slp", "--t", "1", "--char", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("property: SLP"), std::string::npos);
  EXPECT_NE(r.out.find("verdict:  false"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"unknown"}).code, 2);
  EXPECT_EQ(run_cli({"wlp"}).code, 2);  // --t is required
  EXPECT_EQ(run_cli({"wlp", "--t", "2", "--format", "yaml"}).code, 2);
  EXPECT_FALSE(run_cli({"wlp"}).err.empty());
}

TEST(Cli, DomainErrorsExitThree) {
  const CliResult in_n = run_cli({"wlp", "--t", "2", "--a=-1"});
  EXPECT_EQ(in_n.code, 3);
  EXPECT_NE(in_n.err.find("non-Artinian section"), std::string::npos);

  EXPECT_EQ(run_cli({"det", "--t", "0"}).code, 3);
  EXPECT_EQ(run_cli({"points", "--t", "3", "--char", "3"}).code, 3);
  EXPECT_EQ(run_cli({"hilbert", "--t", "2", "--char", "4"}).code, 3);
  EXPECT_EQ(run_cli({"conjecture", "--t-max", "2", "--char", "5"}).code, 3);
}

TEST(Cli, HelpExitsZero) {
  const CliResult r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

TEST(Cli, SectionComparison) {
  const CliResult r = run_cli({"section", "--t", "1", "--a", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("agree: true"), std::string::npos);
  EXPECT_EQ(run_cli({"section", "--t", "2", "--a=-1"}).code, 3);
}

TEST(Cli, SweepTableOrderingAndResilience) {
  const std::vector<std::string> args{
      "sweep", "--property", "wlp", "--t-max", "2", "--a", "0",
      "--a", "1", "--a=-1", "--char", "0", "--char", "2"};
  const CliResult r = run_cli(args);
  EXPECT_EQ(r.code, 0);

  // 2 t-values x 3 a-values x 2 characteristics + header.
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 13);

  // Row order is t, then a, then characteristic.
  const auto t1 = r.out.find("\n1  ");
  const auto t2 = r.out.find("\n2  ");
  EXPECT_NE(t1, std::string::npos);
  EXPECT_NE(t2, std::string::npos);
  EXPECT_LT(t1, t2);

  // a = -1 lands in N: recorded in-row, not fatal.
  EXPECT_NE(r.out.find("n/a"), std::string::npos);
  EXPECT_NE(r.out.find("non-Artinian section"), std::string::npos);
  // a = 0 keeps the even-t failure note.
  EXPECT_NE(r.out.find("determinant vanishes identically"), std::string::npos);

  // Byte-identical on a second run.
  EXPECT_EQ(run_cli(args).out, r.out);
}

TEST(Cli, SweepSlpProperty) {
  const CliResult r = run_cli(
      {"sweep", "--property", "slp", "--t-max", "1", "--a", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SLP"), std::string::npos);
  EXPECT_NE(r.out.find("true"), std::string::npos);
}

TEST(Cli, SweepStructuredRoundTrips) {
  const CliResult r = run_cli({"sweep", "--property", "wlp", "--t-max", "1",
                               "--a", "1", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  const lef::LefschetzReport rep = lef::parse_report(r.out);
  EXPECT_TRUE(rep.verdict);
  ASSERT_TRUE(rep.context.t.has_value());
  EXPECT_EQ(*rep.context.t, 1u);
  EXPECT_EQ(lef::to_structured(rep), r.out);
}

TEST(Cli, SweepStructuredErrorCell) {
  const CliResult r = run_cli({"sweep", "--property", "wlp", "--t-max", "1",
                               "--a=-1", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.starts_with("lefschetz.cell v1\n"));
  EXPECT_NE(r.out.find("error: non-Artinian section"), std::string::npos);
}

TEST(Cli, ConjectureTable) {
  const CliResult r =
      run_cli({"conjecture", "--t-max", "2", "--a", "1", "--a", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);  // header + 4
  EXPECT_EQ(r.out.find("false"), std::string::npos);
  EXPECT_NE(r.out.find("true"), std::string::npos);
}

TEST(Cli, StructuredSingleReportRoundTrips) {
  const CliResult r =
      run_cli({"wlp", "--t", "1", "--a", "1", "--format", "structured"});
  EXPECT_EQ(r.code, 0);
  const lef::LefschetzReport rep = lef::parse_report(r.out);
  EXPECT_EQ(lef::to_structured(rep), r.out);
  ASSERT_TRUE(rep.context.a.has_value());
  EXPECT_EQ(*rep.context.a, lef::Scalar::one(lef::FieldCtx::rationals()));
}
