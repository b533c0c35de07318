#include "lef/report.hpp"

#include <gtest/gtest.h>

using lef::FieldCtx;
using lef::LefschetzReport;
using lef::parse_report;
using lef::Scalar;
using lef::to_structured;

namespace {

std::vector<LefschetzReport> sample_reports() {
  const FieldCtx q = FieldCtx::rationals();
  const FieldCtx f7 = FieldCtx::prime_field(7);
  std::vector<LefschetzReport> reps;

  LefschetzReport base = lef::wlp_via_det(2, Scalar::one(q), q);
  base.context.t = 2;
  reps.push_back(base);

  reps.push_back(lef::wlp_via_det(2, Scalar::zero(q), q));  // no witness

  LefschetzReport full = lef::wlp_full(
      lef::ideal_J(2, Scalar::one(q)),
      lef::HomogPoly::linear_form(
          {Scalar::one(q), Scalar::one(q), -Scalar::one(q)}));
  full.context.t = 2;
  full.context.a = Scalar::one(q);
  reps.push_back(full);

  reps.push_back(lef::wlp_via_det(1, Scalar::parse("1/2", q), q));
  // a = 3 would land in N over F_7 (3 * 2 = -1); a = 2 stays Artinian.
  reps.push_back(lef::wlp_via_det(2, Scalar::from_integer(2, f7), f7));
  reps.push_back(lef::slp_conjecture_check(2, Scalar::one(q)));
  return reps;
}

}  // namespace

TEST(Report, StructuredRoundTripIsExact) {
  for (const LefschetzReport& rep : sample_reports()) {
    const std::string text = to_structured(rep);
    const LefschetzReport back = parse_report(text);
    EXPECT_EQ(back, rep);
    EXPECT_EQ(to_structured(back), text);  // byte-identical re-serialization
  }
}

TEST(Report, StructuredIsDeterministic) {
  const FieldCtx q = FieldCtx::rationals();
  EXPECT_EQ(to_structured(lef::wlp_via_det(2, Scalar::one(q), q)),
            to_structured(lef::wlp_via_det(2, Scalar::one(q), q)));
}

TEST(Report, StructuredLayout) {
  const FieldCtx q = FieldCtx::rationals();
  LefschetzReport rep = lef::wlp_via_det(1, Scalar::one(q), q);
  const std::string text = to_structured(rep);
  EXPECT_EQ(text.substr(0, text.find('\n')), "lefschetz.report v1");
  EXPECT_NE(text.find("\nproperty: WLP\n"), std::string::npos);
  EXPECT_NE(text.find("\nverdict: true\n"), std::string::npos);
  EXPECT_NE(text.find("\nwitness.b: 1\n"), std::string::npos);
  EXPECT_NE(text.find("\nmaps: 1\n"), std::string::npos);
  EXPECT_TRUE(text.ends_with("end\n"));
}

TEST(Report, ParseRejectsMalformedInput) {
  const FieldCtx q = FieldCtx::rationals();
  const std::string good = to_structured(lef::wlp_via_det(1, Scalar::one(q), q));

  EXPECT_THROW(parse_report(""), lef::InvalidParameter);
  EXPECT_THROW(parse_report("nonsense\n"), lef::InvalidParameter);
  EXPECT_THROW(parse_report(good + "extra\n"), lef::InvalidParameter);

  std::string truncated = good;
  truncated.resize(truncated.find("verdict:"));
  EXPECT_THROW(parse_report(truncated), lef::InvalidParameter);

  std::string half_witness = good;
  const auto pos = half_witness.find("witness.c: 1");
  half_witness.replace(pos, 12, "witness.c: -");
  EXPECT_THROW(parse_report(half_witness), lef::InvalidParameter);
}

TEST(Report, TableLayout) {
  const FieldCtx q = FieldCtx::rationals();
  LefschetzReport rep = lef::wlp_via_det(2, Scalar::one(q), q);
  rep.context.t = 2;
  const std::string table = lef::render_table(rep);
  EXPECT_NE(table.find("property: WLP"), std::string::npos);
  EXPECT_NE(table.find("verdict:  true"), std::string::npos);
  EXPECT_NE(table.find("witness:  b="), std::string::npos);
  EXPECT_NE(table.find("maximal"), std::string::npos);
}

TEST(Report, ColumnFormatterAligns) {
  const std::string got =
      lef::format_columns({{"a", "bb", "c"}, {"ddd", "e", "ff"}});
  EXPECT_EQ(got, "a    bb  c\nddd  e   ff\n");
}
