#include <gtest/gtest.h>

#include <cstdlib>

#include "reeslab/decision.hpp"
#include "reeslab/errors.hpp"
#include "reeslab/io.hpp"
#include "reeslab/report.hpp"

using namespace reeslab;

namespace {

NormalizedTriangle g13() { return g_family_triangle(make_rat(13, 6)); }

}  // namespace

TEST(Decide, CharZero) {
  Verdict v = decide(g13(), Field(0));
  EXPECT_EQ(v.status, Status::NOT_FG_EXACT);
  ASSERT_TRUE(v.emu);
  EXPECT_FALSE(v.emu->holds);
  EXPECT_EQ(decide(g_family_triangle(make_rat(7, 3)), Field(0)).status, Status::FG_EXACT);
}

TEST(Decide, CharTwoAndThreeWitnesses) {
  for (int64_t p : {2, 3}) {
    Verdict v = decide(g13(), Field(p));
    EXPECT_EQ(v.status, Status::FG_WITNESS);
    ASSERT_TRUE(v.witness);
    EXPECT_EQ(v.witness->kind, "A4");
    EXPECT_EQ(v.witness->m, p);
  }
}

TEST(Decide, CohomologyWitnessWhenFactorizationDisabled) {
  SearchBounds b;
  b.m_max = 1;
  Verdict v = decide(g13(), Field(2), b);
  EXPECT_EQ(v.status, Status::FG_WITNESS);
  EXPECT_EQ(v.witness->kind, "C4");
  EXPECT_EQ(v.witness->r, 0);
  EXPECT_GT(v.witness->h0, 0);
}

TEST(Decide, CharFiveInconclusive) {
  SearchBounds b;
  b.j_max = 4;
  Verdict v = decide(g13(), Field(5), b);
  EXPECT_EQ(v.status, Status::NO_WITNESS_UP_TO_BOUNDS);
  int cohom = 0;
  for (const Probe& p : v.probes)
    if (auto* c = std::get_if<CohomProbe>(&p)) {
      EXPECT_EQ(c->report.h0, 0);
      ++cohom;
    }
  EXPECT_EQ(cohom, 8);
}

TEST(Decide, NarrowTriangleIsFG) {
  NormalizedTriangle t = normalize_triangle(read_triangle_file(std::string(REESLAB_DATA_DIR) + "/narrow.tri"));
  EXPECT_LT(t.W, 1);
  EXPECT_EQ(decide(t, Field(7)).status, Status::FG_EXACT);
}

TEST(Decide, NeverNegativeInPositiveCharacteristic) {
  for (Rat g : {make_rat(9, 4), make_rat(13, 6), make_rat(11, 4)})
    for (int64_t p : {5, 7}) {
      SearchBounds b;
      b.r_max = 0;
      EXPECT_NE(decide(g_family_triangle(g), Field(p), b).status, Status::NOT_FG_EXACT);
    }
}

TEST(Decide, BoundsValidation) {
  SearchBounds b;
  b.m_max = 0;
  EXPECT_THROW(decide(g13(), Field(5), b), RangeError);
  b = {};
  b.slack = 5;
  EXPECT_THROW(decide(g13(), Field(5), b), RangeError);
}

TEST(Decide, SlackEnvironmentOverride) {
  PeriodData pd = period_data(g13());
  setenv("REESLAB_SLACK", "30", 1);
  EXPECT_EQ(resolve_slack(pd, 0), 30);
  EXPECT_EQ(resolve_slack(pd, 20), 20);
  setenv("REESLAB_SLACK", "3", 1);
  EXPECT_THROW(resolve_slack(pd, 0), RangeError);
  unsetenv("REESLAB_SLACK");
  EXPECT_EQ(resolve_slack(pd, 0), 12);
}

TEST(Scan, FamilyCharZero) {
  std::vector<Rat> gs = {make_rat(9, 4), make_rat(7, 3), make_rat(5, 2), make_rat(8, 3), make_rat(11, 4)};
  std::vector<ScanRow> rows = scan_family(gs, Field(0));
  const bool expect[] = {false, true, true, true, false};
  for (size_t i = 0; i < rows.size(); ++i) {
    ASSERT_TRUE(rows[i].verdict) << rows[i].error;
    EXPECT_EQ(is_fg(rows[i].verdict->status), expect[i]);
  }
  EXPECT_THROW(scan_family({make_rat(1)}, Field(0)), RangeError);
}

TEST(Scan, CharTwo) {
  auto rows = scan_family({make_rat(13, 6)}, Field(2));
  ASSERT_TRUE(rows[0].verdict);
  EXPECT_TRUE(is_fg(rows[0].verdict->status));
}

TEST(Report, JsonRoundTrip) {
  for (int64_t p : {0, 3, 5}) {
    SearchBounds b;
    b.r_max = 0;
    std::string s = to_json(decide(g13(), Field(p), b));
    EXPECT_EQ(to_json(verdict_from_json(s)), s);
  }
  EXPECT_THROW(verdict_from_json("{"), ParseError);
  EXPECT_THROW(verdict_from_json("{}"), ParseError);
}

TEST(Report, JsonWitnessShape) {
  std::string s = to_json(decide(g13(), Field(3)));
  EXPECT_NE(s.find("\"verdict\": \"FG_WITNESS\""), std::string::npos);
  EXPECT_NE(s.find("\"kind\": \"A4\",\n    \"m\": 3"), std::string::npos);
}

TEST(Report, RoundTripUnitsStillVerify) {
  Verdict v = verdict_from_json(to_json(decide(g13(), Field(2))));
  ConeTables ct(v.triangle);
  bool found = false;
  for (const Probe& p : v.probes)
    if (auto* f = std::get_if<FactorizationOutcome>(&p); f && f->success) {
      EXPECT_TRUE(verify_factorization(*f, ct));
      found = true;
    }
  EXPECT_TRUE(found);
}

TEST(Arithmetic, Factorizations) {
  EXPECT_EQ(format_factorization(factor_integer(Int(101757))), "3*107*317");
  EXPECT_EQ(format_factorization(factor_integer(Int(250258653))), "3^5*23*44777");
  EXPECT_EQ(format_factorization(factor_integer(Int(1))), "1");
  EXPECT_EQ(format_factorization(factor_integer(Int(-8))), "2^3");
}

TEST(Arithmetic, RemainderHelpers) {
  // 2f^2 + 3f + 1 = (2f + 1)(f + 1)
  auto [q, r] = divide_linear({Int(1), Int(3), Int(2)}, Int(2), Int(1));
  EXPECT_EQ(q, (std::vector<Int>{Int(1), Int(1)}));
  EXPECT_EQ(r, 0);
  // 4 * P(1/2) for P = 1 + f + f^2
  EXPECT_EQ(scaled_remainder({Int(1), Int(1), Int(1)}, Int(1), Int(2)), 7);
}

TEST(Suite, AllItemsPass) {
  for (const SuiteItem& it : example_rei_suite()) EXPECT_TRUE(it.pass) << it.id << ": " << it.detail;
}
