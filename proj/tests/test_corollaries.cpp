#include <gtest/gtest.h>

#include <random>

#include "betti/codim2.hpp"
#include "betti/corollaries.hpp"
#include "betti/errors.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace betti;
using support::artinian;
using support::ideal;

TEST(SuccessiveDegrees, Examples) {
  auto two = check_successive_degrees(ideal(2, {"x^2", "x*y", "y^3"}));
  EXPECT_EQ(two.verdict, "applies");
  EXPECT_TRUE(two.consistent);
  EXPECT_TRUE(two.data["negative_cancellations"].empty());

  auto spread = check_successive_degrees(ideal(2, {"x^4", "x^3*y", "x^2*y^5", "x*y^8", "y^10"}));
  EXPECT_EQ(spread.verdict, "does-not-apply");

  auto single = check_successive_degrees(ideal(3, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}));
  EXPECT_EQ(single.verdict, "applies");
  EXPECT_TRUE(single.consistent);
}

TEST(SuccessiveDegrees, RandomTwoDegreeLexIdeals) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + trial % 4;
    int a = 1 + static_cast<int>(rng() % 4);
    auto report = check_successive_degrees(oracle::random_lex_ideal(rng, n, a, a + 1));
    EXPECT_EQ(report.verdict, "applies");
    EXPECT_TRUE(report.consistent);
  }
}

TEST(HibiMurai, Examples) {
  auto ok = check_hibi_murai(ideal(3, {"x^2", "x*y^3"}));
  EXPECT_EQ(ok.verdict, "holds");
  EXPECT_TRUE(ok.consistent);
  EXPECT_EQ(ok.data["projective_dimension"], 2);
  EXPECT_EQ(ok.data["depth"], 1);
  EXPECT_EQ(ok.data["top_total"], 1);

  EXPECT_EQ(check_hibi_murai(ideal(2, {"x^2", "x*y^2", "y^4"})).verdict, "hypothesis-fails");
  EXPECT_EQ(check_hibi_murai(ideal(2, {"x", "y^2"})).verdict, "hypothesis-fails");
}

TEST(HibiMurai, EveryLexIdealWithFewGenerators) {
  std::mt19937 rng(12);
  int applied = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 2 + trial % 3;
    auto L = lex_ideal(oracle::random_admissible_hf(rng, n, 6), n);
    auto report = check_hibi_murai(L);
    EXPECT_TRUE(report.consistent) << report.data.dump();
    if (report.verdict == "holds") ++applied;
  }
  for (int n = 2; n <= 4; ++n) {
    for (int s1 = 1; s1 <= 3; ++s1) {
      for (int s2 = 0; s2 <= 2; ++s2) {
        std::vector<int> a(n, 0), b(n, 0);
        a[0] = s1 + 1;
        b[0] = s1;
        b[1] = s2 + 1;
        MonomialIdeal L(n, {Monomial(a), Monomial(b)});
        if (!is_lex_ideal(L)) continue;
        auto report = check_hibi_murai(L);
        EXPECT_EQ(report.verdict, "holds");
        ++applied;
      }
    }
  }
  EXPECT_GT(applied, 0);
}

TEST(GorensteinTail, Examples) {
  auto bad = check_gorenstein_tail(artinian({1, 3, 4, 4, 1, 1, 1}), 3);
  EXPECT_EQ(bad.verdict, "not-gorenstein-admissible");
  EXPECT_TRUE(bad.consistent);
  EXPECT_EQ(bad.data["engine_min_last_betti"], 2);
  EXPECT_EQ(bad.data["closed_form_fires"], true);

  auto fine = check_gorenstein_tail(artinian({1, 3, 3, 1}), 3);
  EXPECT_EQ(fine.data["closed_form_fires"], false);
  EXPECT_EQ(fine.data["engine_min_last_betti"], 1);
  EXPECT_EQ(fine.verdict, "no-obstruction");

  auto short_tail = check_gorenstein_tail(artinian({1, 4, 5, 1}), 4);
  EXPECT_EQ(short_tail.data["closed_form_fires"], false);
  EXPECT_TRUE(short_tail.consistent);

  EXPECT_THROW(check_gorenstein_tail(artinian({1, 2, 1}), 3), DomainError);
  EXPECT_THROW(check_gorenstein_tail(artinian({1, 3, 2}), 3), DomainError);
}

TEST(GorensteinTail, SweepNeverContradictsEngine) {
  std::mt19937 rng(88);
  int fired = 0;
  for (int trial = 0; trial < 600; ++trial) {
    int n = 2 + trial % 3;
    auto h = oracle::random_admissible_hf(rng, n, 6);
    auto values = h.normalized().values();
    if (values.size() < 2 || values[1] != n || values.back() != 1) continue;
    auto report = check_gorenstein_tail(h, n);
    EXPECT_TRUE(report.consistent) << report.inputs.dump();
    if (report.data["closed_form_fires"] == true) ++fired;
  }
  // Hand-built inputs that trigger the closed form in every n.
  for (int n = 2; n <= 4; ++n) {
    std::vector<long> values{1, n};
    for (int t = 2; t <= n; ++t) values.push_back(n + 1);
    values.push_back(1);
    values.push_back(1);
    HilbertFunction h(values, Tail::Zero);
    if (!is_admissible(h, n)) continue;
    auto report = check_gorenstein_tail(h, n);
    EXPECT_TRUE(report.consistent);
    EXPECT_EQ(report.verdict, "not-gorenstein-admissible");
    ++fired;
  }
  EXPECT_GT(fired, 0);
}

TEST(Codim2Gorenstein, FinalExample) {
  auto report = check_codim2_gorenstein(artinian({1, 2, 3, 4, 3, 3, 3, 2, 2, 1}));
  EXPECT_EQ(report.verdict, "gorenstein-admissible");
  EXPECT_TRUE(report.consistent);
  const auto& witness = report.data["witness"];
  EXPECT_EQ(witness["positions"].size(), 3u);
  EXPECT_EQ(witness["generators"][0], "x^4-x^2*y^2-x^2*y^3-x^2*y^4+y^6");
  EXPECT_EQ(witness["generators"][1], "x^3*y-x*y^3-x*y^4");
  EXPECT_EQ(witness["verification"]["passed"], true);
}

TEST(Codim2Gorenstein, Inadmissible) {
  auto report = check_codim2_gorenstein(artinian({1, 2, 3, 1}));
  EXPECT_EQ(report.verdict, "not-gorenstein-admissible");
  EXPECT_TRUE(report.consistent);
  EXPECT_FALSE(report.data.contains("witness"));
  EXPECT_THROW(check_codim2_gorenstein(artinian({1, 3, 1})), DomainError);
}

TEST(Codim2Gorenstein, ExhaustiveSweep) {
  for (const auto& h : codim2_hilbert_functions(6)) {
    auto report = check_codim2_gorenstein(h);
    EXPECT_TRUE(report.consistent) << to_json(report).dump();
  }
}

TEST(Reports, Deterministic) {
  auto h = artinian({1, 2, 3, 4, 3, 3, 3, 2, 2, 1});
  EXPECT_EQ(to_json(check_codim2_gorenstein(h)).dump(), to_json(check_codim2_gorenstein(h)).dump());
}
