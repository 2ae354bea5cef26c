#include <gtest/gtest.h>

#include <random>

#include "betti/errors.hpp"
#include "betti/hilbert.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace betti;
using support::artinian;
using support::ideal;

TEST(HilbertFunction, RejectsBadInput) {
  EXPECT_THROW(artinian({2, 1}), DomainError);
  EXPECT_THROW(artinian({1, -1}), DomainError);
  EXPECT_THROW(artinian({1, 0, 1}), DomainError);
  EXPECT_NO_THROW(HilbertFunction({1, 0, 1}, Tail::Unspecified));
}

TEST(HilbertFunction, TailSemantics) {
  auto h = artinian({1, 3, 4, 4, 1, 1, 1});
  EXPECT_EQ(h(6), 1);
  EXPECT_EQ(h(7), 0);
  EXPECT_EQ(h(100), 0);
  EXPECT_EQ(h.socle_degree(), 6);
  EXPECT_EQ(h, artinian({1, 3, 4, 4, 1, 1, 1, 0, 0}));
  HilbertFunction open({1, 2, 3}, Tail::Unspecified);
  EXPECT_THROW(open(3), DomainError);
}

TEST(HfOfQuotient, SevenDegreeExample) {
  auto L = ideal(3, {"x^2", "x*y", "x*z^2", "y^4", "y^3*z", "y^2*z^2", "y*z^3", "z^7"});
  auto h = hf_of_quotient(L, 8);
  EXPECT_EQ(h.values(), (std::vector<long>{1, 3, 4, 4, 1, 1, 1, 0, 0}));
  EXPECT_EQ(h.tail(), Tail::Zero);
}

TEST(HfOfQuotient, SmallCases) {
  auto h = hf_of_quotient(ideal(1, {"x"}), 3);
  EXPECT_EQ(h.values(), (std::vector<long>{1, 0, 0, 0}));
  EXPECT_EQ(h.tail(), Tail::Zero);

  auto open = hf_of_quotient(ideal(2, {"x^2"}), 4);
  EXPECT_EQ(open.tail(), Tail::Unspecified);
  EXPECT_EQ(open.values(), (std::vector<long>{1, 2, 2, 2, 2}));
}

TEST(HfOfQuotient, CodimTwoExample) {
  auto L = ideal(2, {"x^4", "x^3*y", "x^2*y^5", "x*y^8", "y^10"});
  EXPECT_EQ(hf_of_quotient(L, 11).values(),
            (std::vector<long>{1, 2, 3, 4, 3, 3, 3, 2, 2, 1, 0, 0}));
}

TEST(LexSegment, Examples) {
  EXPECT_EQ(lex_segment(3, 2, 2),
            (std::vector<Monomial>{parse_monomial("x^2", 3), parse_monomial("x*y", 3)}));
  EXPECT_TRUE(lex_segment(3, 2, 0).empty());
  EXPECT_EQ(lex_segment(2, 4, 2),
            (std::vector<Monomial>{parse_monomial("x^4", 2), parse_monomial("x^3*y", 2)}));
  EXPECT_THROW(lex_segment(2, 2, 4), DomainError);
  EXPECT_THROW(lex_segment(2, 2, -1), DomainError);
}

TEST(Shadow, Examples) {
  auto sh = shadow({parse_monomial("x^2", 2)});
  EXPECT_EQ(sh, (std::vector<Monomial>{parse_monomial("x^3", 2), parse_monomial("x^2*y", 2)}));
  EXPECT_TRUE(shadow({}).empty());
  auto two = shadow({parse_monomial("x^2", 2), parse_monomial("x*y", 2)});
  EXPECT_EQ(two.size(), 3u);
  EXPECT_EQ(two.back(), parse_monomial("x*y^2", 2));
  EXPECT_THROW(shadow({parse_monomial("x", 2), parse_monomial("x^2", 2)}), DomainError);
}

TEST(Admissibility, Examples) {
  EXPECT_TRUE(is_admissible(artinian({1, 3, 4, 4, 1, 1, 1}), 3));
  EXPECT_TRUE(is_admissible(artinian({1, 5, 1, 1, 1}), 5));
  auto bad = is_admissible(HilbertFunction({1, 2, 4}, Tail::Unspecified), 2);
  EXPECT_FALSE(bad);
  ASSERT_TRUE(bad.failing_degree.has_value());
  EXPECT_EQ(*bad.failing_degree, 2);
}

TEST(Admissibility, AgreesWithContainmentOracle) {
  // Every sequence with small values in 2 and 3 variables, checked step by step.
  for (int n = 1; n <= 3; ++n) {
    for (long a = 0; a <= 4; ++a) {
      for (long b = 0; b <= 6; ++b) {
        for (long c = 0; c <= 6; ++c) {
          std::vector<long> values{1, a, b, c};
          bool fits = a <= count_monomials(n, 1) && b <= count_monomials(n, 2) &&
                      c <= count_monomials(n, 3);
          if (!fits) continue;
          bool expected = true;
          for (int t = 0; t < 3; ++t) {
            std::int64_t in_ideal = count_monomials(n, t) - values[t];
            std::int64_t next = count_monomials(n, t + 1) - values[t + 1];
            if (!oracle::shadow_contained(n, t, in_ideal, next)) expected = false;
          }
          HilbertFunction h(values, Tail::Unspecified);
          EXPECT_EQ(static_cast<bool>(is_admissible(h, n)), expected)
              << "n=" << n << " h=(1," << a << "," << b << "," << c << ")";
        }
      }
    }
  }
}

TEST(LexIdeal, CodimTwoExample) {
  auto L = lex_ideal(artinian({1, 2, 3, 4, 3, 3, 3, 2, 2, 1}), 2);
  EXPECT_EQ(L, ideal(2, {"x^4", "x^3*y", "x^2*y^5", "x*y^8", "y^10"}));
}

TEST(LexIdeal, SevenDegreeExampleIsMinimal) {
  auto L = lex_ideal(artinian({1, 3, 4, 4, 1, 1, 1}), 3);
  EXPECT_EQ(support::generator_strings(L),
            (std::vector<std::string>{"x^2", "x*y", "x*z^2", "y^4", "y^3*z", "y^2*z^2", "y*z^3",
                                      "z^7"}));
  EXPECT_EQ(support::generator_degrees(L), (std::vector<int>{2, 2, 3, 4, 4, 4, 4, 7}));
  EXPECT_EQ(L, oracle::brute_lex_ideal(artinian({1, 3, 4, 4, 1, 1, 1}), 3));
}

TEST(LexIdeal, RedundantGeneratorsAreDropped) {
  auto listed = ideal(3, {"x^2", "x*y", "x^2*z", "x*z^2", "x*y*z", "y^4", "y^3*z", "y^2*z^2",
                          "y*z^3", "z^7"});
  EXPECT_EQ(listed.size(), 8u);
  EXPECT_EQ(listed, lex_ideal(artinian({1, 3, 4, 4, 1, 1, 1}), 3));
}

TEST(LexIdeal, OneVariable) {
  EXPECT_EQ(lex_ideal(artinian({1, 1, 1, 0}), 1), ideal(1, {"x^3"}));
}

TEST(LexIdeal, RejectsInadmissible) {
  try {
    lex_ideal(HilbertFunction({1, 2, 4}, Tail::Unspecified), 2);
    FAIL() << "expected rejection";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.reason(), "macaulay-bound");
  }
}

TEST(LexIdeal, UnspecifiedTailIsFlagged) {
  auto L = lex_ideal(HilbertFunction({1, 2, 2}, Tail::Unspecified), 2);
  EXPECT_TRUE(L.truncated());
  EXPECT_EQ(L.valid_through(), 2);
  EXPECT_FALSE(lex_ideal(artinian({1, 2, 2}), 2).truncated());
}

TEST(LexIdeal, RandomRoundTripAndLexSegments) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + trial % 4;
    auto h = oracle::random_admissible_hf(rng, n, 7);
    auto L = lex_ideal(h, n);
    EXPECT_EQ(hf_of_quotient(L, h.last_index() + 2), h);
    EXPECT_TRUE(is_lex_ideal(L));
    EXPECT_EQ(L, oracle::brute_lex_ideal(h, n));
    for (int t = 0; t <= h.last_index() + 2; ++t) {
      EXPECT_EQ(oracle::count_standard_monomials(L, t), h(t));
    }
    const auto& gens = L.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
      for (std::size_t b = 0; b < gens.size(); ++b) {
        if (a != b) EXPECT_FALSE(divides(gens[a], gens[b]));
      }
    }
  }
}

TEST(MonomialIdeal, RejectsUnit) {
  try {
    MonomialIdeal(2, {Monomial::unit(2)});
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.reason(), "unit-generator");
  }
}

TEST(IsLexIdeal, DetectsNonLex) {
  EXPECT_TRUE(is_lex_ideal(ideal(2, {"x^2", "x*y"})));
  EXPECT_FALSE(is_lex_ideal(ideal(2, {"x*y"})));
  EXPECT_FALSE(is_lex_ideal(ideal(2, {"x^2", "y^2"})));
}
