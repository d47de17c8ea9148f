#include <gtest/gtest.h>

#include "cubics/combinatorics.hpp"

using namespace cubics;

namespace {

Monomial4 mono(int a, int b, int c, int d) { return {{a, b, c, d}}; }

}  // namespace

TEST(Classify, Examples) {
  EXPECT_EQ(classify(mono(2, 0, 0, 0)), MonomialSign::kPositive);
  EXPECT_EQ(classify(mono(0, 1, 1, 0)), MonomialSign::kNegative);
  EXPECT_EQ(classify(mono(1, 1, 0, 0)), MonomialSign::kNeutral);
  EXPECT_EQ(classify(mono(1, 1, 1, 0)), MonomialSign::kPositive);
}

TEST(Star, Examples) {
  EXPECT_EQ(star(mono(2, 0, 0, 0)), mono(0, 2, 0, 0));
  EXPECT_EQ(star(mono(1, 1, 0, 0)), mono(1, 1, 0, 0));
  EXPECT_EQ(star(mono(1, 0, 1, 0)), mono(0, 1, 0, 1));
}

TEST(CanonicalOrder, DegreeTwo) {
  std::vector<Monomial4> want = {mono(2, 0, 0, 0), mono(0, 2, 0, 0), mono(1, 0, 1, 0),
                                 mono(0, 1, 0, 1), mono(1, 0, 0, 1), mono(0, 1, 1, 0),
                                 mono(0, 0, 2, 0), mono(0, 0, 0, 2), mono(1, 1, 0, 0),
                                 mono(0, 0, 1, 1)};
  EXPECT_EQ(canonical_order(2), want);
}

TEST(CanonicalOrder, LowDegrees) {
  EXPECT_EQ(canonical_order(1), (std::vector<Monomial4>{mono(1, 0, 0, 0), mono(0, 1, 0, 0),
                                                        mono(0, 0, 1, 0), mono(0, 0, 0, 1)}));
  EXPECT_EQ(canonical_order(0), (std::vector<Monomial4>{mono(0, 0, 0, 0)}));
}

TEST(CanonicalOrder, Lengths) {
  for (int m = 0; m <= 13; ++m) {
    EXPECT_EQ(canonical_order(m).size(), binomial(m + 3, 3).get_ui()) << m;
  }
}

TEST(CanonicalPermutationSign, FrozenValues) {
  const int want[] = {1, 1, 1, -1, -1, 1, 1, 1, 1, 1, 1, -1, -1, 1};
  for (int m = 0; m <= 13; ++m) EXPECT_EQ(canonical_permutation_sign(m), want[m]) << m;
}

TEST(WeightRange, Examples) {
  EXPECT_EQ(count_weight_range(WeightRange::kBelowA1PlusA2, 3), 2);
  EXPECT_EQ(count_weight_range(WeightRange::kBelowA2, 5), 0);
  EXPECT_EQ(count_weight_range(WeightRange::kBelowA1, 5), 2);
  EXPECT_THROW(weight_range_from_id(7), DomainError);
  EXPECT_THROW(count_weight_range(WeightRange::kBelowA1, 4), DomainError);
}

TEST(WeightRange, ClosedForms) {
  for (long m = 3; m <= 13; m += 2) {
    for (int c = 1; c <= 6; ++c) {
      auto wr = weight_range_from_id(c);
      EXPECT_EQ(count_weight_range(wr, m), weight_range_closed_form(wr, m)) << c << " " << m;
    }
  }
}

TEST(SwapCount, Examples) {
  EXPECT_EQ(bundle_swap_count(3, FixedPoint(3)), 1);
  EXPECT_EQ(bundle_swap_count(5, FixedPoint(1)), 6);
  EXPECT_EQ(bundle_swap_count(3, FixedPoint(6)), 1);
  EXPECT_THROW(bundle_swap_count(4, FixedPoint(1)), DomainError);
}

TEST(SwapCount, FrozenTables) {
  const long m3[] = {2, 2, 1, 1, 2, 1};
  const long m5[] = {6, 8, 4, 6, 10, 2};
  for (int y = 1; y <= 6; ++y) {
    EXPECT_EQ(bundle_swap_count(3, FixedPoint(y)), m3[y - 1]);
    EXPECT_EQ(bundle_swap_count(5, FixedPoint(y)), m5[y - 1]);
  }
}

TEST(SwapCount, Parities) {
  for (long m = 3; m <= 13; m += 2) {
    for (int y = 1; y <= 6; ++y) {
      bool odd = bundle_swap_count(m, FixedPoint(y)) % 2 == 1;
      bool want_odd = m % 4 == 3 && (y == 3 || y == 4 || y == 6);
      EXPECT_EQ(odd, want_odd) << m << " y" << y;
    }
  }
}

TEST(Monomials, StarAndClassifyProperties) {
  for (int m = 0; m <= 9; ++m) {
    const long a1 = 4L * m + 1;
    for (const auto& g : monomials_lex(m)) {
      EXPECT_EQ(star(star(g)), g);
      auto c = classify(g);
      long w = g.weight(a1, 1);
      EXPECT_EQ(c == MonomialSign::kPositive, w > 0) << g.to_string();
      EXPECT_EQ(c == MonomialSign::kNeutral, w == 0) << g.to_string();
      if (c == MonomialSign::kPositive) {
        EXPECT_EQ(classify(star(g)), MonomialSign::kNegative);
      }
      if (c == MonomialSign::kNeutral) {
        EXPECT_EQ(star(g), g);
      }
    }
  }
}

TEST(Monomials, OddDegreeHasOnlyPairs) {
  for (int m = 1; m <= 13; m += 2) {
    for (const auto& g : canonical_order(m)) EXPECT_NE(classify(g), MonomialSign::kNeutral);
  }
}
