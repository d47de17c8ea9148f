#include <gtest/gtest.h>

#include <functional>
#include <set>

#include "cubics/orientation.hpp"

using namespace cubics;

TEST(DegreeProfile, Basics) {
  DegreeProfile p(12, {7, 3, 5});
  EXPECT_EQ(p.degrees(), (std::vector<long>{3, 5, 7}));
  EXPECT_EQ(p.weight_count(), 6u);
  EXPECT_EQ(p.bundle_rank(), 48);
  EXPECT_TRUE(p.rank_matches());
  EXPECT_EQ(p.to_string(), "(12,[3,5,7])");
  EXPECT_THROW(DegreeProfile(4, {}), DomainError);
  EXPECT_THROW(DegreeProfile(1, {1}), DomainError);
  EXPECT_THROW(DegreeProfile(3, {1, 1, 1}), DomainError);
  EXPECT_THROW(parse_degrees("3,,5"), DomainError);
}

TEST(Check, Examples) {
  auto a = check(DegreeProfile(4, {5}));
  EXPECT_TRUE(a.orientable);
  EXPECT_EQ(a.reason, "orientable");

  auto b = check(DegreeProfile(7, {9}));
  EXPECT_TRUE(b.rank_ok);
  EXPECT_FALSE(b.orientable);
  EXPECT_FALSE(b.r_parity_ok);

  auto c = check(DegreeProfile(4, {3}));
  EXPECT_FALSE(c.rank_ok);
  EXPECT_NE(c.reason.find("10"), std::string::npos);
  EXPECT_NE(c.reason.find("16"), std::string::npos);

  auto d = check(DegreeProfile(4, {4}));
  EXPECT_TRUE(d.vanishing);
  EXPECT_EQ(d.reason, "even degree: Euler class vanishes, count 0");
}

TEST(Check, OddCountOfThreeModFour) {
  // 3m+1 = 2 mod 4 exactly when m = 3 mod 4, so the rank condition
  // already forces this count to be even.
  auto r = check(DegreeProfile(8, {3, 7}));
  EXPECT_TRUE(r.rank_ok);
  EXPECT_EQ(r.count_neg_mod4, 2);
  auto s = check(DegreeProfile(9, {3, 3, 5}));  // 10+10+16 = 36 = 4·9
  EXPECT_TRUE(s.rank_ok);
  EXPECT_EQ(s.count_neg_mod4, 2);
  EXPECT_FALSE(s.orientable);  // n odd needs r even
}

TEST(Enumerate, UpToTwelve) {
  std::vector<std::string> got;
  for (const auto& p : enumerate_orientable(12)) got.push_back(p.to_string());
  std::vector<std::string> want = {"(4,[5])",      "(5,[3,3])",    "(10,[13])",
                                   "(11,[3,11])",  "(11,[5,9])",   "(11,[7,7])",
                                   "(12,[3,3,9])", "(12,[3,5,7])", "(12,[5,5,5])"};
  EXPECT_EQ(got, want);
  EXPECT_EQ(enumerate_orientable(4).size(), 1u);
  EXPECT_TRUE(enumerate_orientable(3).empty());
}

TEST(Enumerate, ExhaustiveAgainstBruteForce) {
  // All multisets of degrees >= 3 (any parity) with sum(3m+1) = 4n.
  for (long n = 4; n <= 16; ++n) {
    std::set<std::vector<long>> brute;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long min_m, long left) {
      if (left == 0) {
        if (check(DegreeProfile(n, cur)).orientable) brute.insert(cur);
        return;
      }
      for (long m = min_m; 3 * m + 1 <= left; ++m) {
        cur.push_back(m);
        rec(m, left - (3 * m + 1));
        cur.pop_back();
      }
    };
    rec(3, 4 * n);
    std::set<std::vector<long>> listed;
    for (const auto& p : enumerate_orientable(n)) {
      if (p.n() == n) listed.insert(p.degrees());
    }
    EXPECT_EQ(listed, brute) << n;
  }
}

TEST(Check, RankConditionForcesEvenCount) {
  for (const auto& p : enumerate_orientable(16)) EXPECT_EQ(check(p).count_neg_mod4 % 2, 0);
  auto r = check(DegreeProfile(6, {7}));  // 22 != 24, and one degree = 3 mod 4
  EXPECT_FALSE(r.rank_ok);
  EXPECT_EQ(r.count_neg_mod4, 1);
}

TEST(Enumerate, ParityLinkAndTwistView) {
  for (const auto& p : enumerate_orientable(16)) {
    auto r = check(p);
    EXPECT_TRUE(r.orientable);
    EXPECT_EQ(p.n() % 2 == 0, p.r() % 2 == 1) << p.to_string();
    EXPECT_TRUE(r.twist_parity_ok) << p.to_string();
  }
}

TEST(Constants, PluckerParity) {
  for (long m = 3; m <= 41; m += 2) {
    bool odd = mpz_odd_p(orientation_constants(m).m_m.get_mpz_t()) != 0;
    EXPECT_EQ(odd, m % 4 == 1) << m;
  }
}
