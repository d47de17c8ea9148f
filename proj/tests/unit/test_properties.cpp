#include <gtest/gtest.h>

#include <random>

#include "cubics/fixtures.hpp"
#include "cubics/localization.hpp"
#include "cubics/verify.hpp"

using namespace cubics;

namespace {

constexpr int kTrials = 120;

}  // namespace

TEST(Properties, PairSwapSymmetry) {
  std::mt19937_64 rng(11);
  const auto& rows = signature_table();
  for (int t = 0; t < kTrials; ++t) {
    const auto& p = rows[rng() % rows.size()].profile;
    auto w = random_generic_weights(p.weight_count(), rng());
    auto pairs = all_plane_pairs(w.size());
    const auto& pp = pairs[rng() % pairs.size()];
    Integer grass = grassmann_class(p.n(), w, pp);
    Rational a = 0, b = 0;
    for (const auto& v : fixed_point_terms_at(p, w[pp.i - 1], w[pp.j - 1], grass)) a += v;
    for (const auto& v : fixed_point_terms_at(p, w[pp.j - 1], w[pp.i - 1], grass)) b += v;
    EXPECT_EQ(a, b) << p.to_string() << " " << w.to_string();
  }
}

TEST(Properties, ScalingInvariance) {
  std::mt19937_64 rng(12);
  const auto& rows = signature_table();
  for (int t = 0; t < kTrials; ++t) {
    const auto& p = rows[rng() % rows.size()].profile;
    auto w = random_generic_weights(p.weight_count(), rng());
    auto pairs = all_plane_pairs(w.size());
    const auto& pp = pairs[rng() % pairs.size()];
    Integer lambda(static_cast<unsigned long>(2 + rng() % 1000));
    EXPECT_EQ(plane_contribution(p, w, pp), plane_contribution(p, w.scaled(lambda), pp))
        << p.to_string() << " " << w.to_string() << " x" << lambda;
  }
}

TEST(Properties, IntegralityAndWeightIndependence) {
  std::mt19937_64 rng(13);
  for (const auto& row : signature_table()) {
    for (int t = 0; t < kTrials / 9 + 1; ++t) {
      auto w = random_generic_weights(row.profile.weight_count(), rng());
      CountResult r;
      ASSERT_NO_THROW(r = signature(row.profile, w)) << w.to_string();
      EXPECT_EQ(r.signature, row.signature) << row.profile.to_string() << " " << w.to_string();
    }
  }
}

TEST(Properties, DimensionAudits) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < kTrials; ++t) {
    long m = 3 + 2 * static_cast<long>(rng() % 6);
    FixedPoint y(1 + static_cast<int>(rng() % 6));
    Integer a2(static_cast<unsigned long>(1 + 2 * (rng() % 5)));
    Integer a1 = 2 * m * a2 + 1 + 2 * static_cast<long>(rng() % 50);
    EXPECT_EQ(total_dimension(evaluate(bundle_basis_reps(m, y), a1, a2)), 3 * m + 1);
    EXPECT_EQ(total_dimension(evaluate(tangent_reps(y).reps, a1, a2)), 12);

    long n = 4 + static_cast<long>(rng() % 20);
    auto w = random_generic_weights(static_cast<std::size_t>((n + 1) / 2), rng());
    auto pairs = all_plane_pairs(w.size());
    EXPECT_EQ(total_dimension(grassmann_reps(n, w, pairs[rng() % pairs.size()]).reps),
              4 * (n - 3));
  }
}

TEST(Suites, AllPass) {
  for (const auto& rep : {oracle_suite(), combinatorics_suite(), invariance_suite(100, 5)}) {
    EXPECT_TRUE(rep.ok()) << rep.suite << ": " << rep.failures() << " failures";
    EXPECT_GT(rep.checks.size(), 100u) << rep.suite;
  }
}
