#include <gtest/gtest.h>

#include "cubics/localization.hpp"

using namespace cubics;

namespace {

WeightVector wv(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return WeightVector(v);
}

}  // namespace

TEST(PlaneContribution, SinglePlaneQuinticThreefoldCase) {
  DegreeProfile p(4, {5});
  EXPECT_EQ(plane_contribution(p, wv({1, 5}), {1, 2}), 765);
  EXPECT_EQ(plane_contribution(p, wv({3, 7}), {1, 2}), 765);
}

TEST(PlaneContribution, ThreePlanesSumForTwoCubics) {
  DegreeProfile p(5, {3, 3});
  auto w = default_weights(3);
  EXPECT_EQ(plane_contribution(p, w, {1, 2}), Rational(125, 64));
  EXPECT_EQ(plane_contribution(p, w, {1, 3}), Rational(-245, 32));
  EXPECT_EQ(plane_contribution(p, w, {2, 3}), Rational(6125, 64));
  Rational total = 0;
  for (const auto& pp : all_plane_pairs(3)) total += plane_contribution(p, w, pp);
  EXPECT_EQ(total, 90);
}

TEST(PlaneContribution, RejectsWrongWeightCount) {
  EXPECT_THROW(plane_contribution(DegreeProfile(5, {3, 3}), wv({1, 5}), {1, 2}), DomainError);
}

TEST(PlaneContribution, FrozenRationals) {
  EXPECT_EQ(plane_contribution(DegreeProfile(10, {13}), default_weights(5), {1, 2}),
            Rational("3669933171882968875885/339738624"));
  EXPECT_EQ(plane_contribution(DegreeProfile(12, {5, 5, 5}), default_weights(6), {2, 5}),
            Rational("4119038071601526824967125/358763986944"));
  EXPECT_EQ(plane_contribution(DegreeProfile(11, {7, 7}), wv({3, 7, 19, 29, 41, 53}), {1, 2}),
            Rational("5706348346695588417/74144616357560320"));
}

TEST(PlaneContribution, NonGenericWeightsRejected) {
  EXPECT_THROW(plane_contribution(DegreeProfile(5, {3, 3}), wv({1, 3, 5}), {1, 2}), DomainError);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(DegreeProfile(4, {5}), default_weights(2)).signature, 765);
  EXPECT_EQ(signature(DegreeProfile(12, {5, 5, 5}), default_weights(6)).signature,
            Integer("1833366298500"));
  EXPECT_EQ(signature(DegreeProfile(11, {7, 7}), default_weights(6)).signature,
            Integer("136498002303600"));
}

TEST(Signature, PerPlaneSumsToTotal) {
  auto r = signature(DegreeProfile(12, {3, 5, 7}), random_generic_weights(6, 3));
  EXPECT_EQ(r.per_plane.size(), 15u);
  Rational sum = 0;
  for (const auto& t : r.per_plane) sum += t.value;
  EXPECT_EQ(sum, Rational(r.signature));
  EXPECT_EQ(r.samples_checked, 1);
}

TEST(Signature, OrderInsensitiveReduction) {
  auto r = signature(DegreeProfile(11, {3, 11}), default_weights(6));
  Rational backwards = 0;
  for (auto it = r.per_plane.rbegin(); it != r.per_plane.rend(); ++it) backwards += it->value;
  EXPECT_EQ(backwards, Rational(r.signature));
}

TEST(Signature, Refusals) {
  try {
    signature(DegreeProfile(4, {3}), default_weights(2));
    FAIL();
  } catch (const RefusalError& e) {
    EXPECT_EQ(e.reason(), RefusalReason::kRankMismatch);
  }
  try {
    signature(DegreeProfile(7, {9}), default_weights(4));
    FAIL();
  } catch (const RefusalError& e) {
    EXPECT_EQ(e.reason(), RefusalReason::kNotOrientable);
  }
  try {
    signature(DegreeProfile(4, {4}), default_weights(2));
    FAIL();
  } catch (const RefusalError& e) {
    EXPECT_EQ(e.reason(), RefusalReason::kEvenDegree);
    EXPECT_STREQ(e.what(), "even degree: Euler class vanishes, count 0");
  }
}

TEST(Signature, VanishingOverride) {
  CountOptions o;
  o.allow_vanishing = true;
  auto r = signature(DegreeProfile(4, {4}), default_weights(2), o);
  EXPECT_EQ(r.signature, 0);
  EXPECT_TRUE(r.vanished);
  // Non-orientable odd profiles stay refused.
  EXPECT_THROW(signature(DegreeProfile(7, {9}), default_weights(4), o), RefusalError);
}

TEST(Signature, SignedConventionAgreesPerFixedPoint) {
  CountOptions signed_opts;
  signed_opts.convention = LocalConvention::kSigned;
  for (const auto& [n, degs] : std::vector<std::pair<long, std::vector<long>>>{
           {4, {5}}, {5, {3, 3}}, {11, {5, 9}}, {12, {3, 3, 9}}}) {
    DegreeProfile p(n, degs);
    auto w = random_generic_weights(p.weight_count(), 99);
    for (const auto& pp : all_plane_pairs(w.size())) {
      auto plain = fixed_point_terms(p, w, pp);
      auto sgn = fixed_point_terms(p, w, pp, LocalConvention::kSigned);
      for (int k = 0; k < 6; ++k) EXPECT_EQ(plain[k], sgn[k]) << p.to_string() << " y" << k + 1;
    }
    EXPECT_EQ(signature(p, w, signed_opts).signature, signature(p, w).signature);
  }
}

TEST(Signature, SignedConventionNeedsOddWeights) {
  CountOptions o;
  o.convention = LocalConvention::kSigned;
  EXPECT_THROW(signature(DegreeProfile(4, {5}), wv({2, 5}), o), DomainError);
  EXPECT_EQ(signature(DegreeProfile(4, {5}), wv({2, 5})).signature, 765);
}

TEST(SignatureVerified, Agreement) {
  auto r = signature_verified(DegreeProfile(5, {3, 3}), 5, 17);
  EXPECT_EQ(r.signature, 90);
  EXPECT_EQ(r.samples_checked, 5);
  EXPECT_EQ(r.weights_used, random_generic_weights(3, 17));

  auto a = signature_verified(DegreeProfile(4, {5}), 2, 1);
  auto b = signature_verified(DegreeProfile(4, {5}), 2, 1);
  EXPECT_EQ(a.signature, 765);
  EXPECT_EQ(a.weights_used, b.weights_used);

  EXPECT_EQ(signature_verified(DegreeProfile(10, {13}), 3, 5).signature,
            Integer("768328170191602020"));
  EXPECT_THROW(signature_verified(DegreeProfile(4, {5}), 1, 1), DomainError);
}
