#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cubics/arith.hpp"
#include "cubics/local_euler.hpp"
#include "cubics/orientation.hpp"
#include "cubics/profile.hpp"
#include "cubics/weights.hpp"

namespace cubics {

/// Which local Euler classes enter the residue sum.
enum class LocalConvention {
  /// Weight-dependent signs cancelled in advance. The default.
  kSignCancelled,
  /// Bundle signs sigma_m and the eps(a1 a2) Grassmannian factor kept;
  /// needs odd weights. Must agree fixed point by fixed point with the
  /// default for orientable profiles.
  kSigned,
};

struct CountOptions {
  LocalConvention convention = LocalConvention::kSignCancelled;
  /// Report 0 for profiles with an even degree instead of refusing.
  bool allow_vanishing = false;
};

struct PlaneTerm {
  PlanePair pair;
  Rational value;
};

struct CountResult {
  Integer signature;
  WeightVector weights_used;
  std::vector<PlaneTerm> per_plane;
  int samples_checked = 0;
  /// Set when an even degree forced the count to zero.
  bool vanished = false;
};

namespace detail {

inline void require_countable_shape(const DegreeProfile& profile, const WeightVector& w,
                                    LocalConvention convention) {
  if (!profile.rank_matches()) {
    throw RefusalError(RefusalReason::kRankMismatch, check(profile).reason);
  }
  for (long m : profile.degrees()) {
    if (m % 2 == 0) throw RefusalError(RefusalReason::kEvenDegree, check(profile).reason);
  }
  if (w.size() != profile.weight_count()) {
    throw DomainError("n=" + std::to_string(profile.n()) + " needs " +
                      std::to_string(profile.weight_count()) + " weights, got " +
                      std::to_string(w.size()) + " ([" + w.to_string() + "])");
  }
  require_valid(w, convention == LocalConvention::kSigned);
}

}  // namespace detail

/// The six summands e(E)(y)/(e(T_{H_3})(y)·grass) with the plane weights
/// given explicitly, so either ordering of the pair can be evaluated.
inline std::array<Rational, 6> fixed_point_terms_at(const DegreeProfile& profile,
                                                    const Integer& a1, const Integer& a2,
                                                    const Integer& grass,
                                                    LocalConvention convention =
                                                        LocalConvention::kSignCancelled) {
  const bool is_signed = convention == LocalConvention::kSigned;
  std::array<Rational, 6> out;
  for (FixedPoint y : all_fixed_points()) {
    Integer num = 1;
    for (long m : profile.degrees()) {
      num *= is_signed ? bundle_local_class_signed(m, y, a1, a2) : bundle_local_class(m, y, a1, a2);
    }
    out[y.index() - 1] = make_rational(num, tangent_h3_class(y, a1, a2) * grass);
  }
  return out;
}

/// The six summands e(E)(y)/e(T_{H_n})(y) of one fixed 3-plane.
inline std::array<Rational, 6> fixed_point_terms(const DegreeProfile& profile,
                                                 const WeightVector& w, const PlanePair& p,
                                                 LocalConvention convention =
                                                     LocalConvention::kSignCancelled) {
  detail::require_countable_shape(profile, w, convention);
  p.check(w.size());
  const Integer grass = convention == LocalConvention::kSigned
                            ? grassmann_class_signed(profile.n(), w, p)
                            : grassmann_class(profile.n(), w, p);
  return fixed_point_terms_at(profile, w[p.i - 1], w[p.j - 1], grass, convention);
}

/// Σ_{y} e(E)(y) / (e(T_{H_3})(y) · e(T_Gr)) for the plane Pi_{ij}.
inline Rational plane_contribution(const DegreeProfile& profile, const WeightVector& w,
                                   const PlanePair& p,
                                   LocalConvention convention = LocalConvention::kSignCancelled) {
  Rational sum = 0;
  for (const auto& t : fixed_point_terms(profile, w, p, convention)) sum += t;
  return sum;
}

/// Bott residue sum over all C(s,2) fixed 3-planes at one weight vector.
/// Refuses profiles that are not relatively orientable; even-degree
/// profiles give 0 when `allow_vanishing` is set.
inline CountResult signature(const DegreeProfile& profile, const WeightVector& w,
                             const CountOptions& options = {}) {
  const auto report = check(profile);
  CountResult result;
  result.weights_used = w;
  if (report.vanishing) {
    if (!options.allow_vanishing) throw RefusalError(RefusalReason::kEvenDegree, report.reason);
    result.signature = 0;
    result.vanished = true;
    return result;
  }
  if (!report.rank_ok) throw RefusalError(RefusalReason::kRankMismatch, report.reason);
  if (!report.orientable) throw RefusalError(RefusalReason::kNotOrientable, report.reason);

  Rational total = 0;
  for (const auto& p : all_plane_pairs(w.size())) {
    Rational value = plane_contribution(profile, w, p, options.convention);
    total += value;
    result.per_plane.push_back({p, std::move(value)});
  }
  if (!is_integral(total)) {
    throw ConsistencyError("residue sum for " + profile.to_string() + " at weights [" +
                           w.to_string() + "] is not an integer: " + total.get_str());
  }
  result.signature = total.get_num();
  result.samples_checked = 1;
  return result;
}

/// Seed of the k-th sample drawn by signature_verified.
inline std::uint64_t sample_seed(std::uint64_t seed, int k) {
  return seed + static_cast<std::uint64_t>(k);
}

/// Evaluates the residue sum at `samples` random generic weight vectors
/// (seeds seed, seed+1, ...) and requires them all to agree. The
/// returned per-plane data belongs to the first sample.
inline CountResult signature_verified(const DegreeProfile& profile, int samples,
                                      std::uint64_t seed, const CountOptions& options = {}) {
  if (samples < 2) throw DomainError("signature_verified needs at least 2 samples");
  CountResult first;
  for (int k = 0; k < samples; ++k) {
    auto w = random_generic_weights(profile.weight_count(), sample_seed(seed, k));
    auto r = signature(profile, w, options);
    if (k == 0) {
      first = std::move(r);
    } else if (r.signature != first.signature) {
      throw ConsistencyError("weight samples disagree for " + profile.to_string() + ": " +
                             first.signature.get_str() + " at [" + first.weights_used.to_string() +
                             "] vs " + r.signature.get_str() + " at [" + w.to_string() + "]");
    }
  }
  first.samples_checked = first.vanished ? 0 : samples;
  return first;
}

}  // namespace cubics
