#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cubics/combinatorics.hpp"
#include "cubics/fixtures.hpp"
#include "cubics/local_euler.hpp"
#include "cubics/localization.hpp"
#include "cubics/orientation.hpp"
#include "cubics/rep_algebra.hpp"

// Executable property suites shared by the `verify` command and the
// acceptance binary. Each check records a name and, on failure, enough
// detail to reproduce it.

namespace cubics {

struct CheckOutcome {
  std::string name;
  bool passed;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckOutcome> checks;

  std::size_t failures() const {
    std::size_t k = 0;
    for (const auto& c : checks) k += c.passed ? 0 : 1;
    return k;
  }
  bool ok() const { return failures() == 0; }

  void record(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }
};

inline constexpr std::array<long, 6> kOracleDegrees{3, 5, 7, 9, 11, 13};

/// Three odd pairs with a1 > 2m·a2, where every template weight is
/// positive and the representation decomposition is literal.
inline std::array<std::pair<Integer, Integer>, 3> oracle_pairs(long m) {
  return {{{Integer(4 * m + 1), Integer(1)},
           {Integer(6 * m + 5), Integer(3)},
           {Integer(20 * m + 7), Integer(5)}}};
}

/// Representation products against the closed-form local classes:
/// bundle (sigma-signed form), tangent (with its swap sign), and the
/// Grassmannian (with eps(a1 a2) for even n), plus the rank audits.
inline SuiteReport oracle_suite() {
  SuiteReport rep{"oracle", {}};
  for (long m : kOracleDegrees) {
    for (const auto& [a1, a2] : oracle_pairs(m)) {
      for (FixedPoint y : all_fixed_points()) {
        const std::string where = "m=" + std::to_string(m) + " y" + std::to_string(y.index()) +
                                  " a=(" + a1.get_str() + "," + a2.get_str() + ")";
        auto reps = evaluate(bundle_basis_reps(m, y), a1, a2);
        auto prod = euler_product(reps);
        Integer closed = bundle_local_class_signed(m, y, a1, a2);
        rep.record("bundle " + where, prod.coeff() == Rational(closed),
                   "oracle " + prod.to_string() + " vs " + closed.get_str());
        rep.record("bundle rank " + where, total_dimension(reps) == 3 * m + 1,
                   std::to_string(total_dimension(reps)));
      }
    }
  }
  for (long m : kOracleDegrees) {
    for (const auto& [a1, a2] : oracle_pairs(m)) {
      for (FixedPoint y : all_fixed_points()) {
        const std::string where = "y" + std::to_string(y.index()) + " a=(" + a1.get_str() + "," +
                                  a2.get_str() + ")";
        auto t = tangent_reps(y);
        auto reps = evaluate(t.reps, a1, a2);
        auto prod = euler_product(reps);
        Integer closed = tangent_h3_class(y, a1, a2);
        rep.record("tangent " + where, prod.coeff() * t.extra_sign == Rational(closed),
                   "oracle " + prod.to_string() + " vs " + closed.get_str());
        rep.record("tangent rank " + where, total_dimension(reps) == 12,
                   std::to_string(total_dimension(reps)));
      }
    }
  }
  for (long n = 4; n <= 12; ++n) {
    const auto s = static_cast<std::size_t>((n + 1) / 2);
    for (const auto& w : {default_weights(s), random_generic_weights(s, 11 + n)}) {
      for (const auto& p : all_plane_pairs(s)) {
        const std::string where = "n=" + std::to_string(n) + " w=[" + w.to_string() + "] " +
                                  p.to_string();
        auto g = grassmann_reps(n, w, p);
        auto prod = euler_product(g.reps);
        Integer closed = grassmann_class_signed(n, w, p);
        rep.record("grassmann " + where, prod.coeff() * g.orientation_sign == Rational(closed),
                   "oracle " + prod.to_string() + " vs " + closed.get_str());
        rep.record("grassmann rank " + where, total_dimension(g.reps) == 4 * (n - 3),
                   std::to_string(total_dimension(g.reps)));
      }
    }
  }
  return rep;
}

/// Brute-force monomial counts against their closed forms, swap-count
/// parities, and the canonical-order invariants.
inline SuiteReport combinatorics_suite(long m_max = 13) {
  SuiteReport rep{"combinatorics", {}};
  for (long m = 3; m <= m_max; m += 2) {
    for (int c = 1; c <= 6; ++c) {
      auto wr = weight_range_from_id(c);
      long got = count_weight_range(wr, m);
      long want = weight_range_closed_form(wr, m);
      rep.record("range case " + std::to_string(c) + " m=" + std::to_string(m), got == want,
                 std::to_string(got) + " vs " + std::to_string(want));
    }
    for (FixedPoint y : all_fixed_points()) {
      long swaps = bundle_swap_count(m, y);
      bool odd_expected = m % 4 == 3 && (y.index() == 3 || y.index() == 4 || y.index() == 6);
      rep.record("swap parity m=" + std::to_string(m) + " y" + std::to_string(y.index()),
                 (swaps % 2 == 1) == odd_expected, std::to_string(swaps) + " swaps");
    }
  }
  for (int m = 0; m <= static_cast<int>(m_max); ++m) {
    const auto order = canonical_order(m);
    const auto lex = monomials_lex(m);
    rep.record("canonical length m=" + std::to_string(m),
               order.size() == static_cast<std::size_t>(binomial(m + 3, 3).get_ui()),
               std::to_string(order.size()));
    bool involution = true;
    bool sign_ok = true;
    const long a1 = 4L * m + 1;
    for (const auto& g : lex) {
      involution = involution && star(star(g)) == g;
      auto cls = classify(g);
      long w = g.weight(a1, 1);
      sign_ok = sign_ok && ((cls == MonomialSign::kPositive) == (w > 0)) &&
                ((cls == MonomialSign::kNeutral) == (w == 0)) &&
                (cls != MonomialSign::kPositive || classify(star(g)) == MonomialSign::kNegative);
    }
    rep.record("star involution m=" + std::to_string(m), involution);
    rep.record("classify matches weight sign m=" + std::to_string(m), sign_ok);
    if (m % 2 == 1) {
      bool paired = true;
      for (const auto& g : order) paired = paired && classify(g) != MonomialSign::kNeutral;
      rep.record("odd degree has no neutral monomials m=" + std::to_string(m), paired);
    }
  }
  return rep;
}

/// Randomized structural checks over the tabulated profiles: pair-swap
/// symmetry and lambda-scaling of each plane contribution, integrality
/// of the total, and weight independence of the signature.
inline SuiteReport invariance_suite(int trials = 100, std::uint64_t seed = 2024) {
  SuiteReport rep{"invariance", {}};
  const auto& rows = signature_table();
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const auto& row = rows[static_cast<std::size_t>(rng() % rows.size())];
    const auto& profile = row.profile;
    auto w = random_generic_weights(profile.weight_count(), rng());
    const auto pairs = all_plane_pairs(w.size());
    const auto& p = pairs[static_cast<std::size_t>(rng() % pairs.size())];
    const std::string where = profile.to_string() + " w=[" + w.to_string() + "] " + p.to_string();

    Rational forward = plane_contribution(profile, w, p);
    Integer grass = grassmann_class(profile.n(), w, p);
    Rational swapped = 0;
    for (const auto& term : fixed_point_terms_at(profile, w[p.j - 1], w[p.i - 1], grass)) {
      swapped += term;
    }
    rep.record("pair swap " + where, forward == swapped,
               to_string(forward) + " vs " + to_string(swapped));

    Integer lambda(static_cast<unsigned long>(2 + rng() % 97));
    Rational scaled = plane_contribution(profile, w.scaled(lambda), p);
    rep.record("scaling by " + lambda.get_str() + " " + where, scaled == forward,
               to_string(forward) + " vs " + to_string(scaled));

    try {
      auto r = signature(profile, w);
      rep.record("integral total " + where, true);
      rep.record("weight independence " + where, r.signature == row.signature,
                 r.signature.get_str() + " vs " + row.signature.get_str());
    } catch (const ConsistencyError& e) {
      rep.record("integral total " + where, false, e.what());
    }
  }
  return rep;
}

}  // namespace cubics
