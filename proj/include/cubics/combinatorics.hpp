#pragma once

#include <algorithm>
#include <array>
#include <string>
#include <vector>

#include "cubics/errors.hpp"
#include "cubics/local_euler.hpp"

// Monomial bookkeeping behind the orientation signs: the canonical order
// on Sym^m of a rank-4 space, its permutation sign, and the swap counts
// needed to orient the bases of E_m(y). Verification only; the counting
// path never calls into this header.

namespace cubics {

/// x1^e0 x2^e1 x3^e2 x4^e3, the variables carrying weights
/// (a1, -a1, a2, -a2).
struct Monomial4 {
  std::array<int, 4> exps{};

  int degree() const { return exps[0] + exps[1] + exps[2] + exps[3]; }

  long weight(long a1, long a2) const {
    return a1 * (exps[0] - exps[1]) + a2 * (exps[2] - exps[3]);
  }

  std::string to_string() const {
    std::string s;
    for (int v = 0; v < 4; ++v) {
      if (exps[v] == 0) continue;
      s += "x" + std::to_string(v + 1);
      if (exps[v] > 1) s += "^" + std::to_string(exps[v]);
    }
    return s.empty() ? "1" : s;
  }

  friend bool operator==(const Monomial4&, const Monomial4&) = default;
  /// Lexicographic on exponent vectors, so x1^m is the largest.
  friend auto operator<=>(const Monomial4&, const Monomial4&) = default;
};

enum class MonomialSign { kPositive, kNegative, kNeutral };

inline MonomialSign classify(const Monomial4& g) {
  const auto& e = g.exps;
  if (e[0] > e[1] || (e[0] == e[1] && e[2] > e[3])) return MonomialSign::kPositive;
  if (e[0] == e[1] && e[2] == e[3]) return MonomialSign::kNeutral;
  return MonomialSign::kNegative;
}

/// Swaps the exponents of x1 <-> x2 and x3 <-> x4.
inline Monomial4 star(const Monomial4& g) {
  return {{g.exps[1], g.exps[0], g.exps[3], g.exps[2]}};
}

/// Degree-m monomials in descending lexicographic order (x1 > ... > x4).
inline std::vector<Monomial4> monomials_lex(int m) {
  if (m < 0) throw DomainError("monomial degree must be non-negative");
  std::vector<Monomial4> out;
  for (int e0 = m; e0 >= 0; --e0)
    for (int e1 = m - e0; e1 >= 0; --e1)
      for (int e2 = m - e0 - e1; e2 >= 0; --e2) out.push_back({{e0, e1, e2, m - e0 - e1 - e2}});
  return out;
}

/// Positive monomials in descending lex order, each followed by its star,
/// then the neutral monomials in descending lex order.
inline std::vector<Monomial4> canonical_order(int m) {
  std::vector<Monomial4> out;
  std::vector<Monomial4> neutral;
  for (const auto& g : monomials_lex(m)) {
    switch (classify(g)) {
      case MonomialSign::kPositive:
        out.push_back(g);
        out.push_back(star(g));
        break;
      case MonomialSign::kNeutral:
        neutral.push_back(g);
        break;
      case MonomialSign::kNegative:
        break;
    }
  }
  out.insert(out.end(), neutral.begin(), neutral.end());
  return out;
}

/// Sign of the permutation taking the lex order to the canonical order,
/// from its cycle decomposition.
inline int canonical_permutation_sign(int m) {
  const auto lex = monomials_lex(m);
  const auto canon = canonical_order(m);
  std::vector<std::size_t> perm(canon.size());
  for (std::size_t k = 0; k < canon.size(); ++k) {
    auto it = std::lower_bound(lex.begin(), lex.end(), canon[k], std::greater<>());
    perm[k] = static_cast<std::size_t>(it - lex.begin());
  }
  std::vector<bool> seen(perm.size(), false);
  int sign = 1;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t k = start; !seen[k]; k = perm[k]) {
      seen[k] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// The six weight windows (0, bound) counted when orienting E_m(y):
/// cases 1-4 on degree m-2, cases 5-6 on degree m-3.
enum class WeightRange {
  kBelowA1PlusA2 = 1,   // (0, a1+a2)
  kBelowA1MinusA2 = 2,  // (0, a1-a2)
  kBelowTwoA2 = 3,      // (0, 2a2)
  kBelowTwoA1 = 4,      // (0, 2a1)
  kBelowA2 = 5,         // (0, a2), degree m-3
  kBelowA1 = 6,         // (0, a1), degree m-3
};

inline WeightRange weight_range_from_id(int id) {
  if (id < 1 || id > 6) throw DomainError("weight range case must be 1..6, got " + std::to_string(id));
  return static_cast<WeightRange>(id);
}

namespace detail {

inline void require_odd_positive(long m) {
  if (m < 3 || m % 2 == 0) {
    throw DomainError("swap counts need an odd degree >= 3, got " + std::to_string(m));
  }
}

}  // namespace detail

/// Weights realizing the generic regime a1 >> a2 for degree-m monomials.
struct GenericPair {
  long a1;
  long a2;
};
inline GenericPair generic_pair_for(long m) { return {4 * m + 1, 1}; }

/// Monomials g of the case's degree with 0 < wt(g) < bound, by
/// enumeration at a1 = 4m+1, a2 = 1.
inline long count_weight_range(WeightRange c, long m) {
  detail::require_odd_positive(m);
  const auto [a1, a2] = generic_pair_for(m);
  long degree = m - 2;
  long bound = 0;
  switch (c) {
    case WeightRange::kBelowA1PlusA2: bound = a1 + a2; break;
    case WeightRange::kBelowA1MinusA2: bound = a1 - a2; break;
    case WeightRange::kBelowTwoA2: bound = 2 * a2; break;
    case WeightRange::kBelowTwoA1: bound = 2 * a1; break;
    case WeightRange::kBelowA2: bound = a2; degree = m - 3; break;
    case WeightRange::kBelowA1: bound = a1; degree = m - 3; break;
  }
  long count = 0;
  for (const auto& g : monomials_lex(static_cast<int>(degree))) {
    const long w = g.weight(a1, a2);
    if (0 < w && w < bound) ++count;
  }
  return count;
}

/// Closed forms for the same counts:
/// (m-1)(m+1)/4, (m-1)^2/4, (m-1)/2, (m-1)^2/2, 0, (m-1)(m-3)/4.
inline long weight_range_closed_form(WeightRange c, long m) {
  detail::require_odd_positive(m);
  switch (c) {
    case WeightRange::kBelowA1PlusA2: return (m - 1) * (m + 1) / 4;
    case WeightRange::kBelowA1MinusA2: return (m - 1) * (m - 1) / 4;
    case WeightRange::kBelowTwoA2: return (m - 1) / 2;
    case WeightRange::kBelowTwoA1: return (m - 1) * (m - 1) / 2;
    case WeightRange::kBelowA2: return 0;
    case WeightRange::kBelowA1: return (m - 1) * (m - 3) / 4;
  }
  return 0;
}

/// Number of pair swaps needed to orient the monomial basis of E_m(y):
/// the range count for wt(e1) on degree m-2 plus the one for wt(f1) on
/// degree m-3, with (wt e1, wt f1) = y1:(a1+a2, a2), y2:(a1+a2, a1),
/// y3:(a1-a2, a2), y4:(a1-a2, a1), y5:(2a1, a1), y6:(2a2, a2).
inline long bundle_swap_count(long m, FixedPoint y) {
  using W = WeightRange;
  static constexpr std::array<std::pair<W, W>, 6> kRanges{{
      {W::kBelowA1PlusA2, W::kBelowA2},
      {W::kBelowA1PlusA2, W::kBelowA1},
      {W::kBelowA1MinusA2, W::kBelowA2},
      {W::kBelowA1MinusA2, W::kBelowA1},
      {W::kBelowTwoA1, W::kBelowA1},
      {W::kBelowTwoA2, W::kBelowA2},
  }};
  const auto& [e1, f1] = kRanges[static_cast<std::size_t>(y.index() - 1)];
  return count_weight_range(e1, m) + count_weight_range(f1, m);
}

}  // namespace cubics
