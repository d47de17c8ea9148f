#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cubics/arith.hpp"
#include "cubics/profile.hpp"

namespace cubics {

struct OrientationReport {
  bool rank_ok = false;
  bool all_odd = false;
  /// #{m_i ≡ 3 mod 4}; must be even.
  long count_neg_mod4 = 0;
  /// n odd ⇒ r even, n even ⇒ r odd.
  bool r_parity_ok = false;
  bool orientable = false;
  /// Some degree is even, so the Euler class is zero.
  bool vanishing = false;

  // Parity view through the determinant twists, for cross-checking:
  // O(1) appears with exponent Σ M_{m_i} in det E and n+1 in det T, the
  // non-CM divisor with Σ K_{m_i} in det E and evenly in det T.
  Integer plucker_exponent;
  Integer ncm_exponent;
  bool twist_parity_ok = false;

  /// First violated condition, or "orientable".
  std::string reason;
};

inline OrientationReport check(const DegreeProfile& profile) {
  OrientationReport rep;
  const long n = profile.n();
  rep.rank_ok = profile.rank_matches();
  rep.all_odd = true;
  for (long m : profile.degrees()) {
    if (m % 2 == 0) {
      rep.all_odd = false;
      rep.vanishing = true;
    } else if (m % 4 == 3) {
      ++rep.count_neg_mod4;
    }
    auto c = orientation_constants(m);
    rep.plucker_exponent += c.m_m;
    rep.ncm_exponent += c.k_m;
  }
  const bool r_even = profile.r() % 2 == 0;
  rep.r_parity_ok = (n % 2 == 1) ? r_even : !r_even;
  rep.twist_parity_ok = mpz_even_p(rep.ncm_exponent.get_mpz_t()) != 0 &&
                        (mpz_odd_p(rep.plucker_exponent.get_mpz_t()) != 0) == (n % 2 == 0);
  rep.orientable =
      rep.rank_ok && rep.all_odd && rep.count_neg_mod4 % 2 == 0 && rep.r_parity_ok;

  // An even degree kills the Euler class whatever the rank, so it is
  // reported first.
  if (rep.vanishing) {
    rep.reason = "even degree: Euler class vanishes, count 0";
  } else if (!rep.rank_ok) {
    rep.reason = "rank/dimension mismatch: sum(3m_i+1) = " + std::to_string(profile.bundle_rank()) +
                 " but dim H_n = 4n = " + std::to_string(profile.dimension());
  } else if (rep.count_neg_mod4 % 2 != 0) {
    rep.reason = "not relatively orientable: odd number (" + std::to_string(rep.count_neg_mod4) +
                 ") of degrees congruent to 3 mod 4";
  } else if (!rep.r_parity_ok) {
    rep.reason = std::string("not relatively orientable: n=") + std::to_string(n) +
                 (n % 2 ? " is odd but r=" : " is even but r=") + std::to_string(profile.r()) +
                 (n % 2 ? " is odd" : " is even");
  } else {
    rep.reason = "orientable";
  }
  return rep;
}

/// All relatively orientable profiles with 4 <= n <= n_max and odd
/// degrees >= 3, ordered by n and then by degree list.
inline std::vector<DegreeProfile> enumerate_orientable(long n_max) {
  std::vector<DegreeProfile> out;
  for (long n = 4; n <= n_max; ++n) {
    std::vector<long> current;
    // Non-decreasing odd degrees whose ranks 3m+1 sum to 4n.
    std::function<void(long, long)> extend = [&](long min_m, long remaining) {
      if (remaining == 0) {
        DegreeProfile p(n, current);
        if (check(p).orientable) out.push_back(std::move(p));
        return;
      }
      for (long m = min_m; 3 * m + 1 <= remaining; m += 2) {
        current.push_back(m);
        extend(m, remaining - (3 * m + 1));
        current.pop_back();
      }
    };
    extend(3, 4 * n);
  }
  return out;
}

}  // namespace cubics
