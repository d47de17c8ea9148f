#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>

#include "cubics/errors.hpp"

namespace cubics {

using Integer = mpz_class;
/// Exact rational. GMP keeps it canonical (gcd 1, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline bool fits_int64(const Integer& z) {
  return z >= Integer(std::to_string(std::numeric_limits<std::int64_t>::min())) &&
         z <= Integer(std::to_string(std::numeric_limits<std::int64_t>::max()));
}

inline std::int64_t to_int64(const Integer& z) {
  if (!fits_int64(z)) throw DomainError("integer out of int64 range: " + z.get_str());
  return std::stoll(z.get_str());
}

inline std::string to_string(const Rational& q) {
  return is_integral(q) ? q.get_num().get_str() : q.get_str();
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace detail {

// Product of the odd numbers in [lo, hi] by binary splitting, so the
// multiplications stay balanced for large m.
inline Integer odd_range_product(unsigned long lo, unsigned long hi) {
  if (lo > hi) return 1;
  if (hi - lo <= 16) {
    Integer r = 1;
    for (unsigned long k = lo; k <= hi; k += 2) r *= k;
    return r;
  }
  unsigned long mid = lo + ((hi - lo) / 4) * 2;
  return odd_range_product(lo, mid) * odd_range_product(mid + 2, hi);
}

}  // namespace detail

/// m!! = 1·3·5···m for odd m >= 1.
inline Integer double_factorial(long m) {
  if (m < 1 || m % 2 == 0) {
    throw DomainError("double_factorial expects an odd positive integer, got " +
                      std::to_string(m));
  }
  return detail::odd_range_product(1, static_cast<unsigned long>(m));
}

/// +1 for a ≡ 1 (mod 4), -1 for a ≡ 3 (mod 4). Negative odd values are
/// reduced mod 4 first.
inline int epsilon(const Integer& a) {
  unsigned long r = mpz_fdiv_ui(a.get_mpz_t(), 4);
  if (r == 1) return 1;
  if (r == 3) return -1;
  throw DomainError("epsilon is only defined for odd integers, got " + a.get_str());
}

inline int epsilon(long a) { return epsilon(Integer(a)); }

/// Twist exponents of the determinant of the degree-m section bundle:
/// N_m = C(m+3,4) (Sym^m of a rank-4 space), M_m the Grassmannian
/// Plücker twist, K_m the multiplicity of the non-CM divisor.
struct OrientationConstants {
  Integer n_m;
  Integer m_m;
  Integer k_m;
};

/// N_{m,4} = C(m+3, 4); zero for m <= 0.
inline Integer sym_det_exponent(long m) {
  if (m <= 0) return 0;
  return binomial(static_cast<unsigned long>(m + 3), 4);
}

/// M_m via the alternating sum N_m - 3N_{m-2} + 2N_{m-3} of the
/// determinant factors of the resolution. The sign-flipped variant
/// -N_m + 3N_{m-2} - 2N_{m-3} evaluates to -(3m-1)m/2.
inline Integer plucker_twist_alternating(long m) {
  return sym_det_exponent(m) - 3 * sym_det_exponent(m - 2) + 2 * sym_det_exponent(m - 3);
}

inline OrientationConstants orientation_constants(long m) {
  if (m < 3) {
    throw DomainError("orientation constants need m >= 3, got " + std::to_string(m));
  }
  OrientationConstants c;
  c.n_m = sym_det_exponent(m);
  c.m_m = Integer((3 * m - 1) * m / 2);
  c.k_m = binomial(static_cast<unsigned long>(m - 1), 2);
  if (c.m_m != plucker_twist_alternating(m)) {
    throw ConsistencyError("M_m closed form disagrees with the alternating sum at m=" +
                           std::to_string(m));
  }
  return c;
}

}  // namespace cubics
