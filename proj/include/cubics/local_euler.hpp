#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "cubics/arith.hpp"
#include "cubics/rep_algebra.hpp"
#include "cubics/weights.hpp"

// Local Euler classes at the six N-fixed twisted cubics of one fixed
// 3-plane with weights (a1, -a1, a2, -a2). All e-powers are dropped.
//
// Two conventions live here. The unsigned forms (bundle_local_class,
// tangent_h3_class, grassmann_class) are the ones the counting path uses;
// every weight-dependent sign has already cancelled in them. The signed
// forms and the representation lists feed the oracle checks.

namespace cubics {

/// One of the six fixed curves y_1..y_6 in a fixed 3-plane:
///   y1 = (x0x2, x0x1, x1x3)   y2 = (x0x2, x2x3, x1x3)
///   y3 = (x0x3, x0x1, x1x2)   y4 = (x0x3, x2x3, x1x2)
///   y5 = (x0^2, x0x1, x1^2)   y6 = (x2^2, x2x3, x3^2)
class FixedPoint {
 public:
  explicit FixedPoint(int index) : index_(index) {
    if (index < 1 || index > 6) {
      throw DomainError("fixed point index must be in 1..6, got " + std::to_string(index));
    }
  }
  int index() const noexcept { return index_; }
  friend bool operator==(FixedPoint, FixedPoint) = default;

 private:
  int index_;
};

inline std::array<FixedPoint, 6> all_fixed_points() {
  return {FixedPoint(1), FixedPoint(2), FixedPoint(3), FixedPoint(4), FixedPoint(5), FixedPoint(6)};
}

/// Fixed 3-plane Pi_{ij}, 1-based with i < j.
struct PlanePair {
  std::size_t i;
  std::size_t j;

  void check(std::size_t s) const {
    if (!(1 <= i && i < j && j <= s)) {
      throw DomainError("invalid plane pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ") for s=" + std::to_string(s));
    }
  }
  std::string to_string() const {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  friend bool operator==(const PlanePair&, const PlanePair&) = default;
};

/// All C(s,2) pairs in lexicographic order.
inline std::vector<PlanePair> all_plane_pairs(std::size_t s) {
  std::vector<PlanePair> out;
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t j = i + 1; j <= s; ++j) out.push_back({i, j});
  return out;
}

/// Irreducible summand whose torus weight is the linear form
/// c1·a1 + c2·a2, with twist sign.
struct RepTemplate {
  long c1;
  long c2;
  Twist twist;

  Integer weight(const Integer& a1, const Integer& a2) const { return c1 * a1 + c2 * a2; }

  IrredRep evaluate(const Integer& a1, const Integer& a2) const {
    Integer w = weight(a1, a2);
    if (w < 0) {
      throw DomainError("representation weight " + std::to_string(c1) + "·a1 + " +
                        std::to_string(c2) + "·a2 is negative at (" + a1.get_str() + "," +
                        a2.get_str() + "); the oracle needs a1 > M·a2");
    }
    return IrredRep{w, twist};
  }

  /// rho_0 is one-dimensional; the templates here never produce it for
  /// generic weights.
  int dimension(const Integer& a1, const Integer& a2) const {
    return weight(a1, a2) == 0 ? 1 : 2;
  }
};

inline std::vector<IrredRep> evaluate(const std::vector<RepTemplate>& reps, const Integer& a1,
                                      const Integer& a2) {
  std::vector<IrredRep> out;
  out.reserve(reps.size());
  for (const auto& r : reps) out.push_back(r.evaluate(a1, a2));
  return out;
}

namespace detail {

inline void require_odd_degree(long m) {
  if (m < 3 || m % 2 == 0) {
    throw DomainError("bundle degree must be odd and >= 3, got " + std::to_string(m));
  }
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Twist alternating(long i) { return i % 2 == 0 ? Twist::kPlus : Twist::kMinus; }

}  // namespace detail

/// Euler class of E_m at y, in the sign-cancelled convention:
///   F1 = m!! a2^k ∏_{i=0}^{m-1} ((m-i)a1 - i a2)
///   F2 = m!! a1^k · m a2 · ∏_{i=1}^{m-1} ((m-i)a1 - i a2)
///   F3, F4 as F1, F2 with + inside the product
///   F5 = m!! a2^k ∏_{|i|<=(m-1)/2} (a1 + 2i a2)
///   F6 = m!! a1^k ∏_{|i|<=(m-1)/2} (a2 + 2i a1)
/// with k = (m+1)/2.
inline Integer bundle_local_class(long m, FixedPoint y, const Integer& a1, const Integer& a2) {
  detail::require_odd_degree(m);
  const unsigned long k = static_cast<unsigned long>((m + 1) / 2);
  const long h = (m - 1) / 2;
  Integer r = double_factorial(m);
  switch (y.index()) {
    case 1:
    case 3: {
      const int sign = y.index() == 1 ? -1 : 1;
      r *= detail::pow(a2, k);
      for (long i = 0; i < m; ++i) r *= (m - i) * a1 + sign * i * a2;
      break;
    }
    case 2:
    case 4: {
      const int sign = y.index() == 2 ? -1 : 1;
      r *= detail::pow(a1, k) * m * a2;
      for (long i = 1; i < m; ++i) r *= (m - i) * a1 + sign * i * a2;
      break;
    }
    case 5:
      r *= detail::pow(a2, k);
      for (long i = -h; i <= h; ++i) r *= a1 + 2 * i * a2;
      break;
    case 6:
      r *= detail::pow(a1, k);
      for (long i = -h; i <= h; ++i) r *= a2 + 2 * i * a1;
      break;
  }
  return r;
}

/// sigma_m(a1,a2)(y): eps(a1 a2) for m ≡ 1 mod 4; for m ≡ 3 mod 4,
/// -eps(a1) at y2, y4, y5 and -eps(a2) at y1, y3, y6.
inline int bundle_sign(long m, FixedPoint y, const Integer& a1, const Integer& a2) {
  detail::require_odd_degree(m);
  if (m % 4 == 1) return epsilon(a1 * a2);
  switch (y.index()) {
    case 2:
    case 4:
    case 5:
      return -epsilon(a1);
    default:
      return -epsilon(a2);
  }
}

/// sigma_m(y) times the product in its signed form. Agrees
/// with sigma_m · bundle_local_class except at y6, where the product is
/// ∏_{i=0}^{(m-3)/2} ((m-1-2i)^2 a1^2 - a2^2) · a2 · m!! · a1^k, which
/// equals (-1)^{(m-1)/2} F6.
inline Integer bundle_local_class_signed(long m, FixedPoint y, const Integer& a1,
                                         const Integer& a2) {
  detail::require_odd_degree(m);
  if (mpz_even_p(a1.get_mpz_t()) != 0 || mpz_even_p(a2.get_mpz_t()) != 0) {
    throw DomainError("signed local class needs odd weights, got (" + a1.get_str() + "," +
                      a2.get_str() + ")");
  }
  const int sigma = bundle_sign(m, y, a1, a2);
  if (y.index() != 6) {
    if (y.index() == 5) {
      // Written as ∏_{i=0}^{m-1} (a1 + (m-1-2i) a2); same factors as F5.
      Integer r = double_factorial(m) * detail::pow(a2, static_cast<unsigned long>((m + 1) / 2));
      for (long i = 0; i < m; ++i) r *= a1 + (m - 1 - 2 * i) * a2;
      return sigma * r;
    }
    return sigma * bundle_local_class(m, y, a1, a2);
  }
  Integer r = a2 * double_factorial(m) * detail::pow(a1, static_cast<unsigned long>((m + 1) / 2));
  for (long i = 0; i <= (m - 3) / 2; ++i) {
    Integer c = (m - 1 - 2 * i) * a1;
    r *= c * c - a2 * a2;
  }
  return sigma * r;
}

/// Tangent space of H_3 at y (e^6 dropped, extra orientation sign
/// included):
///   T1 = -4 a1 a2 (a1+a2)   (a1-a2)^2 (a1+3a2)
///   T2 = -4 a1 a2 (a1+a2)   (a1-a2)^2 (3a1+a2)
///   T3 =  4 a1 a2 (a1+a2)^2 (a1-a2)   (a1-3a2)
///   T4 =  4 a1 a2 (a1+a2)^2 (a1-a2)   (3a1-a2)
///   T5 =  (a1+a2)^2 (a1-a2)^2 (3a1+a2) (3a1-a2)
///   T6 = -(a1+a2)^2 (a1-a2)^2 (a1+3a2) (a1-3a2)
inline Integer tangent_h3_class(FixedPoint y, const Integer& a1, const Integer& a2) {
  const Integer sum = a1 + a2;
  const Integer diff = a1 - a2;
  Integer r;
  switch (y.index()) {
    case 1:
      r = -4 * a1 * a2 * sum * diff * diff * (a1 + 3 * a2);
      break;
    case 2:
      r = -4 * a1 * a2 * sum * diff * diff * (3 * a1 + a2);
      break;
    case 3:
      r = 4 * a1 * a2 * sum * sum * diff * (a1 - 3 * a2);
      break;
    case 4:
      r = 4 * a1 * a2 * sum * sum * diff * (3 * a1 - a2);
      break;
    case 5:
      r = sum * sum * diff * diff * (3 * a1 + a2) * (3 * a1 - a2);
      break;
    case 6:
      r = -(sum * sum * diff * diff * (a1 + 3 * a2) * (a1 - 3 * a2));
      break;
  }
  if (r == 0) {
    throw DomainError("tangent class vanishes at y" + std::to_string(y.index()) + " for (" +
                      a1.get_str() + "," + a2.get_str() + "): weights are not generic");
  }
  return r;
}

/// Monomial pairs of a basis of E_m(y) grouped into irreducible summands,
/// with weights as linear forms in (a1, a2). Total dimension 3m+1.
inline std::vector<RepTemplate> bundle_basis_reps(long m, FixedPoint y) {
  detail::require_odd_degree(m);
  const long h = (m - 1) / 2;
  std::vector<RepTemplate> out;
  auto pure_a2 = [&] {  // (x2^{m-i} x3^i, x2^i x3^{m-i})
    for (long i = 0; i <= h; ++i) out.push_back({0, m - 2 * i, detail::alternating(i)});
  };
  auto pure_a1 = [&] {  // (x0^{m-i} x1^i, x0^i x1^{m-i})
    for (long i = 0; i <= h; ++i) out.push_back({m - 2 * i, 0, detail::alternating(i)});
  };
  switch (y.index()) {
    case 1:  // (x0^{m-i} x3^i, x1^{m-i} x2^i), i = 0..m-1
      for (long i = 0; i < m; ++i) out.push_back({m - i, -i, detail::alternating(i)});
      pure_a2();
      break;
    case 2:
      for (long i = 1; i < m; ++i) out.push_back({m - i, -i, detail::alternating(i)});
      out.push_back({0, m, Twist::kPlus});  // (x2^m, x3^m)
      pure_a1();
      break;
    case 3:  // (x0^{m-i} x2^i, x1^{m-i} x3^i), i = 0..m-1
      for (long i = 0; i < m; ++i) out.push_back({m - i, i, Twist::kPlus});
      pure_a2();
      break;
    case 4:
      for (long i = 1; i < m; ++i) out.push_back({m - i, i, Twist::kPlus});
      out.push_back({0, m, Twist::kPlus});
      pure_a1();
      break;
    case 5:  // (x0 x2^{m-1-i} x3^i, x1 x2^i x3^{m-1-i}), i = 0..m-1
      for (long i = 0; i < m; ++i) out.push_back({1, m - 1 - 2 * i, detail::alternating(i)});
      pure_a2();
      break;
    case 6:
      // (x0^{m-1-i} x1^i x2, x0^i x1^{m-1-i} x3), i = 0..(m-1)/2
      for (long i = 0; i <= h; ++i) out.push_back({m - 1 - 2 * i, 1, detail::alternating(i)});
      // (x0^{m-1-i} x1^i x3, x0^i x1^{m-1-i} x2), i = 0..(m-3)/2
      for (long i = 0; i < h; ++i) out.push_back({m - 1 - 2 * i, -1, detail::alternating(i + 1)});
      pure_a1();
      break;
  }
  return out;
}

struct TangentReps {
  std::vector<RepTemplate> reps;
  /// -1 when the split basis needs an odd number of swaps (y1, y2, y6).
  int extra_sign;
};

inline TangentReps tangent_reps(FixedPoint y) {
  using T = Twist;
  switch (y.index()) {
    case 1:
      return {{{2, 0, T::kMinus}, {1, -1, T::kPlus}, {1, 3, T::kPlus},
               {0, 2, T::kMinus}, {1, 1, T::kMinus}, {1, -1, T::kPlus}}, -1};
    case 2:
      return {{{1, -1, T::kPlus}, {0, 2, T::kMinus}, {2, 0, T::kMinus},
               {3, 1, T::kPlus}, {1, 1, T::kMinus}, {1, -1, T::kPlus}}, -1};
    case 3:
      return {{{1, 1, T::kMinus}, {2, 0, T::kMinus}, {0, 2, T::kMinus},
               {1, -3, T::kMinus}, {1, -1, T::kPlus}, {1, 1, T::kMinus}}, 1};
    case 4:
      return {{{1, 1, T::kMinus}, {0, 2, T::kMinus}, {2, 0, T::kMinus},
               {3, -1, T::kMinus}, {1, -1, T::kPlus}, {1, 1, T::kMinus}}, 1};
    case 5:
      return {{{1, -1, T::kPlus}, {1, 1, T::kMinus}, {1, 1, T::kMinus},
               {3, 1, T::kPlus}, {3, -1, T::kMinus}, {1, -1, T::kPlus}}, 1};
    default:
      return {{{1, -1, T::kPlus}, {1, 1, T::kMinus}, {1, 1, T::kMinus},
               {1, 3, T::kPlus}, {1, -3, T::kMinus}, {1, -1, T::kPlus}}, -1};
  }
}

namespace detail {

struct PlaneWeights {
  Integer a1;
  Integer a2;
  std::vector<Integer> complement;
};

inline PlaneWeights split(const WeightVector& w, const PlanePair& p) {
  p.check(w.size());
  PlaneWeights out{w[p.i - 1], w[p.j - 1], {}};
  for (std::size_t k = 1; k <= w.size(); ++k) {
    if (k != p.i && k != p.j) out.complement.push_back(w[k - 1]);
  }
  return out;
}

}  // namespace detail

/// Tangent space of Gr(4, n+1) at the plane (sign-cancelled convention):
/// ∏_c (a1^2 - c^2)(a2^2 - c^2) over the complement weights c, times
/// a1·a2 when n is even. Only n's parity is read; the caller is
/// responsible for len(w) = floor((n+1)/2).
inline Integer grassmann_class(long n, const WeightVector& w, const PlanePair& p) {
  auto pw = detail::split(w, p);
  Integer r = (n % 2 == 0) ? Integer(pw.a1 * pw.a2) : Integer(1);
  for (const auto& c : pw.complement) r *= (pw.a1 * pw.a1 - c * c) * (pw.a2 * pw.a2 - c * c);
  if (r == 0) {
    throw DomainError("Grassmannian class vanishes for weights [" + w.to_string() +
                      "] at plane " + p.to_string() + ": weights are not generic");
  }
  return r;
}

/// grassmann_class with the eps(a1 a2) factor of the signed convention
/// restored for even n.
inline Integer grassmann_class_signed(long n, const WeightVector& w, const PlanePair& p) {
  Integer r = grassmann_class(n, w, p);
  if (n % 2 == 0) r *= epsilon(w[p.i - 1] * w[p.j - 1]);
  return r;
}

struct GrassmannReps {
  std::vector<IrredRep> reps;
  /// -1 per complement weight c exceeding a pair weight: there the
  /// natural basis of rho^-_{c-a} is not oriented.
  int orientation_sign;
};

/// (rho_{a1} ⊕ rho_{a2}) ⊗ (rho_c ⊕ ...) [⊕ trivial for n even], split
/// as rho_{a+c} ⊕ rho^-_{|a-c|} per pair, plus rho_{a1} ⊕ rho_{a2} for n
/// even.
inline GrassmannReps grassmann_reps(long n, const WeightVector& w, const PlanePair& p) {
  auto pw = detail::split(w, p);
  GrassmannReps out{{}, 1};
  for (const auto& c : pw.complement) {
    for (const Integer* a : {&pw.a1, &pw.a2}) {
      out.reps.push_back({*a + c, Twist::kPlus});
      Integer d = *a - c;
      if (d < 0) {
        d = -d;
        out.orientation_sign = -out.orientation_sign;
      }
      out.reps.push_back({d, Twist::kMinus});
    }
  }
  if (n % 2 == 0) {
    out.reps.push_back({pw.a1, Twist::kPlus});
    out.reps.push_back({pw.a2, Twist::kPlus});
  }
  return out;
}

}  // namespace cubics
