#pragma once

#include <string>
#include <vector>

#include "cubics/arith.hpp"

namespace cubics {

/// Sign of the sigma-action on an irreducible N-representation: rho_a
/// (kPlus) or rho_a^- (kMinus).
enum class Twist { kPlus, kMinus };

inline Twist twist_from_sign(int s) { return s >= 0 ? Twist::kPlus : Twist::kMinus; }
inline Twist flip(Twist t) { return t == Twist::kPlus ? Twist::kMinus : Twist::kPlus; }

/// rho_a or rho_a^- at a numeric weight a >= 0.
struct IrredRep {
  Integer weight;
  Twist twist = Twist::kPlus;

  /// rho_0 is one-dimensional; every other irreducible is a plane.
  int dimension() const { return weight == 0 ? 1 : 2; }

  std::string to_string() const {
    return std::string("rho") + (twist == Twist::kMinus ? "^-" : "") + "_" + weight.get_str();
  }

  friend bool operator==(const IrredRep&, const IrredRep&) = default;
};

/// coeff · e^{e_pow} · etilde^{etilde_parity} in the Witt-sheaf cohomology
/// of BN, with the weights already substituted into coeff. The parity is
/// kept in {0,1} through etilde^2 = 4e^2.
class EquivClass {
 public:
  EquivClass() = default;
  EquivClass(Rational coeff, unsigned e_pow, bool etilde)
      : coeff_(std::move(coeff)), e_pow_(e_pow), etilde_(etilde) {}

  static EquivClass one() { return EquivClass(Rational(1), 0, false); }

  const Rational& coeff() const noexcept { return coeff_; }
  unsigned e_pow() const noexcept { return e_pow_; }
  bool etilde_parity() const noexcept { return etilde_; }

  /// Degree in H^*: each e and etilde sits in degree 2.
  unsigned degree() const noexcept { return 2 * (e_pow_ + (etilde_ ? 1 : 0)); }

  EquivClass operator-() const { return EquivClass(-coeff_, e_pow_, etilde_); }

  friend EquivClass operator*(const EquivClass& x, const EquivClass& y) {
    EquivClass r(x.coeff_ * y.coeff_, x.e_pow_ + y.e_pow_, x.etilde_ != y.etilde_);
    if (x.etilde_ && y.etilde_) {
      r.coeff_ *= 4;
      r.e_pow_ += 2;
    }
    return r;
  }

  EquivClass& operator*=(const EquivClass& y) { return *this = *this * y; }

  friend bool operator==(const EquivClass& x, const EquivClass& y) {
    return x.coeff_ == y.coeff_ && x.e_pow_ == y.e_pow_ && x.etilde_ == y.etilde_;
  }

  std::string to_string() const {
    std::string s = ::cubics::to_string(coeff_);
    if (e_pow_) s += "·e^" + std::to_string(e_pow_);
    if (etilde_) s += "·ẽ";
    return s;
  }

 private:
  Rational coeff_{0};
  unsigned e_pow_ = 0;
  bool etilde_ = false;
};

/// Euler class of the bundle on BN attached to an irreducible
/// representation: eps(a)·a·e for odd a, ±(a/2)·ẽ for even a (plus for
/// a ≡ 2 mod 4), negated for the minus twist.
inline EquivClass euler_of_irred(const IrredRep& r) {
  if (r.weight < 0) {
    throw DomainError("representation weight must be non-negative, got " + r.weight.get_str());
  }
  EquivClass c;
  if (mpz_odd_p(r.weight.get_mpz_t()) != 0) {
    c = EquivClass(Rational(epsilon(r.weight) * r.weight), 1, false);
  } else {
    Rational half(r.weight, 2);
    half.canonicalize();
    bool two_mod_four = mpz_fdiv_ui(r.weight.get_mpz_t(), 4) == 2;
    c = EquivClass(two_mod_four ? half : Rational(-half), 0, true);
  }
  return r.twist == Twist::kMinus ? -c : c;
}

/// Whitney product of the Euler classes of a direct sum.
inline EquivClass euler_product(const std::vector<IrredRep>& reps) {
  EquivClass acc = EquivClass::one();
  for (const auto& r : reps) acc *= euler_of_irred(r);
  return acc;
}

inline int total_dimension(const std::vector<IrredRep>& reps) {
  int d = 0;
  for (const auto& r : reps) d += r.dimension();
  return d;
}

}  // namespace cubics
