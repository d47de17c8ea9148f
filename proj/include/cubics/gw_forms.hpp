#pragma once

#include <string>
#include <string_view>

#include "cubics/arith.hpp"
#include "cubics/errors.hpp"

namespace cubics {

/// A class in GW(k) pinned down by signature and rank,
/// Q = s + ((r - s)/2)·H. Over fields where 2, 3, 6 are not squares the
/// three undetermined corrections are carried symbolically only.
class GWElement {
 public:
  GWElement(Integer signature, Integer rank) : s_(std::move(signature)), r_(std::move(rank)) {
    Integer diff = r_ - s_;
    if (mpz_odd_p(diff.get_mpz_t())) {
      throw DomainError("rank " + r_.get_str() + " and signature " + s_.get_str() +
                        " differ in parity");
    }
    h_ = diff / 2;
  }

  const Integer& signature() const { return s_; }
  const Integer& rank() const { return r_; }
  /// Number of hyperbolic summands; negative when |s| exceeds r.
  const Integer& hyperbolic_multiplicity() const { return h_; }

  bool is_zero() const { return s_ == 0 && r_ == 0; }

  friend bool operator==(const GWElement& a, const GWElement& b) {
    return a.s_ == b.s_ && a.r_ == b.r_;
  }

 private:
  Integer s_;
  Integer r_;
  Integer h_;
};

inline GWElement assemble(const Integer& s, const Integer& r) { return GWElement(s, r); }

enum class FieldKind { kSquares23, kGeneral };

inline FieldKind parse_field_kind(std::string_view text) {
  if (text == "squares-2-3") return FieldKind::kSquares23;
  if (text == "general") return FieldKind::kGeneral;
  throw DomainError("unknown field kind '" + std::string(text) + "'");
}

inline constexpr std::string_view kEpsilonTerms = "ε₁(⟨2⟩−1) + ε₂(⟨3⟩−1) + ε₃(⟨6⟩−1)";

inline std::string render(const GWElement& g, FieldKind kind = FieldKind::kSquares23) {
  std::string out;
  const Integer& s = g.signature();
  const Integer& h = g.hyperbolic_multiplicity();
  if (s != 0) out = s.get_str();
  if (h != 0) {
    std::string term = (abs(h) == 1 ? std::string("H") : Integer(abs(h)).get_str() + "·H");
    if (out.empty()) {
      out = (h < 0 ? "-" : "") + term;
    } else {
      out += (h < 0 ? " - " : " + ") + term;
    }
  }
  if (out.empty()) out = "0";
  if (kind == FieldKind::kGeneral) {
    out += " + ";
    out += kEpsilonTerms;
  }
  return out;
}

}  // namespace cubics
