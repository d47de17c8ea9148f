#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cubics/arith.hpp"

namespace cubics {

/// Torus weights a_1, ..., a_s for the coordinate pairs (x_{2i-2}, x_{2i-1})
/// of P^n. Entries are kept in ascending order; index 0 is the smallest.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Integer> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
  }

  std::size_t size() const noexcept { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Integer>& entries() const noexcept { return entries_; }

  /// All entries odd, so epsilon() can be evaluated on them.
  bool sign_faithful() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Integer& a) { return mpz_odd_p(a.get_mpz_t()) != 0; });
  }

  /// Every entry multiplied by lambda.
  WeightVector scaled(const Integer& lambda) const {
    std::vector<Integer> out;
    out.reserve(entries_.size());
    for (const auto& a : entries_) out.push_back(a * lambda);
    return WeightVector(std::move(out));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += entries_[i].get_str();
    }
    return s;
  }

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Integer> entries_;
};

enum class WeightViolationKind {
  kNonPositive,
  kDuplicate,
  kRatioThree,
  kEven,
};

struct WeightViolation {
  WeightViolationKind kind;
  Integer first;
  Integer second;  // equal to `first` for single-entry violations

  std::string describe() const {
    switch (kind) {
      case WeightViolationKind::kNonPositive:
        return "non-positive entry " + first.get_str();
      case WeightViolationKind::kDuplicate:
        return "duplicate entry " + first.get_str();
      case WeightViolationKind::kRatioThree:
        return "ratio-3 pair (" + first.get_str() + "," + second.get_str() + ")";
      case WeightViolationKind::kEven:
        return "even entry " + first.get_str() + " in a sign-faithful vector";
    }
    return "unknown violation";
  }
};

struct WeightReport {
  std::vector<WeightViolation> violations;

  bool ok() const noexcept { return violations.empty(); }

  std::string describe() const {
    std::string s;
    for (const auto& v : violations) {
      if (!s.empty()) s += "; ";
      s += v.describe();
    }
    return s.empty() ? "ok" : s;
  }
};

/// Checks the genericity conditions that keep every tangent and
/// Grassmannian denominator factor nonzero. With `require_odd` the vector
/// must also be sign-faithful.
inline WeightReport validate(const WeightVector& w, bool require_odd = false) {
  WeightReport report;
  const auto& e = w.entries();
  for (const auto& a : e) {
    if (a <= 0) report.violations.push_back({WeightViolationKind::kNonPositive, a, a});
    if (require_odd && mpz_even_p(a.get_mpz_t()) != 0) {
      report.violations.push_back({WeightViolationKind::kEven, a, a});
    }
  }
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (e[i] == e[j]) {
        report.violations.push_back({WeightViolationKind::kDuplicate, e[i], e[j]});
      } else if (e[j] == 3 * e[i] || e[i] == 3 * e[j]) {
        report.violations.push_back({WeightViolationKind::kRatioThree, e[i], e[j]});
      }
    }
  }
  return report;
}

inline void require_valid(const WeightVector& w, bool require_odd = false) {
  auto report = validate(w, require_odd);
  if (!report.ok()) {
    throw DomainError("non-generic weights [" + w.to_string() + "]: " + report.describe());
  }
}

/// First s elements of 1, 5, 7, 11, 13, 17, ... (1 followed by the primes
/// >= 5). Odd and free of ratio-3 pairs.
inline WeightVector default_weights(std::size_t s) {
  if (s == 0) throw DomainError("default_weights needs s >= 1");
  std::vector<Integer> out{1};
  for (unsigned long k = 5; out.size() < s; k += 2) {
    bool prime = true;
    for (unsigned long d = 3; d * d <= k; d += 2) {
      if (k % d == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.emplace_back(k);
  }
  return WeightVector(std::move(out));
}

/// Deterministic in (s, seed) on every platform: draws come straight from
/// mt19937_64, whose output sequence is fixed by the standard.
inline WeightVector random_generic_weights(std::size_t s, std::uint64_t seed) {
  if (s == 0) throw DomainError("random_generic_weights needs s >= 1");
  constexpr std::uint64_t kOddCount = 500000;  // odd values in [1, 1e6]
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> picked;
  while (picked.size() < s) {
    std::uint64_t a = 1 + 2 * (rng() % kOddCount);
    bool clash = std::any_of(picked.begin(), picked.end(), [a](std::uint64_t b) {
      return a == b || a == 3 * b || b == 3 * a;
    });
    if (!clash) picked.push_back(a);
  }
  std::vector<Integer> out;
  out.reserve(s);
  for (auto a : picked) out.emplace_back(static_cast<unsigned long>(a));
  return WeightVector(std::move(out));
}

/// Parses "w1,w2,..." (CLI form).
inline WeightVector parse_weights(std::string_view text) {
  std::vector<Integer> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw DomainError("empty entry in weight list '" + std::string(text) + "'");
    Integer v;
    if (v.set_str(item, 10) != 0) throw DomainError("not an integer weight: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty weight list");
  return WeightVector(std::move(out));
}

}  // namespace cubics
