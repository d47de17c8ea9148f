#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cubics/errors.hpp"

namespace cubics {

/// A counting instance: complete intersections of multidegree
/// (m_1, ..., m_r) in P^n. Degrees are stored sorted ascending.
class DegreeProfile {
 public:
  DegreeProfile(long n, std::vector<long> degrees) : n_(n), degrees_(std::move(degrees)) {
    if (n_ < 1) throw DomainError("n must be positive, got " + std::to_string(n_));
    if (degrees_.empty()) throw DomainError("at least one degree is required");
    for (long m : degrees_) {
      if (m < 3) {
        throw DomainError("degree " + std::to_string(m) +
                          " is not supported: degrees must be >= 3 (linear and quadric "
                          "factors have no signed count here)");
      }
    }
    std::sort(degrees_.begin(), degrees_.end());
  }

  long n() const noexcept { return n_; }
  const std::vector<long>& degrees() const noexcept { return degrees_; }
  std::size_t r() const noexcept { return degrees_.size(); }

  /// floor((n+1)/2): number of coordinate pairs, i.e. weights.
  std::size_t weight_count() const { return static_cast<std::size_t>((n_ + 1) / 2); }

  /// rank of ⊕ E_{m_i} = Σ (3 m_i + 1)
  long bundle_rank() const {
    long s = 0;
    for (long m : degrees_) s += 3 * m + 1;
    return s;
  }
  long dimension() const noexcept { return 4 * n_; }
  bool rank_matches() const { return bundle_rank() == dimension(); }

  std::string degrees_string() const {
    std::string s;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(degrees_[i]);
    }
    return s;
  }
  std::string to_string() const { return "(" + std::to_string(n_) + ",[" + degrees_string() + "])"; }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
  friend auto operator<=>(const DegreeProfile&, const DegreeProfile&) = default;

 private:
  long n_;
  std::vector<long> degrees_;
};

/// Parses "d1,d2,..." (CLI form).
inline std::vector<long> parse_degrees(std::string_view text) {
  std::vector<long> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) {
      throw DomainError("not an integer degree: '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty degree list");
  return out;
}

}  // namespace cubics
