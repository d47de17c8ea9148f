#pragma once

#include <stdexcept>
#include <string>

namespace cubics {

/// Thrown when an argument lies outside an operation's domain
/// (even degree where odd is required, non-generic weights, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Why a count was refused. Values map one-to-one onto the CLI's
/// machine-readable `reason` field.
enum class RefusalReason {
  kRankMismatch,
  kEvenDegree,
  kNotOrientable,
};

inline const char* reason_code(RefusalReason r) {
  switch (r) {
    case RefusalReason::kRankMismatch:
      return "rank_mismatch";
    case RefusalReason::kEvenDegree:
      return "even_degree";
    case RefusalReason::kNotOrientable:
      return "not_orientable";
  }
  return "unknown";
}

/// The profile has no well-defined signed count (or its count is
/// forced to vanish and no override was given).
class RefusalError : public std::runtime_error {
 public:
  RefusalError(RefusalReason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  RefusalReason reason() const noexcept { return reason_; }

 private:
  RefusalReason reason_;
};

/// An internal invariant broke: a non-integral total or disagreeing
/// weight samples. Either means a formula bug.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubics
