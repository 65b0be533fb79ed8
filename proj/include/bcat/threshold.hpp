#pragma once

#include <compare>
#include <optional>
#include <string>

#include "bcat/numeric.hpp"

namespace bcat {

/// Endpoint-deficiency threshold: a nonnegative bound or the vacuous bound ∞.
///
/// Ordered Finite(0) < Finite(1) < ... < Infinite.
class Threshold {
 public:
  constexpr Threshold() = default;
  static constexpr Threshold finite(int bound) { return Threshold(bound); }
  static constexpr Threshold infinite() { return Threshold(kInfinite); }

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  constexpr bool is_finite() const { return !is_infinite(); }
  /// Bound value; only meaningful for finite thresholds.
  constexpr int value() const { return value_; }

  /// True when a deficiency d satisfies d ≤ threshold.
  constexpr bool admits(long deficiency) const { return is_infinite() || deficiency <= value_; }

  /// Shift by r ≥ 0 with ∞ - r = ∞; empty when the result would be negative.
  constexpr std::optional<Threshold> minus(int r) const {
    if (is_infinite()) return *this;
    if (value_ - r < 0) return std::nullopt;
    return Threshold(value_ - r);
  }

  /// Member of B_m = {0, ..., m-1, ∞}.
  constexpr bool in_range(int m) const { return is_infinite() || (value_ >= 0 && value_ <= m - 1); }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(value_); }

  friend constexpr auto operator<=>(const Threshold&, const Threshold&) = default;

 private:
  static constexpr int kInfinite = 1 << 30;
  constexpr explicit Threshold(int v) : value_(v) {}
  int value_ = 0;
};

inline constexpr Threshold kInf = Threshold::infinite();

/// Parses "inf", "∞" or a nonnegative integer.
Threshold parse_threshold(const std::string& s);

/// Endpoint state (p, q): bounds on the first and last deficiency.
struct StatePair {
  Threshold p;
  Threshold q;

  std::string to_string() const { return "(" + p.to_string() + "," + q.to_string() + ")"; }
  friend constexpr auto operator<=>(const StatePair&, const StatePair&) = default;
};

}  // namespace bcat
