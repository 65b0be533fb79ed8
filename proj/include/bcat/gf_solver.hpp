#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "bcat/rational_function.hpp"
#include "bcat/state_system.hpp"

namespace bcat {

/// Exact counts T_{p,q}(n) for 1 ≤ n ≤ n_max, all endpoint states.
class CountTable {
 public:
  CountTable(int m, int n_max, std::vector<std::vector<BigInt>> rows) : m_(m), n_max_(n_max), rows_(std::move(rows)) {}

  int m() const { return m_; }
  int n_max() const { return n_max_; }
  /// State index in the canonical order of StateSystem.
  const BigInt& value(int state, int n) const { return rows_.at(static_cast<std::size_t>(n - 1)).at(static_cast<std::size_t>(state)); }
  const BigInt& value(const StatePair& s, int n) const;

  /// a_n with the convention a_0 = 1.
  BigInt unrestricted(int n) const { return n == 0 ? BigInt(1) : value(state_count() - 1, n); }
  /// a_0, ..., a_{n_max}.
  std::vector<BigInt> unrestricted_sequence() const;

 private:
  int state_count() const { return (m_ + 1) * (m_ + 1); }
  int m_;
  int n_max_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[n-1][state]
};

/// Bottom-up evaluation of the maximum-decomposition recursion.
CountTable dp_counts(int m, int n_max);

enum class SolveMode {
  Full,        ///< every state
  OutputOnly,  ///< only states that reach (∞, ∞)
};

/// State generating functions F_{p,q}(x) = Σ_{n≥1} T_{p,q}(n) x^n, solved
/// component by component in topological order.
std::map<StatePair, RationalFunction> solve_system(const StateSystem& sys, SolveMode mode = SolveMode::Full);

/// A(x) = 1 + F_{∞,∞}(x), reduced.
RationalFunction generating_function(const StateSystem& sys);
RationalFunction generating_function(int m);

/// a_n = Σ_j lag_coeffs[j-1] a_{n-j} for every n ≥ valid_from.
struct Recurrence {
  int order = 0;
  std::vector<Rational> lag_coeffs;
  int valid_from = 0;

  /// Extends a prefix (at least valid_from terms) to `total` terms.
  std::vector<Rational> extend(std::span<const Rational> prefix, std::size_t total) const;
};

/// Reads the recurrence off the reduced denominator 1 - Σ c_j x^j.
Recurrence recurrence_from(const RationalFunction& gf);
Recurrence recurrence(int m);

/// Closed-form bound d_m on the recurrence order (1 for m = 1).
long recurrence_order_bound(int m);

}  // namespace bcat
