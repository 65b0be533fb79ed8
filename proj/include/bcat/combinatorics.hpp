#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bcat/numeric.hpp"
#include "bcat/threshold.hpp"

namespace bcat {

/// One-line notation of a permutation of {1, ..., n}.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless entries form a bijection on {1, ..., n}.
  explicit Permutation(std::vector<int> entries);

  std::size_t size() const { return entries_.size(); }
  std::span<const int> entries() const { return entries_; }
  int operator[](std::size_t i) const { return entries_[i]; }

 private:
  std::vector<int> entries_;
};

/// No indices i < j < k with p_i < p_k < p_j. Cubic scan.
bool is_132_avoiding(std::span<const int> p);
inline bool is_132_avoiding(const Permutation& p) { return is_132_avoiding(p.entries()); }

/// Every adjacent difference has absolute value at most m.
bool is_m_bounded(std::span<const int> p, int m);
inline bool is_m_bounded(const Permutation& p, int m) { return is_m_bounded(p.entries(), m); }

inline constexpr int kDefaultOracleCap = 11;

/// Options for the backtracking generator of 132-avoiders.
struct AvoiderFilter {
  int n = 0;
  /// Maximum adjacent gap; 0 disables the bound.
  int max_gap = 0;
  Threshold first = kInf;  ///< bound on n - p_1
  Threshold last = kInf;   ///< bound on n - p_n
};

/// Visits every 132-avoiding permutation of length filter.n that meets the
/// filter, in lexicographic order. Prefixes are pruned as soon as they contain a
/// 132 pattern, break the gap bound, or fail the first-entry bound.
void for_each_avoider(const AvoiderFilter& filter, const std::function<void(std::span<const int>)>& visit);

/// Number of permutations counted by the filter; empty permutation counts once.
BigInt count_avoiders(const AvoiderFilter& filter);

/// Exhaustive count of m-bounded 132-avoiders of length n with n - p_1 ≤ p and
/// n - p_n ≤ q. For n = 0 both thresholds must be ∞ (the empty permutation).
BigInt brute_force_count(int m, int n, Threshold p, Threshold q, int oracle_cap = kDefaultOracleCap);

BigInt catalan(long k);

/// Left-block coefficient c_{k,p}: 132-avoiders σ of length k-1 with
/// k - σ_1 ≤ p, via the Catalan-triangle closed form.
BigInt c_kp(int k, Threshold p);

/// Same count by direct enumeration.
BigInt c_kp_enumerated(int k, Threshold p);

/// Size of the block-construction family, C_{m-1}^{floor(n/(m+1))}.
BigInt block_construction_count(int m, int n);

}  // namespace bcat
