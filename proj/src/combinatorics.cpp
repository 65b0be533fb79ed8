#include "bcat/combinatorics.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>

namespace bcat {

Threshold parse_threshold(const std::string& s) {
  if (s == "inf" || s == "∞" || s == "oo") return kInf;
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw DomainError("invalid threshold '" + s + "'");
  }
  if (pos != s.size() || v < 0) throw DomainError("invalid threshold '" + s + "'");
  return Threshold::finite(v);
}

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = static_cast<int>(entries_.size());
  std::vector<bool> seen(entries_.size() + 1, false);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) throw DomainError("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

bool is_132_avoiding(std::span<const int> p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (p[j] <= p[i]) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (p[i] < p[k] && p[k] < p[j]) return false;
    }
  return true;
}

bool is_m_bounded(std::span<const int> p, int m) {
  if (m < 1) throw DomainError("adjacency bound must be at least 1");
  for (std::size_t i = 1; i < p.size(); ++i)
    if (std::abs(p[i] - p[i - 1]) > m) return false;
  return true;
}

namespace {

class AvoiderGenerator {
 public:
  AvoiderGenerator(const AvoiderFilter& f, const std::function<void(std::span<const int>)>& visit)
      : f_(f), visit_(visit), prefix_(static_cast<std::size_t>(f.n)), prefix_min_(static_cast<std::size_t>(f.n) + 1),
        used_(static_cast<std::size_t>(f.n) + 1, false) {}

  void run() {
    if (f_.n == 0) {
      visit_(std::span<const int>{});
      return;
    }
    prefix_min_[0] = std::numeric_limits<int>::max();
    extend(0);
  }

 private:
  // A new entry v closes a 132 iff some earlier p_j > v has a smaller entry before it.
  bool creates_132(std::size_t len, int v) const {
    for (std::size_t j = 1; j < len; ++j)
      if (prefix_[j] > v && prefix_min_[j] < v) return true;
    return false;
  }

  void extend(std::size_t len) {
    const int n = f_.n;
    if (len == static_cast<std::size_t>(n)) {
      if (f_.last.admits(n - prefix_[len - 1])) visit_(prefix_);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used_[static_cast<std::size_t>(v)]) continue;
      if (len == 0 && !f_.first.admits(n - v)) continue;
      if (len > 0 && f_.max_gap > 0 && std::abs(v - prefix_[len - 1]) > f_.max_gap) continue;
      if (creates_132(len, v)) continue;
      prefix_[len] = v;
      prefix_min_[len + 1] = std::min(prefix_min_[len], v);
      used_[static_cast<std::size_t>(v)] = true;
      extend(len + 1);
      used_[static_cast<std::size_t>(v)] = false;
    }
  }

  const AvoiderFilter& f_;
  const std::function<void(std::span<const int>)>& visit_;
  std::vector<int> prefix_;
  std::vector<int> prefix_min_;  // prefix_min_[j] = min(prefix_[0..j-1])
  std::vector<bool> used_;
};

}  // namespace

void for_each_avoider(const AvoiderFilter& filter, const std::function<void(std::span<const int>)>& visit) {
  if (filter.n < 0) throw DomainError("negative permutation length");
  AvoiderGenerator(filter, visit).run();
}

BigInt count_avoiders(const AvoiderFilter& filter) {
  std::uint64_t count = 0;
  for_each_avoider(filter, [&count](std::span<const int>) { ++count; });
  return BigInt(static_cast<unsigned long>(count));
}

BigInt brute_force_count(int m, int n, Threshold p, Threshold q, int oracle_cap) {
  if (m < 1) throw DomainError("adjacency bound must be at least 1");
  if (n < 0) throw DomainError("negative permutation length");
  if (n > oracle_cap)
    throw DomainError("oracle cap exceeded: n=" + std::to_string(n) + " > cap " + std::to_string(oracle_cap));
  if (n == 0) {
    if (p.is_finite() || q.is_finite())
      throw DomainError("endpoint-restricted counts are defined only for n >= 1");
    return 1;
  }
  return count_avoiders(AvoiderFilter{n, m, p, q});
}

BigInt catalan(long k) {
  if (k < 0) throw DomainError("catalan: negative index");
  BigInt c = binomial(2 * k, k);
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
  return c;
}

BigInt c_kp(int k, Threshold p) {
  if (k < 1) throw DomainError("c_kp: k must be at least 1");
  if (k == 1) return 1;
  if (p.is_infinite()) return catalan(k - 1);
  // Ballot numbers d/(k-1) * binom(2k-d-3, k-2) count first entry k - d.
  const int top = std::min(p.value(), k - 1);
  BigInt sum = 0;
  for (int d = 1; d <= top; ++d) sum += d * binomial(2L * k - d - 3, k - 2);
  mpz_divexact_ui(sum.get_mpz_t(), sum.get_mpz_t(), static_cast<unsigned long>(k - 1));
  return sum;
}

BigInt c_kp_enumerated(int k, Threshold p) {
  if (k < 1) throw DomainError("c_kp: k must be at least 1");
  if (k == 1) return 1;
  // k - σ_1 ≤ p  <=>  (k-1) - σ_1 ≤ p - 1
  const auto shifted = p.minus(1);
  if (!shifted) return 0;
  return count_avoiders(AvoiderFilter{k - 1, 0, *shifted, kInf});
}

BigInt block_construction_count(int m, int n) {
  if (m < 1 || n < 0) throw DomainError("block_construction_count: need m >= 1, n >= 0");
  BigInt r;
  const BigInt base = catalan(m - 1);
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n / (m + 1)));
  return r;
}

}  // namespace bcat
