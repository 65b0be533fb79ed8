#include "bcat/real_roots.hpp"

#include <algorithm>
#include <utility>

namespace bcat {

int sign_at(const IntPoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  // Homogeneous Horner: sign of sum c_i a^i b^(d-i) with x = a/b, b > 0.
  const BigInt& a = x.get_num();
  const BigInt& b = x.get_den();
  BigInt acc = p.leading();
  BigInt bpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    bpow *= b;
    acc *= a;
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (sgn(c) != 0) add_product(acc, c, bpow);
  }
  return sgn(acc);
}

SturmChain::SturmChain(const ExactPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  ExactPoly sqf = p;
  if (p.degree() > 0) {
    const ExactPoly g = gcd(p, p.derivative());
    if (g.degree() > 0) sqf = exact_quotient(p, g);
  }
  IntPoly p0 = primitive_part(clear_denominators(sqf));
  chain_.push_back(p0);
  if (p0.degree() <= 0) return;
  chain_.push_back(primitive_part(p0.derivative()));
  while (chain_.back().degree() > 0) {
    IntPoly r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(primitive_part(-r));
  }
}

int SturmChain::sign_changes(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = bcat::sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }

int SturmChain::sign_at(const Rational& x) const { return bcat::sign_at(chain_.front(), x); }

Rational root_modulus_bound(const ExactPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[static_cast<std::size_t>(i)] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

RootBracket refine(const SturmChain& sc, Rational a, Rational b, const Rational& tol) {
  if (sc.sign_at(b) == 0) return {b, b};
  int sa = sc.sign_at(a);
  while (b - a >= tol) {
    Rational mid = (a + b) / 2;
    const int sm = sc.sign_at(mid);
    if (sm == 0) return {mid, mid};
    if (sa != 0) {
      // Single simple root in (a, b) with nonzero endpoint signs.
      if (sm == sa) {
        a = std::move(mid);
      } else {
        b = std::move(mid);
      }
    } else if (sc.count(a, mid) == 1) {
      b = std::move(mid);
    } else {
      a = std::move(mid);
      sa = sm;
    }
  }
  return {a, b};
}

}  // namespace

std::vector<RootBracket> real_roots_positive(const ExactPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& tol) {
  if (p.is_zero()) throw DomainError("real_roots_positive: zero polynomial");
  if (sgn(tol) <= 0) throw DomainError("real_roots_positive: tolerance must be positive");
  std::vector<RootBracket> roots;
  Rational a = lo < 0 ? Rational(0) : lo;
  if (hi <= a || p.degree() <= 0) return roots;
  const SturmChain sc(p);
  std::vector<std::pair<Rational, Rational>> work{{a, hi}};
  while (!work.empty()) {
    auto [l, h] = std::move(work.back());
    work.pop_back();
    const int n = sc.count(l, h);
    if (n == 0) continue;
    if (n == 1) {
      roots.push_back(refine(sc, l, h, tol));
      continue;
    }
    Rational mid = (l + h) / 2;
    work.emplace_back(mid, h);
    work.emplace_back(std::move(l), std::move(mid));
  }
  std::sort(roots.begin(), roots.end(), [](const RootBracket& x, const RootBracket& y) { return x.lo < y.lo; });
  return roots;
}

std::vector<RootBracket> real_roots_positive(const ExactPoly& p, double lo, double hi, double tol) {
  return real_roots_positive(p, Rational(lo), Rational(hi), Rational(tol));
}

}  // namespace bcat
