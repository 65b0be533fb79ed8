#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bcat/numeric.hpp"

namespace bcat {

/// Dense univariate polynomial; coefficient i multiplies x^i.
///
/// Trailing zero coefficients are always trimmed, so the zero polynomial is
/// the empty coefficient vector and degree() == -1 for it.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(long constant) : coeffs_{Scalar(constant)} { trim(); }
  explicit Polynomial(Scalar constant) : coeffs_{std::move(constant)} { trim(); }
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial monomial(Scalar c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(Scalar(1), 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  Scalar coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }
  const Scalar& leading() const { return coeffs_.back(); }

  /// Index of the lowest-order nonzero coefficient; -1 for the zero polynomial.
  int low_degree() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (!bcat::is_zero(coeffs_[i])) return static_cast<int>(i);
    return -1;
  }

  template <typename T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + convert<T>(*it);
    return acc;
  }

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Scalar> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Polynomial(std::move(d));
  }

  /// Multiplies by x^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Scalar> v(coeffs_.size() + k);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return Polynomial(std::move(v));
  }

  /// Keeps coefficients of degree < n.
  Polynomial truncated(std::size_t n) const {
    if (n >= coeffs_.size()) return *this;
    return Polynomial(std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    if (bcat::is_zero(s)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (bcat::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (bcat::is_zero(b.coeffs_[j])) continue;
        add_product(r[i + j], a.coeffs_[i], b.coeffs_[j]);
      }
    }
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  template <typename T>
  static T convert(const Scalar& c) {
    if constexpr (std::is_same_v<T, double>) {
      return to_double(c);
    } else {
      return T(c);
    }
  }

  void trim() {
    while (!coeffs_.empty() && bcat::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using ExactPoly = Polynomial<Rational>;
using IntPoly = Polynomial<BigInt>;

template <typename Scalar>
bool is_zero(const Polynomial<Scalar>& p) {
  return p.is_zero();
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
inline std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {ExactPoly{}, a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = 1 / b.leading();
  for (int d = a.degree(); d >= db; --d) {
    const Rational f = rem[static_cast<std::size_t>(d)] * inv_lead;
    if (sgn(f) == 0) continue;
    quot[static_cast<std::size_t>(d - db)] = f;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(d - db + i)] -= f * b.coeffs()[static_cast<std::size_t>(i)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {ExactPoly(std::move(quot)), ExactPoly(std::move(rem))};
}

/// Quotient of a division known to be exact. Throws if it is not.
inline ExactPoly exact_quotient(const ExactPoly& a, const ExactPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw StructureError("exact_quotient: nonzero remainder");
  return q;
}

/// Exact quotient in Z[x]; every leading-coefficient division must be exact.
inline IntPoly exact_quotient(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.is_zero()) return {};
  const int db = b.degree();
  if (a.degree() < db) throw StructureError("exact_quotient: nonzero remainder");
  std::vector<BigInt> rem = a.coeffs();
  std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const BigInt& lead = b.leading();
  BigInt f;
  for (int d = a.degree(); d >= db; --d) {
    BigInt& top = rem[static_cast<std::size_t>(d)];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw StructureError("exact_quotient: inexact coefficient division");
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int i = 0; i <= db; ++i) {
      const auto& bc = b.coeffs()[static_cast<std::size_t>(i)];
      if (sgn(bc) != 0) mpz_submul(rem[static_cast<std::size_t>(d - db + i)].get_mpz_t(), f.get_mpz_t(), bc.get_mpz_t());
    }
    quot[static_cast<std::size_t>(d - db)] = f;
  }
  for (int i = 0; i < db; ++i)
    if (sgn(rem[static_cast<std::size_t>(i)]) != 0) throw StructureError("exact_quotient: nonzero remainder");
  return IntPoly(std::move(quot));
}

/// Nonnegative gcd of the coefficients.
inline BigInt content(const IntPoly& p) {
  BigInt g = 0;
  for (const auto& c : p.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

/// Divides out the content; the sign of the leading coefficient is kept.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  const BigInt g = content(p);
  if (g == 1) return p;
  std::vector<BigInt> v = p.coeffs();
  for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(v));
}

/// Multiplies by the positive lcm of the coefficient denominators.
inline IntPoly clear_denominators(const ExactPoly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> v;
  v.reserve(p.size());
  for (const auto& c : p.coeffs()) v.emplace_back(c.get_num() * (l / c.get_den()));
  return IntPoly(std::move(v));
}

inline ExactPoly to_rational(const IntPoly& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  return ExactPoly(std::move(v));
}

/// Remainder of a by b scaled by a positive constant: |lc(b)|^e * a mod b.
/// Positivity of the scale matters for Sturm chains.
inline IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by zero");
  std::vector<BigInt> r = a.coeffs();
  const int db = b.degree();
  const BigInt lead_abs = abs(b.leading());
  const int lead_sign = sgn(b.leading());
  int dr = a.degree();
  BigInt top;
  while (dr >= db) {
    top = r[static_cast<std::size_t>(dr)];
    if (lead_sign < 0) top = -top;
    for (int i = 0; i <= dr; ++i) r[static_cast<std::size_t>(i)] *= lead_abs;
    for (int i = 0; i <= db; ++i) {
      const auto& bc = b.coeffs()[static_cast<std::size_t>(i)];
      if (sgn(bc) != 0) mpz_submul(r[static_cast<std::size_t>(dr - db + i)].get_mpz_t(), top.get_mpz_t(), bc.get_mpz_t());
    }
    while (dr >= 0 && sgn(r[static_cast<std::size_t>(dr)]) == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
    if (dr >= db) r = primitive_part(IntPoly(r)).coeffs();  // positive content, sign-safe
    dr = static_cast<int>(r.size()) - 1;
  }
  return IntPoly(std::move(r));
}

inline ExactPoly make_monic(const ExactPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.leading());
}

/// Monic gcd over Q, computed on primitive integer images.
inline ExactPoly gcd(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  IntPoly u = primitive_part(clear_denominators(a));
  IntPoly v = primitive_part(clear_denominators(b));
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    if (v.degree() == 0) return ExactPoly(Rational(1));
    IntPoly r = primitive_part(positive_pseudo_remainder(u, v));
    u = std::move(v);
    v = std::move(r);
  }
  return make_monic(to_rational(u));
}

/// Ascending-degree rendering such as "1 - 2*x + 2*x^2 - x^4".
template <typename Scalar>
std::string to_string(const Polynomial<Scalar>& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Scalar& c = p.coeffs()[i];
    if (bcat::is_zero(c)) continue;
    const bool negative = sgn(c) < 0;
    Scalar mag = negative ? Scalar(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (!unit) os << mag.get_str() << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

template <typename Scalar>
std::ostream& operator<<(std::ostream& os, const Polynomial<Scalar>& p) {
  return os << to_string(p);
}

}  // namespace bcat
