#include "bcat/rational_function.hpp"

#include <algorithm>

namespace bcat {

namespace {

void normalize(ExactPoly& num, ExactPoly& den) {
  const int low = den.low_degree();
  const Rational lead = den.coeffs()[static_cast<std::size_t>(low)];
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
}

}  // namespace

RationalFunction rf_reduce(const ExactPoly& num, const ExactPoly& den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  ExactPoly n = num;
  ExactPoly d = den;
  if (d.degree() > 0) {
    const ExactPoly g = gcd(n, d);
    if (g.degree() > 0) {
      n = exact_quotient(n, g);
      d = exact_quotient(d, g);
    }
  }
  normalize(n, d);
  return RationalFunction(std::move(n), std::move(d), RationalFunction::Unchecked{});
}

RationalFunction::RationalFunction(const ExactPoly& num, const ExactPoly& den) {
  *this = rf_reduce(num, den);
}

std::vector<Rational> RationalFunction::series(std::size_t n_max) const { return series_coeffs(num_, den_, n_max); }

std::vector<Rational> series_coeffs(const ExactPoly& num, const ExactPoly& den, std::size_t n_max) {
  if (den.is_zero() || sgn(den.coeff(0)) == 0)
    throw DomainError("series expansion needs a denominator with nonzero constant term");
  const Rational inv0 = 1 / den.coeff(0);
  const std::size_t dd = den.size();
  std::vector<Rational> a(n_max + 1);
  Rational acc;
  for (std::size_t n = 0; n <= n_max; ++n) {
    acc = num.coeff(n);
    const std::size_t top = std::min(n, dd - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      const Rational& dj = den.coeffs()[j];
      if (sgn(dj) != 0) acc -= dj * a[n - j];
    }
    a[n] = (inv0 == 1) ? acc : Rational(acc * inv0);
  }
  return a;
}

std::vector<Rational> series_coeffs(const RationalFunction& f, std::size_t n_max) {
  return series_coeffs(f.num(), f.den(), n_max);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return rf_reduce(a.num_ + b.num_, a.den_);
  const ExactPoly g = gcd(a.den_, b.den_);
  const ExactPoly ca = exact_quotient(b.den_, g);
  const ExactPoly cb = exact_quotient(a.den_, g);
  return rf_reduce(a.num_ * ca + b.num_ * cb, a.den_ * ca);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + RationalFunction(-b.num_, b.den_, RationalFunction::Unchecked{});
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return rf_reduce(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const ExactPoly& p, const RationalFunction& f) { return rf_reduce(p * f.num_, f.den_); }

std::string to_string(const RationalFunction& f, const std::string& var) {
  return "(" + to_string(f.num(), var) + ") / (" + to_string(f.den(), var) + ")";
}

}  // namespace bcat
