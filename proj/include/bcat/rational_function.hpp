#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bcat/polynomial.hpp"

namespace bcat {

/// Reduced quotient num/den of exact polynomials.
///
/// Always stored with gcd(num, den) = 1 and the lowest-order nonzero
/// coefficient of den equal to +1. The zero function is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1L) {}
  RationalFunction(const ExactPoly& num, const ExactPoly& den);

  static RationalFunction polynomial(ExactPoly p) { return RationalFunction(std::move(p), ExactPoly(1L)); }

  const ExactPoly& num() const { return num_; }
  const ExactPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  double evaluate(double x) const { return num_.evaluate(x) / den_.evaluate(x); }

  /// First n_max+1 Taylor coefficients at 0.
  std::vector<Rational> series(std::size_t n_max) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const ExactPoly& p, const RationalFunction& f);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  friend RationalFunction rf_reduce(const ExactPoly& num, const ExactPoly& den);
  struct Unchecked {};
  RationalFunction(ExactPoly num, ExactPoly den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}

  ExactPoly num_;
  ExactPoly den_;
};

/// Divides out gcd(num, den) and normalizes the denominator.
RationalFunction rf_reduce(const ExactPoly& num, const ExactPoly& den);

/// Taylor coefficients via the recurrence induced by the denominator.
/// Requires a nonzero constant term in den.
std::vector<Rational> series_coeffs(const RationalFunction& f, std::size_t n_max);
std::vector<Rational> series_coeffs(const ExactPoly& num, const ExactPoly& den, std::size_t n_max);

/// "(num) / (den)" using the polynomial rendering.
std::string to_string(const RationalFunction& f, const std::string& var = "x");

}  // namespace bcat
