#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace bcat {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when a caller violates an operation's documented precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal cross-check or structural invariant fails.
class StructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline double to_double(const BigInt& v) { return v.get_d(); }
inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

/// Natural log of a positive big integer without overflowing a double.
inline double log_of(const BigInt& v) {
  if (v <= 0) throw DomainError("log_of: nonpositive argument");
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

/// "p/q" for non-integers, "p" for integers.
inline std::string to_string(const Rational& v) { return v.get_str(); }
inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Parses "p/q" or "p"; the result is canonicalized.
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw DomainError("not a rational literal: '" + s + "'");
  if (r.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

// Exact division hooks used by the fraction-free elimination templates.
inline BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }

inline bool is_zero(const BigInt& v) { return sgn(v) == 0; }
inline bool is_zero(const Rational& v) { return sgn(v) == 0; }

// acc += a * b without temporaries where the backend allows it.
inline void add_product(BigInt& acc, const BigInt& a, const BigInt& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
inline void add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }

}  // namespace bcat
