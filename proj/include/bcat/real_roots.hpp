#pragma once

#include <vector>

#include "bcat/polynomial.hpp"

namespace bcat {

/// Isolating interval for one real root. lo == hi when the root was hit exactly.
struct RootBracket {
  Rational lo;
  Rational hi;

  double value() const { return Rational((lo + hi) / 2).get_d(); }
  double width() const { return Rational(hi - lo).get_d(); }
  bool exact() const { return lo == hi; }
};

/// Sturm chain of the squarefree part of a polynomial, on primitive integer
/// images. Roots are counted without multiplicity.
class SturmChain {
 public:
  explicit SturmChain(const ExactPoly& p);

  /// Number of distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  int sign_changes(const Rational& x) const;

  /// Exact sign of the squarefree part at x.
  int sign_at(const Rational& x) const;

  const std::vector<IntPoly>& chain() const { return chain_; }

 private:
  std::vector<IntPoly> chain_;
};

int sign_at(const IntPoly& p, const Rational& x);

/// Distinct real roots of p in (lo, hi] ∩ (0, ∞), ascending, each bracketed to
/// width < tol. Bisection decisions use exact signs at rational points.
std::vector<RootBracket> real_roots_positive(const ExactPoly& p, const Rational& lo, const Rational& hi,
                                             const Rational& tol);
std::vector<RootBracket> real_roots_positive(const ExactPoly& p, double lo, double hi, double tol);

/// Cauchy bound: every complex root has modulus below the returned value.
Rational root_modulus_bound(const ExactPoly& p);

}  // namespace bcat
