#pragma once

// Eigen interop for exact polynomial scalars, plus fraction-free (Bareiss)
// elimination templated on the matrix scalar.

#include <utility>

#include <Eigen/Core>

#include "bcat/polynomial.hpp"

namespace Eigen {

template <typename S>
struct NumTraits<bcat::Polynomial<S>> : GenericNumTraits<bcat::Polynomial<S>> {
  using Real = bcat::Polynomial<S>;
  using NonInteger = bcat::Polynomial<S>;
  using Nested = bcat::Polynomial<S>;
  using Literal = bcat::Polynomial<S>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 256
  };
  static constexpr int digits10() { return 0; }
  static constexpr int max_digits10() { return 0; }
};

}  // namespace Eigen

namespace bcat {

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using PolyMatrix = MatrixX<ExactPoly>;
using IntPolyMatrix = MatrixX<IntPoly>;

namespace detail {

// Bareiss forward elimination in place over the first `pivot_cols` columns.
// Returns the row-swap parity (+1/-1), or 0 if a zero pivot column is hit.
template <typename Scalar>
int bareiss_forward(MatrixX<Scalar>& m, Eigen::Index pivot_cols) {
  using Eigen::Index;
  int sign = 1;
  Scalar prev(1L);
  const Index rows = m.rows();
  const Index cols = m.cols();
  for (Index k = 0; k < pivot_cols; ++k) {
    Index piv = -1;
    for (Index r = k; r < rows; ++r) {
      if (!is_zero(m(r, k))) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return 0;
    if (piv != k) {
      m.row(k).swap(m.row(piv));
      sign = -sign;
    }
    const Scalar pivot = m(k, k);
    for (Index i = k + 1; i < rows; ++i) {
      const Scalar factor = m(i, k);
      const bool factor_zero = is_zero(factor);
      for (Index j = k + 1; j < cols; ++j) {
        Scalar t = pivot * m(i, j);
        if (!factor_zero && !is_zero(m(k, j))) t -= factor * m(k, j);
        m(i, j) = is_zero(t) ? Scalar{} : exact_quotient(t, prev);
      }
      m(i, k) = Scalar{};
    }
    prev = pivot;
  }
  return sign;
}

}  // namespace detail

/// Determinant by fraction-free elimination; every division is exact.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  if (a.rows() == 0) return Scalar(1L);
  MatrixX<Scalar> m = a;
  const int sign = detail::bareiss_forward(m, m.rows());
  if (sign == 0) return Scalar{};
  Scalar d = m(m.rows() - 1, m.cols() - 1);
  if (sign < 0) d = -d;
  return d;
}

/// Solution of A X = scale * B with scale = ±det(A), all entries in the ring.
template <typename Scalar>
struct ScaledSolution {
  Scalar scale;
  MatrixX<Scalar> x;
};

template <typename Scalar>
ScaledSolution<Scalar> bareiss_solve(const MatrixX<Scalar>& a, const MatrixX<Scalar>& b) {
  using Eigen::Index;
  const Index n = a.rows();
  if (a.cols() != n || b.rows() != n) throw DomainError("bareiss_solve: dimension mismatch");
  MatrixX<Scalar> aug(n, n + b.cols());
  aug.leftCols(n) = a;
  aug.rightCols(b.cols()) = b;
  if (detail::bareiss_forward(aug, n) == 0) throw StructureError("bareiss_solve: singular matrix");
  const Scalar d = aug(n - 1, n - 1);
  MatrixX<Scalar> x(n, b.cols());
  for (Index c = 0; c < b.cols(); ++c) {
    for (Index i = n - 1; i >= 0; --i) {
      Scalar t = d * aug(i, n + c);
      for (Index j = i + 1; j < n; ++j)
        if (!is_zero(aug(i, j)) && !is_zero(x(j, c))) t -= aug(i, j) * x(j, c);
      x(i, c) = is_zero(t) ? Scalar{} : exact_quotient(t, aug(i, i));
    }
  }
  return {d, std::move(x)};
}

}  // namespace bcat
