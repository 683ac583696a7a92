#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hitchin/polynomial.hpp"

namespace Eigen {

template <typename S>
struct NumTraits<hitchin::Polynomial<S>> : GenericNumTraits<hitchin::Polynomial<S>> {
  using Real = hitchin::Polynomial<S>;
  using NonInteger = hitchin::Polynomial<S>;
  using Nested = hitchin::Polynomial<S>;
  using Literal = hitchin::Polynomial<S>;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace Eigen

namespace hitchin {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// r x r matrices over Q[x]: first-chart form of a twisted endomorphism.
using PolyMatrix = DenseMatrix<Poly>;
/// Matrices over Q[x][lambda].
using LambdaMatrix = DenseMatrix<LambdaPoly>;

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
/// Division in Q[x] that must leave no remainder; throws std::logic_error otherwise.
Poly exact_quotient(const Poly& a, const Poly& b);

template <typename Scalar>
DenseMatrix<Scalar> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  DenseMatrix<Scalar> m(rows, cols);
  m.fill(Scalar(0));
  return m;
}

template <typename Scalar>
DenseMatrix<Scalar> identity_matrix(Eigen::Index n) {
  DenseMatrix<Scalar> m = zero_matrix<Scalar>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

template <typename Scalar>
Scalar trace(const DenseMatrix<Scalar>& m) {
  Scalar acc(0);
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) acc += m(i, i);
  return acc;
}

template <typename Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!is_zero(m(i, j))) return false;
  return true;
}

/// Fraction-free Gaussian elimination (Bareiss). Needs `exact_quotient` for
/// the scalar ring; every intermediate quotient is exact in an integral domain.
template <typename Scalar>
Scalar determinant_bareiss(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = exact_quotient(Scalar(m(i, j) * m(k, k) - m(i, k) * m(k, j)), previous);
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// Cofactor expansion along rows, memoized on the set of used columns.
/// Uses only ring operations, so it works over Q[x][lambda] as well.
template <typename Scalar>
Scalar determinant_laplace(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const auto n = static_cast<unsigned>(m.rows());
  if (n == 0) return Scalar(1);
  if (n > 20) throw std::invalid_argument("cofactor expansion limited to 20 x 20");
  // minors[mask] = determinant of the trailing rows against the unused columns
  std::vector<Scalar> minors(std::size_t{1} << n, Scalar(0));
  const std::size_t full = (std::size_t{1} << n) - 1;
  minors[full] = Scalar(1);
  for (std::size_t mask = full; mask-- > 0;) {
    const auto row = static_cast<Eigen::Index>(__builtin_popcountll(mask));
    Scalar acc(0);
    int sign = 1;
    for (unsigned col = 0; col < n; ++col) {
      if (mask & (std::size_t{1} << col)) continue;
      const Scalar& entry = m(row, static_cast<Eigen::Index>(col));
      if (!is_zero(entry)) {
        Scalar term = entry * minors[mask | (std::size_t{1} << col)];
        if (sign > 0)
          acc += term;
        else
          acc -= term;
      }
      sign = -sign;
    }
    minors[mask] = std::move(acc);
  }
  return minors[0];
}

}  // namespace hitchin
