#pragma once

#include <Eigen/Core>

#include <optional>

#include "geomwb/scalar.hpp"

namespace Eigen {

// Exact scalars: no epsilon, no vectorization, always initialized.
template <>
struct NumTraits<geomwb::Scalar> : GenericNumTraits<geomwb::Scalar> {
  using Real = geomwb::Scalar;
  using NonInteger = geomwb::Scalar;
  using Nested = geomwb::Scalar;
  using Literal = geomwb::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 50,
    MulCost = 100
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<geomwb::ComplexScalar> : GenericNumTraits<geomwb::ComplexScalar> {
  using Real = geomwb::ComplexScalar;
  using NonInteger = geomwb::ComplexScalar;
  using Nested = geomwb::ComplexScalar;
  using Literal = geomwb::ComplexScalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 40,
    AddCost = 100,
    MulCost = 400
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace geomwb {

template <class T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <class T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using ScalarMatrix = Mat<Scalar>;
using ScalarVector = Vec<Scalar>;
using ComplexMatrix = Mat<ComplexScalar>;
using ComplexVector = Vec<ComplexScalar>;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }
inline bool is_zero(const ComplexScalar& s) { return s.is_zero(); }

template <class Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class Derived>
bool is_symmetric(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i + 1; j < m.cols(); ++j)
      if (!(m(i, j) == m(j, i))) return false;
  return true;
}

template <class T>
struct LinSolution {
  Vec<T> x;
  /// Rank deficient: free variables were set to zero.
  bool underdetermined = false;
  Eigen::Index rank = 0;
};

/// Solves A x = b exactly by fraction-free (Bareiss) elimination with the
/// first nonzero entry as pivot. Returns nullopt when the system is
/// inconsistent.
template <class T>
std::optional<LinSolution<T>> lin_solve(const Mat<T>& A, const Vec<T>& b) {
  const Eigen::Index rows = A.rows();
  const Eigen::Index cols = A.cols();
  Mat<T> m(rows, cols + 1);
  m.leftCols(cols) = A;
  m.col(cols) = b;

  std::vector<Eigen::Index> pivot_cols;
  T previous(1);
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      for (Eigen::Index j = c + 1; j <= cols; ++j)
        m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / previous;
      m(i, c) = T(0);
    }
    // Entries above the pivot row keep their old scale; only rows below move.
    previous = m(r, c);
    pivot_cols.push_back(c);
    ++r;
  }
  for (Eigen::Index i = r; i < rows; ++i)
    if (!is_zero(m(i, cols))) return std::nullopt;

  LinSolution<T> out;
  out.rank = r;
  out.underdetermined = r < cols;
  out.x = Vec<T>::Constant(cols, T(0));
  for (Eigen::Index k = r - 1; k >= 0; --k) {
    const Eigen::Index c = pivot_cols[static_cast<std::size_t>(k)];
    T acc = m(k, cols);
    for (Eigen::Index j = c + 1; j < cols; ++j)
      if (!is_zero(m(k, j))) acc -= m(k, j) * out.x(j);
    out.x(c) = acc / m(k, c);
  }
  return out;
}

/// Basis of the right kernel of A (one column per free variable).
template <class T>
Mat<T> kernel_basis(const Mat<T>& A) {
  const Eigen::Index rows = A.rows();
  const Eigen::Index cols = A.cols();
  Mat<T> m = A;
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) m.row(p).swap(m.row(r));
    const T inv = T(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0, k = 0; c < cols; ++c) {
    if (k < static_cast<Eigen::Index>(pivot_cols.size()) && pivot_cols[static_cast<std::size_t>(k)] == c) {
      ++k;
    } else {
      free_cols.push_back(c);
    }
  }
  Mat<T> basis = Mat<T>::Constant(cols, static_cast<Eigen::Index>(free_cols.size()), T(0));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], static_cast<Eigen::Index>(f)) = T(1);
    for (std::size_t k = 0; k < pivot_cols.size(); ++k)
      basis(pivot_cols[k], static_cast<Eigen::Index>(f)) = -m(static_cast<Eigen::Index>(k), free_cols[f]);
  }
  return basis;
}

/// Exact inverse; nullopt if singular.
template <class T>
std::optional<Mat<T>> exact_inverse(const Mat<T>& A) {
  const Eigen::Index n = A.rows();
  Mat<T> inv(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Vec<T> e = Vec<T>::Constant(n, T(0));
    e(j) = T(1);
    auto sol = lin_solve<T>(A, e);
    if (!sol || sol->underdetermined) return std::nullopt;
    inv.col(j) = sol->x;
  }
  return inv;
}

}  // namespace geomwb
