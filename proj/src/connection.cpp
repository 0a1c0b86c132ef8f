#include "geomwb/connection.hpp"

#include "geomwb/errors.hpp"

namespace geomwb {

ScalarMatrix ConnectionData::omega(int i) const {
  ScalarMatrix m(dim_, dim_);
  for (int j = 0; j < dim_; ++j)
    for (int k = 0; k < dim_; ++k) m(k, j) = (*this)(i, j, k);
  return m;
}

ScalarMatrix ConnectionData::omega(const FrameVector& x) const {
  ScalarMatrix m = ScalarMatrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (!x(i).is_zero()) m += omega(i) * x(i);
  return m;
}

ConnectionData koszul(const LieAlgebra& g) {
  const auto residues = jacobi_residues(g);
  if (!residues.empty())
    throw NotALieAlgebra("d^2 e^" + std::to_string(residues.front().first + 1) + " = " +
                         residues.front().second.to_string() + " is not zero");
  const int n = g.dim();
  std::vector<Scalar> c(static_cast<std::size_t>(n * n * n));
  auto at = [n](int i, int j, int k) { return static_cast<std::size_t>((i * n + j) * n + k); };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) c[at(i, j, k)] = g.structure_constant(i, j, k);
  ConnectionData gamma(n);
  const Scalar half = Scalar(Rational(1, 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Scalar s = c[at(i, j, k)] - c[at(j, k, i)] + c[at(k, i, j)];
        if (!s.is_zero()) gamma(i, j, k) = half * s;
      }
  return gamma;
}

FrameVector nabla_vector(const ConnectionData& gamma, const FrameVector& x, const FrameVector& y) {
  return gamma.omega(x) * y;
}

KForm nabla_form(const ConnectionData& gamma, const FrameVector& x, const KForm& w) {
  const int dim = gamma.dim();
  if (w.dim() != dim || x.size() != dim) throw DimensionMismatch("nabla_form dimension mismatch");
  // (nabla_X e^k)(e_j) = -Gamma_{Xjk}.
  const ScalarMatrix om = gamma.omega(x);
  KForm out(dim, w.degree());
  for (const auto& [mask, c] : w.terms()) {
    const std::vector<int> idx = mask_indices(mask);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (int j = 0; j < dim; ++j) {
        const Scalar& coeff = om(idx[r], j);
        if (coeff.is_zero()) continue;
        std::vector<int> replaced = idx;
        replaced[r] = j;
        out += KForm::monomial(dim, replaced, c * ComplexScalar(-coeff));
      }
  }
  return out;
}

ScalarMatrix j_matrix(int n) {
  const int dim = 2 * n + 1;
  ScalarMatrix J = ScalarMatrix::Zero(dim, dim);
  for (int j = 0; j < n; ++j) {
    J(2 * j + 1, 2 * j) = Scalar(1);
    J(2 * j, 2 * j + 1) = Scalar(-1);
  }
  return J;
}

Scalar frobenius(const ScalarMatrix& a, const ScalarMatrix& b) {
  Scalar s;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_zero() && !b(i, j).is_zero()) s += a(i, j) * b(i, j);
  return s;
}

UnDecomposition un_decompose(const ScalarMatrix& a, int n) {
  const int dim = 2 * n + 1;
  if (a.rows() != dim || a.cols() != dim) throw DimensionMismatch("un_decompose expects a (2n+1)x(2n+1) matrix");
  const ScalarMatrix J = j_matrix(n);
  ScalarMatrix horizontal = a;
  for (int i = 0; i < dim; ++i) {
    horizontal(i, dim - 1) = Scalar(0);
    horizontal(dim - 1, i) = Scalar(0);
  }
  // Projection onto the commutant of J in so(2n).
  const ScalarMatrix u = (horizontal - J * horizontal * J) * Scalar(Rational(1, 2));
  UnDecomposition d;
  d.k = frobenius(a, J) / Scalar(2 * n);
  d.su_part = u - J * d.k;
  d.perp = a - u;
  return d;
}

}  // namespace geomwb
