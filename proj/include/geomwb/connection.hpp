#pragma once

#include <vector>

#include "geomwb/exterior.hpp"

namespace geomwb {

/// Levi-Civita connection of the metric making the coframe orthonormal:
/// Gamma_ijk = <nabla_{e_i} e_j, e_k>.
class ConnectionData {
 public:
  ConnectionData() = default;
  explicit ConnectionData(int dim) : dim_(dim), gamma_(static_cast<std::size_t>(dim * dim * dim)) {}

  int dim() const { return dim_; }
  const Scalar& operator()(int i, int j, int k) const { return gamma_[index(i, j, k)]; }
  Scalar& operator()(int i, int j, int k) { return gamma_[index(i, j, k)]; }

  /// Connection matrix omega(e_i): entry (k, j) is Gamma_ijk, so the column
  /// j is nabla_{e_i} e_j. Skew-symmetric.
  ScalarMatrix omega(int i) const;
  ScalarMatrix omega(const FrameVector& x) const;

 private:
  std::size_t index(int i, int j, int k) const { return static_cast<std::size_t>((i * dim_ + j) * dim_ + k); }

  int dim_ = 0;
  std::vector<Scalar> gamma_;
};

/// Gamma_ijk = 1/2 (c_ijk - c_jki + c_kij). Throws NotALieAlgebra when the
/// Jacobi identity fails.
ConnectionData koszul(const LieAlgebra& g);

/// nabla_X Y for left-invariant X, Y.
FrameVector nabla_vector(const ConnectionData& gamma, const FrameVector& x, const FrameVector& y);

/// nabla_X w, extending nabla_X e^k = sum_j Gamma_{Xkj} e^j as a derivation.
KForm nabla_form(const ConnectionData& gamma, const FrameVector& x, const KForm& w);

/// The generator J = e_21 - e_12 + ... + e_{2n,2n-1} - e_{2n-1,2n} of the
/// centre of u(n) inside so(2n+1).
ScalarMatrix j_matrix(int n);

/// so(2n+1) = su(n) + <J> + u(n)^perp.
struct UnDecomposition {
  ScalarMatrix su_part;
  Scalar k;
  ScalarMatrix perp;
};

UnDecomposition un_decompose(const ScalarMatrix& a, int n);

/// Trace form <A, B> = sum_ij A_ij B_ij.
Scalar frobenius(const ScalarMatrix& a, const ScalarMatrix& b);

}  // namespace geomwb
