#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geomwb/dense.hpp"

namespace geomwb {

inline constexpr int kMaxDim = 9;

/// Strictly increasing index tuple (i1 < ... < ik), 0-based, as a bitmask.
using IndexMask = std::uint16_t;

/// Vector in the orthonormal frame e_1..e_dim dual to the coframe.
using FrameVector = ScalarVector;

FrameVector frame_basis(int dim, int i);

/// Invariant exterior form on a dim-dimensional coframe. Coefficients are
/// stored against strictly increasing index tuples with the reordering sign
/// absorbed, so structurally equal forms compare equal. Evaluation follows
/// e^i ^ e^j (e_i, e_j) = 1.
class KForm {
 public:
  KForm() = default;
  KForm(int dim, int degree);

  /// Coframe element e^i (0-based).
  static KForm coframe(int dim, int i);
  /// c * e^{i1} ^ ... ^ e^{ik} for arbitrary (possibly unsorted) indices.
  static KForm monomial(int dim, std::span<const int> indices, ComplexScalar c = 1);
  /// The real 1-form metrically dual to a frame vector.
  static KForm flat(const FrameVector& v);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_real() const;

  const std::map<IndexMask, ComplexScalar>& terms() const { return terms_; }
  ComplexScalar coefficient(IndexMask mask) const;
  /// Coefficient of e^{i1...ik} with sign for unsorted indices.
  ComplexScalar coefficient(std::span<const int> indices) const;

  void add_term(IndexMask mask, const ComplexScalar& c);

  KForm operator-() const;
  KForm& operator+=(const KForm& o);
  KForm& operator-=(const KForm& o);
  KForm& operator*=(const ComplexScalar& c);
  friend KForm operator+(KForm a, const KForm& b) { return a += b; }
  friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
  friend KForm operator*(KForm a, const ComplexScalar& c) { return a *= c; }
  friend KForm operator*(const ComplexScalar& c, KForm a) { return a *= c; }
  /// Zero forms of different degree compare equal.
  friend bool operator==(const KForm& a, const KForm& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_ && (a.degree_ == b.degree_ || a.terms_.empty());
  }

  KForm conj() const;
  KForm real_part() const;
  KForm imag_part() const;

  /// Evaluates a 1-form on a vector.
  ComplexScalar operator()(const FrameVector& v) const;
  /// Evaluates a 2-form on two vectors.
  ComplexScalar operator()(const FrameVector& u, const FrameVector& v) const;

  /// Components of a real 1-form as a frame vector (the metric dual).
  FrameVector sharp() const;

  /// e.g. "-2*e12+e34"; "0" for the zero form.
  std::string to_string() const;

 private:
  int dim_ = 0;
  int degree_ = 0;
  std::map<IndexMask, ComplexScalar> terms_;
};

inline std::ostream& operator<<(std::ostream& os, const KForm& f) { return os << f.to_string(); }

std::vector<int> mask_indices(IndexMask mask);
IndexMask indices_mask(std::span<const int> indices);

/// Graded-commutative exterior product.
KForm wedge(const KForm& a, const KForm& b);
/// Interior product X _| w as an antiderivation.
KForm interior(const FrameVector& x, const KForm& w);

/// Left-invariant data of a Lie algebra in an orthonormal coframe: the
/// differentials de^k as real 2-forms. Structure constants are recovered via
/// de^k(e_i, e_j) = -e^k([e_i, e_j]).
class LieAlgebra {
 public:
  LieAlgebra() = default;
  LieAlgebra(int dim, std::vector<KForm> differentials, std::vector<std::string> params = {});

  static LieAlgebra abelian(int dim);
  /// de^1 = ... = de^{2n} = 0, de^{2n+1} = -2(e^12 + ... + e^{2n-1,2n}).
  static LieAlgebra heisenberg(int n);

  int dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }
  /// de^k (0-based k).
  const KForm& d(int k) const { return differentials_[static_cast<std::size_t>(k)]; }
  const std::vector<KForm>& differentials() const { return differentials_; }

  /// <[e_i, e_j], e_k>.
  Scalar structure_constant(int i, int j, int k) const;
  /// [x, y] for frame vectors.
  FrameVector bracket(const FrameVector& x, const FrameVector& y) const;

  friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

 private:
  int dim_ = 0;
  std::vector<KForm> differentials_;
  std::vector<std::string> params_;
};

/// Chevalley-Eilenberg differential extended to all degrees as a graded
/// derivation.
KForm ce_differential(const KForm& w, const LieAlgebra& g);

/// d(de^k) for every k whose residue is nonzero; empty iff Jacobi holds.
std::vector<std::pair<int, KForm>> jacobi_residues(const LieAlgebra& g);

/// Re-expresses g in the orthonormal frame f_a = sum_i P(i, a) e_i.
/// P must be orthogonal.
LieAlgebra change_frame(const LieAlgebra& g, const ScalarMatrix& P);

/// Pullback of a form along the frame change f_a = sum_i P(i, a) e_i, i.e. the
/// same form expressed in the coframe f^a.
KForm change_frame(const KForm& w, const ScalarMatrix& P);

/// Substitutes parameter values in every coefficient.
LieAlgebra substitute(const LieAlgebra& g, const ParamAssignment& values);
KForm substitute(const KForm& w, const ParamAssignment& values);

}  // namespace geomwb
