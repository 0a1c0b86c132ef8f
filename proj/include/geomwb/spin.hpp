#pragma once

#include <map>
#include <optional>
#include <string>

#include "geomwb/connection.hpp"
#include "geomwb/exterior.hpp"

namespace geomwb {

/// Coefficients over u_0, ..., u_{2^n - 1}; k = sum a_r 2^r.
using Spinor = ComplexVector;

Spinor spinor_basis(int n, int k);

/// Even: the Cl(2n) action (written with a circle in the text) on e_1..e_2n.
/// Odd: the Cl(2n+1) action with e_{2n+1} diagonal and
/// e_j . psi = -e_{2n+1} . (e_j (even) psi).
enum class Parity { Even, Odd };

/// e_j . psi for a single generator (0-based j).
Spinor generator_act(int j, const Spinor& psi, Parity parity = Parity::Odd);
Spinor vector_act(const FrameVector& v, const Spinor& psi, Parity parity = Parity::Odd);

/// e^{i1...ik} acts as e_{i1} . ... . e_{ik} . (odd representation).
Spinor form_act(const KForm& w, const Spinor& psi);

/// A = sum_{i<j} a_ij (e_ij - e_ji) acts as -1/2 sum_{i<j} a_ij e_i . e_j.
Spinor spin_lift_act(const ScalarMatrix& a, const Spinor& psi);

enum class QStatus { Ok, NoSolution, Asymmetric };
std::string to_string(QStatus s);

struct QResult {
  QStatus status = QStatus::NoSolution;
  /// Rows v_i with v_i . u_0 = 2 sigma_i; complete for Ok and Asymmetric.
  ScalarMatrix q;
  /// First frame direction whose sigma is outside the Clifford image.
  int failing_row = -1;
};

/// Generalized Killing test for u_0: nabla_X u_0 = 1/2 Q(X) . u_0.
/// Requires dim g = 2n+1; throws NotALieAlgebra if Jacobi fails.
QResult extract_q(const LieAlgebra& g, int n);
/// sigma_i = nabla_{e_i} u_0 for every frame direction.
std::vector<Spinor> spinor_derivatives(const ConnectionData& gamma, int n);

enum class QPatternKind { Zero, EinsteinSasaki, AlphaEinsteinSasaki, Generic };
std::string to_string(QPatternKind k);

struct QPattern {
  QPatternKind kind = QPatternKind::Generic;
  Scalar a;
  Scalar b;
};

/// Classifies Q against a Id + b alpha (x) alpha (alpha the last coframe).
QPattern q_pattern(const ScalarMatrix& q);

/// Element of the Clifford algebra in the blade basis e_A = e_{a1} ... e_{ak}
/// (a1 < ... < ak), with e_i e_j + e_j e_i = -2 delta_ij.
class CliffordElement {
 public:
  CliffordElement() = default;
  static CliffordElement scalar(const ComplexScalar& c);
  static CliffordElement generator(int i);
  static CliffordElement vector(const FrameVector& v);

  const std::map<IndexMask, ComplexScalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(IndexMask blade, const ComplexScalar& c);

  CliffordElement& operator+=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) {
    return a += b * ComplexScalar(-1);
  }
  friend CliffordElement operator*(const CliffordElement& a, const CliffordElement& b);
  friend CliffordElement operator*(CliffordElement a, const ComplexScalar& c);
  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;

  /// Acts through the odd representation on Sigma^{2n+1}.
  Spinor act(const Spinor& psi) const;

  std::string to_string() const;

 private:
  std::map<IndexMask, ComplexScalar> terms_;
};

/// j_k^m(e_i) = e_{k+1} . e_i on generators e_1..e_k (0-based i < k).
CliffordElement j_embed(int k, int m, const FrameVector& v);
/// Extends j_k^m to an algebra homomorphism Cl(k) -> Cl(m).
CliffordElement j_apply(int k, int m, const CliffordElement& x);

/// The reduction homomorphism j(e_k) = e_{2n-1} . e_k on the sub-basis
/// e_1..e_{2n-2}, e_{2n+1} (0-based indices).
CliffordElement reduction_j(int n, int k);

/// psi - e_{2n-1} . psi.
Spinor sigma0_project(const Spinor& psi, int n);

}  // namespace geomwb
