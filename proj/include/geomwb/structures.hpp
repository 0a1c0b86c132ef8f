#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geomwb/exterior.hpp"

namespace geomwb {

/// (alpha, F, Omega) of an SU(n)-structure on a (2n+1)-dimensional coframe.
struct SUStructureForms {
  int n = 0;
  KForm alpha;
  KForm F;
  KForm Omega;

  int dim() const { return 2 * n + 1; }
};

/// alpha = e^{2n+1}, F = e^12 + ... + e^{2n-1,2n},
/// Omega = (e^1 + i e^2) ^ ... ^ (e^{2n-1} + i e^{2n}). Requires 1 <= n <= 4.
SUStructureForms standard_forms(int n);

/// e^{1...dim}.
KForm volume_form(int dim);

/// The constant c with alpha ^ Omega ^ conj(Omega) = c * volume in the
/// standard frame: (-1)^{n(n-1)/2} (-2i)^n.
ComplexScalar orientation_constant(int n);

struct ConditionReport {
  std::vector<std::pair<std::string, KForm>> residuals;
  bool holds = false;
};

/// Residual d(alpha) + 2F.
ConditionReport check_contact(const LieAlgebra& g, const SUStructureForms& s);
/// Residuals dF and d(alpha ^ Omega).
ConditionReport check_hypo(const LieAlgebra& g, const SUStructureForms& s);
/// Residuals d(alpha) + 2F and alpha ^ d(Omega).
ConditionReport check_contact_hypo(const LieAlgebra& g, const SUStructureForms& s);

/// Omega -> (c + i t) Omega; requires c^2 + t^2 = 1 exactly.
SUStructureForms rotate_omega(const SUStructureForms& s, const Scalar& c, const Scalar& t);

/// J v = (v _| F)^sharp as a matrix; J e_1 = e_2.
ScalarMatrix complex_structure(const SUStructureForms& s);

}  // namespace geomwb
