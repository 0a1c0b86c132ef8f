#include "geomwb/structures.hpp"

#include "geomwb/errors.hpp"

namespace geomwb {

namespace {

void require_dim(const LieAlgebra& g, const SUStructureForms& s) {
  if (g.dim() != s.dim())
    throw DimensionMismatch("algebra has dimension " + std::to_string(g.dim()) + ", structure needs " +
                            std::to_string(s.dim()));
}

ConditionReport finish(std::vector<std::pair<std::string, KForm>> residuals) {
  ConditionReport r;
  r.holds = true;
  for (const auto& [name, f] : residuals) r.holds = r.holds && f.is_zero();
  r.residuals = std::move(residuals);
  return r;
}

}  // namespace

SUStructureForms standard_forms(int n) {
  if (n < 1 || n > 4) throw UnsupportedDimension("SU(n) forms need 1 <= n <= 4, got n = " + std::to_string(n));
  const int dim = 2 * n + 1;
  SUStructureForms s;
  s.n = n;
  s.alpha = KForm::coframe(dim, 2 * n);
  s.F = KForm(dim, 2);
  KForm omega(dim, 0);
  omega.add_term(0, ComplexScalar(1));
  for (int j = 0; j < n; ++j) {
    s.F += wedge(KForm::coframe(dim, 2 * j), KForm::coframe(dim, 2 * j + 1));
    const KForm factor = KForm::coframe(dim, 2 * j) + KForm::coframe(dim, 2 * j + 1) * ComplexScalar::i();
    omega = wedge(omega, factor);
  }
  s.Omega = omega;
  return s;
}

KForm volume_form(int dim) {
  KForm v(dim, dim);
  v.add_term(static_cast<IndexMask>((1u << dim) - 1u), ComplexScalar(1));
  return v;
}

ComplexScalar orientation_constant(int n) {
  ComplexScalar c = ((n * (n - 1) / 2) % 2) ? -1 : 1;
  for (int k = 0; k < n; ++k) c *= ComplexScalar(Scalar(0), Scalar(-2));
  return c;
}

ConditionReport check_contact(const LieAlgebra& g, const SUStructureForms& s) {
  require_dim(g, s);
  return finish({{"d(alpha)+2F", ce_differential(s.alpha, g) + s.F * ComplexScalar(2)}});
}

ConditionReport check_hypo(const LieAlgebra& g, const SUStructureForms& s) {
  require_dim(g, s);
  return finish({{"dF", ce_differential(s.F, g)},
                 {"d(alpha^Omega)", ce_differential(wedge(s.alpha, s.Omega), g)}});
}

ConditionReport check_contact_hypo(const LieAlgebra& g, const SUStructureForms& s) {
  require_dim(g, s);
  return finish({{"d(alpha)+2F", ce_differential(s.alpha, g) + s.F * ComplexScalar(2)},
                 {"alpha^d(Omega)", wedge(s.alpha, ce_differential(s.Omega, g))}});
}

SUStructureForms rotate_omega(const SUStructureForms& s, const Scalar& c, const Scalar& t) {
  if (!(c * c + t * t == Scalar(1)))
    throw NotOnUnitCircle("(" + c.to_string() + ", " + t.to_string() + ") is not on the unit circle");
  SUStructureForms r = s;
  r.Omega *= ComplexScalar(c, t);
  return r;
}

ScalarMatrix complex_structure(const SUStructureForms& s) {
  const int dim = s.dim();
  ScalarMatrix J = ScalarMatrix::Zero(dim, dim);
  for (int j = 0; j < dim; ++j) J.col(j) = interior(frame_basis(dim, j), s.F).sharp();
  return J;
}

}  // namespace geomwb
