#include "geomwb/reduction.hpp"

#include "geomwb/errors.hpp"

namespace geomwb {

namespace {

Scalar dot(const FrameVector& u, const FrameVector& v) {
  Scalar s;
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (!u(i).is_zero() && !v(i).is_zero()) s += u(i) * v(i);
  return s;
}

int structure_rank(const SUStructureForms& s, const FrameVector& x) {
  if (x.size() != s.dim()) throw DimensionMismatch("vector length does not match the structure");
  return s.n;
}

/// Whether v lies in the span of the given vectors.
bool in_span(const std::vector<FrameVector>& basis, const FrameVector& v) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  ScalarMatrix m(v.size(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c) m.col(static_cast<Eigen::Index>(c)) = basis[c];
  return lin_solve<Scalar>(m, v).has_value();
}

bool bracket_closed(const LieAlgebra& g, const std::vector<FrameVector>& basis) {
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b)
      if (!in_span(basis, g.bracket(basis[a], basis[b]))) return false;
  return true;
}

}  // namespace

std::optional<Scalar> exact_sqrt(const Scalar& s) {
  if (!s.is_constant()) return std::nullopt;
  Rational q = s.constant_value();
  if (q < 0) return std::nullopt;
  mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Scalar(Rational(rn, rd));
}

LevelTangent level_tangent(const SUStructureForms& s, const FrameVector& x) {
  structure_rank(s, x);
  if (is_zero(x)) throw DegenerateX("X = 0");
  const int dim = s.dim();
  const KForm w = interior(x, s.F);
  LevelTangent out;
  if (w.is_zero()) {
    out.transverse = false;
    for (int i = 0; i < dim; ++i) out.basis.push_back(frame_basis(dim, i));
    return out;
  }
  ScalarMatrix row(1, dim);
  row.row(0) = w.sharp().transpose();
  const ScalarMatrix k = kernel_basis<Scalar>(row);
  for (Eigen::Index c = 0; c < k.cols(); ++c) out.basis.push_back(k.col(c));
  return out;
}

FrameVector reeb_normal(const SUStructureForms& s, const FrameVector& x, const Scalar& t) {
  structure_rank(s, x);
  if (is_zero(x) || t.is_zero()) throw DegenerateX("X = 0");
  return interior(x, s.F).sharp() * t.inverse();
}

ReductionCondition check_reduction_condition(const SUStructureForms& s, const ReductionDatum& d) {
  structure_rank(s, d.X);
  const int dim = s.dim();
  ReductionCondition out;
  if (d.dt.is_zero()) {
    out.holds = true;
    return out;
  }
  ScalarMatrix m(dim, 2);
  m.col(0) = interior(d.X, s.F).sharp();
  m.col(1) = s.alpha.sharp();
  auto sol = lin_solve<Scalar>(m, d.dt.sharp());
  if (!sol) return out;
  out.holds = true;
  out.lambda = sol->x(0);
  out.mu = sol->x(1);
  return out;
}

std::vector<int> reduced_indices(int n) {
  std::vector<int> idx;
  for (int i = 0; i < 2 * n - 2; ++i) idx.push_back(i);
  idx.push_back(2 * n);
  return idx;
}

ScalarMatrix adapted_frame(const SUStructureForms& s, const FrameVector& x, const Scalar& t) {
  const int n = structure_rank(s, x);
  const int dim = s.dim();
  if (is_zero(x)) throw DegenerateX("X = 0");
  if (!s.alpha(x).is_zero()) throw NotHorizontal("alpha(X) = " + s.alpha(x).to_string() + " is not zero");
  if (!(dot(x, x) == t * t)) throw DegenerateX("t is not the norm of X");
  const ScalarMatrix J = complex_structure(s);

  ScalarMatrix frame = ScalarMatrix::Zero(dim, dim);
  const FrameVector fx = x * t.inverse();
  frame.col(2 * n - 2) = fx;
  frame.col(2 * n - 1) = J * fx;
  frame.col(2 * n) = frame_basis(dim, 2 * n);
  std::vector<FrameVector> done = {frame.col(2 * n - 2), frame.col(2 * n - 1), frame.col(2 * n)};

  int pair = 0;
  for (int c = 0; c < dim && pair < n - 1; ++c) {
    FrameVector w = frame_basis(dim, c);
    for (const auto& f : done) w -= f * dot(frame_basis(dim, c), f);
    if (is_zero(w)) continue;
    auto norm = exact_sqrt(dot(w, w));
    if (!norm) throw UnsupportedDimension("Gram-Schmidt step needs the square root of " + dot(w, w).to_string());
    const FrameVector f = w * norm->inverse();
    const FrameVector jf = J * f;
    frame.col(2 * pair) = f;
    frame.col(2 * pair + 1) = jf;
    done.push_back(f);
    done.push_back(jf);
    ++pair;
  }
  return frame;
}

ScalarMatrix reduced_b(const ScalarMatrix& q, const ReductionDatum& d, const SUStructureForms& s) {
  if (!check_reduction_condition(s, d).holds)
    throw ConditionFails("dt = " + d.dt.to_string() + " is not in the span of X _| F and alpha");
  return assemble_b_pre(q, d, s);
}

ScalarMatrix assemble_b_pre(const ScalarMatrix& q, const ReductionDatum& d, const SUStructureForms& s) {
  const int n = structure_rank(s, d.X);
  const ScalarMatrix frame = adapted_frame(s, d.X, d.t);
  const ScalarMatrix qf = frame.transpose() * q * frame;
  const Scalar qxx = qf(2 * n - 2, 2 * n - 2);
  const std::vector<int> idx = reduced_indices(n);
  const auto m = static_cast<Eigen::Index>(idx.size());
  const FrameVector dt_sharp = d.dt.is_zero() ? FrameVector::Constant(s.dim(), Scalar(0)) : d.dt.sharp();
  const Scalar sign = (n % 2) ? Scalar(-1) : Scalar(1);
  const Scalar coeff = Scalar(-2) * sign * d.t.inverse();

  ScalarMatrix b(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index c = 0; c < m; ++c) {
      const int ya = idx[static_cast<std::size_t>(a)], zc = idx[static_cast<std::size_t>(c)];
      const Scalar alpha_y = ya == 2 * n ? Scalar(1) : Scalar(0);
      const Scalar alpha_z = zc == 2 * n ? Scalar(1) : Scalar(0);
      Scalar v = -qf(ya, zc) - qxx * alpha_y * alpha_z;
      if (!alpha_z.is_zero()) v += coeff * s.F(dt_sharp, frame.col(ya)).re();
      b(a, c) = v;
    }
  return b;
}

FrameVector weingarten(const ConnectionData& gamma, const FrameVector& nu, const FrameVector& y) {
  return -nabla_vector(gamma, y, nu);
}

WeingartenData subgroup_weingarten(const LieAlgebra& g, const std::vector<FrameVector>& subalgebra,
                                   const FrameVector& nu) {
  if (!bracket_closed(g, subalgebra)) throw NotASubalgebra("span is not closed under the bracket");
  if (!(dot(nu, nu) == Scalar(1))) throw DimensionMismatch("nu is not a unit vector");
  for (const auto& y : subalgebra)
    if (!dot(nu, y).is_zero()) throw DimensionMismatch("nu is not orthogonal to the subalgebra");
  const ConnectionData gamma = koszul(g);
  WeingartenData out;
  out.basis = subalgebra;
  out.nu = nu;
  const auto m = static_cast<Eigen::Index>(subalgebra.size());
  out.matrix = ScalarMatrix(m, m);
  for (const auto& y : subalgebra) out.images.push_back(weingarten(gamma, nu, y));
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      out.matrix(a, b) = dot(out.images[static_cast<std::size_t>(a)], subalgebra[static_cast<std::size_t>(b)]);
  return out;
}

FrameVector oneill_a(const ConnectionData& gamma, const ScalarMatrix& frame, int n, const FrameVector& y) {
  const FrameVector xhat = frame.col(2 * n - 2);
  FrameVector out = FrameVector::Constant(frame.rows(), Scalar(0));
  for (int a : reduced_indices(n)) {
    const FrameVector z = frame.col(a);
    const Scalar c = dot(nabla_vector(gamma, y, z), xhat);
    if (!c.is_zero()) out += z * c;
  }
  return out;
}

AlgebraicReduction algebraic_reduce(const LieAlgebra& g, const ReductionDatum& d) {
  if (!d.subgroup) throw NotReducibleAlgebraically("the zero level set is not marked as a subgroup");
  const int n = (g.dim() - 1) / 2;
  if (g.dim() != 2 * n + 1 || n < 2)
    throw NotReducibleAlgebraically("algebraic reduction needs dimension 2n+1 with n >= 2");
  const SUStructureForms s = standard_forms(n);
  const ScalarMatrix frame = adapted_frame(s, d.X, d.t);
  const FrameVector nu = frame.col(2 * n - 1);

  std::vector<FrameVector> sub = d.subalgebra;
  if (sub.empty()) sub = level_tangent(s, d.X).basis;
  if (static_cast<int>(sub.size()) != 2 * n) throw NotReducibleAlgebraically("subalgebra is not a hypersurface");
  for (const auto& y : sub)
    if (!dot(y, nu).is_zero()) throw NotReducibleAlgebraically("subalgebra is not orthogonal to nu");
  if (!bracket_closed(g, sub)) throw NotReducibleAlgebraically("level set span is not a subalgebra");
  if (!in_span(sub, d.X)) throw NotReducibleAlgebraically("X is not tangent to the level set");
  for (const auto& y : sub)
    if (!in_span({d.X}, g.bracket(y, d.X))) throw NotReducibleAlgebraically("X does not span an ideal");

  const LieAlgebra gf = change_frame(g, frame);
  const std::vector<int> idx = reduced_indices(n);
  std::vector<int> position(static_cast<std::size_t>(g.dim()), -1);
  for (std::size_t p = 0; p < idx.size(); ++p) position[static_cast<std::size_t>(idx[p])] = static_cast<int>(p);

  const int m = 2 * n - 1;
  std::vector<KForm> d_quot;
  for (int a : idx) {
    KForm f(m, 2);
    for (const auto& [mask, c] : gf.d(a).terms()) {
      if (mask & (1u << (2 * n - 1))) continue;  // vanishes on the level set
      if (mask & (1u << (2 * n - 2)))
        throw NotReducibleAlgebraically("quotient differential involves the X direction");
      IndexMask q = 0;
      for (int i : mask_indices(mask)) q = static_cast<IndexMask>(q | (1u << position[static_cast<std::size_t>(i)]));
      f.add_term(q, c);
    }
    d_quot.push_back(std::move(f));
  }
  return {LieAlgebra(m, std::move(d_quot), g.params()), standard_forms(n - 1), frame};
}

}  // namespace geomwb
