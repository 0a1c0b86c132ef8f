#include "doctest.h"
#include "catalog_support.hpp"
#include "geomwb/errors.hpp"
#include "geomwb/reduction.hpp"
#include "geomwb/spin.hpp"

using namespace geomwb;

namespace {

FrameVector vec(int dim, int one_based, Scalar c = 1) { return frame_basis(dim, one_based - 1) * c; }

ReductionDatum datum(FrameVector x, bool subgroup = false) {
  ReductionDatum d;
  d.X = std::move(x);
  d.t = 1;
  d.dt = KForm(static_cast<int>(d.X.size()), 1);
  d.subgroup = subgroup;
  return d;
}

bool proportional(const FrameVector& v, const FrameVector& w) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    for (Eigen::Index j = 0; j < v.size(); ++j)
      if (!(v(i) * w(j) == v(j) * w(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("level set tangent space") {
  const SUStructureForms s3 = standard_forms(3);
  const LevelTangent su = level_tangent(s3, vec(7, 2, -1));
  CHECK(su.transverse);
  CHECK(su.basis.size() == 6);
  for (const auto& y : su.basis) CHECK(y(0).is_zero());

  const LevelTangent g7 = level_tangent(s3, vec(7, 5));
  CHECK(g7.basis.size() == 6);
  for (const auto& y : g7.basis) CHECK(y(5).is_zero());

  const LevelTangent reeb = level_tangent(s3, vec(7, 7));
  CHECK_FALSE(reeb.transverse);
  CHECK(reeb.basis.size() == 7);

  CHECK_THROWS_AS(level_tangent(s3, vec(7, 1, 0)), DegenerateX);
}

TEST_CASE("Reeb normal") {
  const SUStructureForms s3 = standard_forms(3);
  CHECK(reeb_normal(s3, vec(7, 5), 1) == vec(7, 6));
  CHECK(reeb_normal(s3, vec(7, 2, -1), 1) == vec(7, 1));
  CHECK(reeb_normal(s3, vec(7, 5, 2), 2) == vec(7, 6));
  CHECK_THROWS_AS(reeb_normal(s3, vec(7, 5, 0), 1), DegenerateX);
}

TEST_CASE("reduction condition") {
  const SUStructureForms s3 = standard_forms(3);
  ReductionDatum d = datum(vec(7, 5));
  ReductionCondition c = check_reduction_condition(s3, d);
  CHECK(c.holds);
  CHECK(c.lambda.is_zero());
  CHECK(c.mu.is_zero());

  d.dt = interior(d.X, s3.F);
  c = check_reduction_condition(s3, d);
  CHECK(c.holds);
  CHECK(c.lambda == Scalar(1));
  CHECK(c.mu.is_zero());

  d.dt = KForm::coframe(7, 2);
  CHECK_FALSE(check_reduction_condition(s3, d).holds);
}

TEST_CASE("adapted frame") {
  for (int n = 1; n <= 4; ++n) {
    const SUStructureForms s = standard_forms(n);
    const ScalarMatrix p = adapted_frame(s, vec(s.dim(), 2 * n - 1), 1);
    CHECK(p == ScalarMatrix::Identity(s.dim(), s.dim()));
  }
  const SUStructureForms s3 = standard_forms(3);
  const ScalarMatrix p = adapted_frame(s3, vec(7, 2, -1), 1);
  CHECK(p.col(4) == vec(7, 2, -1));
  CHECK(p.col(5) == vec(7, 1));
  CHECK(p.transpose() * p == ScalarMatrix::Identity(7, 7));
  CHECK(change_frame(s3.F, p) == s3.F);
  CHECK(change_frame(s3.alpha, p) == s3.alpha);
  CHECK_THROWS_AS(adapted_frame(s3, vec(7, 7), 1), NotHorizontal);

  // A tilted horizontal X still gets an (alpha, F)-preserving frame.
  const FrameVector tilted = vec(7, 1, Rational(3, 5)) + vec(7, 3, Rational(4, 5));
  const ScalarMatrix q = adapted_frame(s3, tilted, 1);
  CHECK(q.transpose() * q == ScalarMatrix::Identity(7, 7));
  CHECK(change_frame(s3.F, q) == s3.F);
  CHECK(change_frame(s3.Omega, q).is_zero() == false);
}

TEST_CASE("reduced B") {
  const SUStructureForms s3 = standard_forms(3);
  const ScalarMatrix q_su = extract_q(load_lap("su2xH"), 3).q;
  CHECK(reduced_b(q_su, datum(vec(7, 2, -1)), s3) == diag({0, -2, 0, -2, 0}));

  const ScalarMatrix q7 = extract_q(LieAlgebra::heisenberg(3), 3).q;
  CHECK(reduced_b(q7, datum(vec(7, 5)), s3) == diag({-1, -1, -1, -1, 2}));

  ReductionDatum bad = datum(vec(7, 5));
  bad.dt = KForm::coframe(7, 2);
  CHECK_THROWS_AS(reduced_b(q7, bad, s3), ConditionFails);
  CHECK_FALSE(is_symmetric(assemble_b_pre(q7, bad, s3)));
}

TEST_CASE("alpha-Einstein-Sasaki pattern survives reduction") {
  const Scalar a = Scalar::param("a"), b = Scalar::param("b");
  for (int n = 2; n <= 4; ++n) {
    const SUStructureForms s = standard_forms(n);
    ScalarMatrix q = ScalarMatrix::Identity(s.dim(), s.dim()) * a;
    q(s.dim() - 1, s.dim() - 1) += b;
    const ScalarMatrix bmat = reduced_b(q, datum(vec(s.dim(), 1)), s);
    const QPattern pat = q_pattern(bmat);
    CHECK(pat.kind == QPatternKind::AlphaEinsteinSasaki);
    CHECK(pat.a == -a);
    CHECK(pat.b == -a - b);
  }
}

TEST_CASE("Weingarten tensor of the Heisenberg subgroup") {
  const LieAlgebra g7 = LieAlgebra::heisenberg(3);
  std::vector<FrameVector> sub;
  for (int i : {1, 2, 3, 4, 5, 7}) sub.push_back(vec(7, i));
  const WeingartenData w = subgroup_weingarten(g7, sub, vec(7, 6));
  CHECK(w.images[4] == vec(7, 7, -1));
  CHECK(is_zero(w.images[0]));
  CHECK(is_symmetric(w.matrix));

  std::vector<FrameVector> not_closed = {vec(7, 1), vec(7, 2)};
  CHECK_THROWS_AS(subgroup_weingarten(g7, not_closed, vec(7, 6)), NotASubalgebra);
  CHECK_THROWS_AS(subgroup_weingarten(g7, sub, vec(7, 6, 2)), DimensionMismatch);
}

TEST_CASE("second fundamental form identities on Heisenberg hypersurfaces") {
  for (int n = 2; n <= 4; ++n) {
    CAPTURE(n);
    const LieAlgebra g = LieAlgebra::heisenberg(n);
    const SUStructureForms s = standard_forms(n);
    const int dim = s.dim();
    const FrameVector x = vec(dim, 2 * n - 1);
    const FrameVector nu = reeb_normal(s, x, 1);
    const ScalarMatrix frame = adapted_frame(s, x, 1);
    const ScalarMatrix q = extract_q(g, n).q;
    const ConnectionData gamma = koszul(g);
    const std::vector<FrameVector> sub = level_tangent(s, x).basis;
    const WeingartenData wd = subgroup_weingarten(g, sub, nu);
    const Scalar sign = n % 2 ? Scalar(-1) : Scalar(1);

    for (std::size_t k = 0; k < sub.size(); ++k) {
      const FrameVector& y = sub[k];
      const FrameVector wy = wd.images[k];
      // Q(Y, X/t) = (-1)^n alpha(W(Y)).
      CHECK((y.transpose() * q * x)(0) == sign * s.alpha(wy).re());
    }
    // W(X) = 2 (dt)^sharp _| F + (-1)^n Q(X, X/t) alpha^sharp with dt = 0.
    CHECK(weingarten(gamma, nu, x) == s.alpha.sharp() * (sign * (x.transpose() * q * x)(0)));

    for (int a : reduced_indices(n)) {
      const FrameVector y = frame.col(a);
      const KForm lhs = s.alpha * ComplexScalar(sign * (y.transpose() * q * nu)(0)) +
                        KForm::flat(oneill_a(gamma, frame, n, y)) + interior(weingarten(gamma, nu, y), s.F);
      CHECK(proportional(lhs.real_part().sharp(), nu));
      CHECK(lhs.imag_part().is_zero());
      CHECK(is_zero(oneill_a(gamma, frame, n, y)));
    }
  }
}

TEST_CASE("algebraic reduction of Heisenberg groups") {
  const AlgebraicReduction r7 = algebraic_reduce(LieAlgebra::heisenberg(3), datum(vec(7, 5), true));
  CHECK(r7.quotient == LieAlgebra::heisenberg(2));
  CHECK(render(r7.quotient) == "dim 5; (0,0,0,0,-2*e12-2*e34)");
  const AlgebraicReduction r5 = algebraic_reduce(LieAlgebra::heisenberg(2), datum(vec(5, 3), true));
  CHECK(r5.quotient == LieAlgebra::heisenberg(1));

  CHECK_THROWS_AS(algebraic_reduce(load_lap("su2xH"), datum(vec(7, 2, -1))), NotReducibleAlgebraically);
  CHECK_THROWS_AS(algebraic_reduce(load_lap("su2xH"), datum(vec(7, 2, -1), true)), NotReducibleAlgebraically);
}

TEST_CASE("reduced B equals the Q of the algebraic quotient") {
  for (int n : {2, 3}) {
    CAPTURE(n);
    const LieAlgebra g = LieAlgebra::heisenberg(n);
    const ReductionDatum d = datum(vec(2 * n + 1, 2 * n - 1), true);
    const AlgebraicReduction red = algebraic_reduce(g, d);
    const QResult direct = extract_q(red.quotient, n - 1);
    REQUIRE(direct.status == QStatus::Ok);
    CHECK(direct.q == reduced_b(extract_q(g, n).q, d, standard_forms(n)));
  }
}

TEST_CASE("exact square roots") {
  CHECK(exact_sqrt(Scalar(Rational(9, 4))) == Scalar(Rational(3, 2)));
  CHECK_FALSE(exact_sqrt(Scalar(2)).has_value());
  CHECK_FALSE(exact_sqrt(Scalar(-1)).has_value());
  CHECK_FALSE(exact_sqrt(Scalar::param("a")).has_value());
}
