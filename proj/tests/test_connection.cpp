#include "doctest.h"
#include "catalog_support.hpp"
#include "geomwb/connection.hpp"
#include "geomwb/errors.hpp"
#include "geomwb/spin.hpp"
#include "geomwb/structures.hpp"

using namespace geomwb;

TEST_CASE("Koszul formula examples") {
  const ConnectionData g3 = koszul(LieAlgebra::heisenberg(1));
  CHECK(g3(0, 1, 2) == Scalar(1));
  CHECK(g3(1, 2, 0) == Scalar(1));
  CHECK(g3(2, 0, 1) == Scalar(-1));

  const ConnectionData flat = koszul(LieAlgebra::abelian(7));
  for (int i = 0; i < 7; ++i) CHECK(is_zero(flat.omega(i)));

  const ConnectionData g7 = koszul(LieAlgebra::heisenberg(3));
  CHECK(g7(4, 5, 6) == Scalar(1));

  CHECK_THROWS_AS(koszul(parse("dim 3; (0, e23, e12)")), NotALieAlgebra);
}

TEST_CASE("metric compatibility and torsion-freeness on the catalog") {
  for (const auto& name : catalog_files()) {
    CAPTURE(name);
    const LieAlgebra g = load_lap(name);
    const ConnectionData gamma = koszul(g);
    const int d = g.dim();
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
          CHECK(gamma(i, j, k) == -gamma(i, k, j));
          CHECK(gamma(i, j, k) - gamma(j, i, k) == g.structure_constant(i, j, k));
        }
  }
}

TEST_CASE("covariant derivatives of forms") {
  const SUStructureForms s5 = standard_forms(2);
  const ConnectionData flat = koszul(LieAlgebra::abelian(5));
  CHECK(nabla_form(flat, frame_basis(5, 0), s5.alpha).is_zero());

  const ConnectionData g5 = koszul(LieAlgebra::heisenberg(2));
  CHECK(nabla_form(g5, frame_basis(5, 0), s5.alpha) == -KForm::coframe(5, 1));
  CHECK(nabla_form(g5, frame_basis(5, 4), s5.F).is_zero());
}

TEST_CASE("u(n) decomposition") {
  for (int n = 1; n <= 3; ++n) {
    const int dim = 2 * n + 1;
    const ScalarMatrix J = j_matrix(n);
    const UnDecomposition dj = un_decompose(J, n);
    CHECK(is_zero(dj.su_part));
    CHECK(dj.k == Scalar(1));
    CHECK(is_zero(dj.perp));

    ScalarMatrix e12 = ScalarMatrix::Zero(dim, dim);
    e12(0, 1) = 1;
    e12(1, 0) = -1;
    CHECK(is_zero(un_decompose(e12, n).perp));

    ScalarMatrix reeb = ScalarMatrix::Zero(dim, dim);
    reeb(0, dim - 1) = 1;
    reeb(dim - 1, 0) = -1;
    const UnDecomposition dr = un_decompose(reeb, n);
    CHECK(dr.perp == reeb);
    CHECK(is_zero(dr.su_part));
    CHECK(dr.k.is_zero());
  }
}

TEST_CASE("u(n) decomposition is an orthogonal splitting") {
  std::mt19937_64 rng(test_seed());
  for (int trial = 0; trial < 100; ++trial) {
    const int n = uniform(rng, 1, 4);
    const int dim = 2 * n + 1;
    ScalarMatrix a = ScalarMatrix::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) {
        a(i, j) = Scalar(uniform(rng, -3, 3));
        a(j, i) = -a(i, j);
      }
    const UnDecomposition d = un_decompose(a, n);
    const ScalarMatrix kj = j_matrix(n) * d.k;
    CHECK(d.su_part + kj + d.perp == a);
    CHECK(frobenius(d.su_part, kj).is_zero());
    CHECK(frobenius(d.su_part, d.perp).is_zero());
    CHECK(frobenius(kj, d.perp).is_zero());
    CHECK(frobenius(d.su_part, j_matrix(n)).is_zero());
    CHECK(d.su_part * j_matrix(n) == j_matrix(n) * d.su_part);
  }
}

TEST_CASE("nabla of the structure forms in terms of Q") {
  for (const auto& name : catalog_files()) {
    CAPTURE(name);
    const LieAlgebra g = load_lap(name);
    const int n = (g.dim() - 1) / 2;
    const QResult q = extract_q(g, n);
    REQUIRE(q.status == QStatus::Ok);
    const SUStructureForms s = standard_forms(n);
    const ConnectionData gamma = koszul(g);
    const ComplexScalar sign = ComplexScalar(n % 2 ? -1 : 1);
    const ComplexScalar i = ComplexScalar::i();
    for (int x = 0; x < g.dim(); ++x) {
      CAPTURE(x);
      const FrameVector X = frame_basis(g.dim(), x);
      const FrameVector qx = q.q.col(x);
      CHECK(nabla_form(gamma, X, s.alpha) == sign * interior(qx, s.F));
      CHECK(nabla_form(gamma, X, s.F) == sign * wedge(s.alpha, KForm::flat(qx)));
      const KForm rhs = -sign * i * wedge(s.alpha, interior(qx, s.Omega)) +
                        sign * i * ComplexScalar(q.q(x, g.dim() - 1)) * s.Omega;
      CHECK(nabla_form(gamma, X, s.Omega) == rhs);
    }
  }
}
