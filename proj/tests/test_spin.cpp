#include "doctest.h"
#include "catalog_support.hpp"
#include "geomwb/errors.hpp"
#include "geomwb/spin.hpp"
#include "geomwb/structures.hpp"

using namespace geomwb;

namespace {

ComplexScalar i_unit() { return ComplexScalar::i(); }

Spinor u(int n, int k) { return spinor_basis(n, k); }

Spinor product_act(std::initializer_list<int> gens, const Spinor& psi, Parity p = Parity::Odd) {
  std::vector<int> g(gens);
  Spinor v = psi;
  for (auto it = g.rbegin(); it != g.rend(); ++it) v = generator_act(*it, v, p);
  return v;
}

ScalarMatrix random_skew(std::mt19937_64& rng, int dim) {
  ScalarMatrix a = ScalarMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      a(i, j) = Scalar(uniform(rng, -2, 2));
      a(j, i) = -a(i, j);
    }
  return a;
}

bool even_digit_sum(int k) { return std::popcount(static_cast<unsigned>(k)) % 2 == 0; }

}  // namespace

TEST_CASE("Clifford action on generators") {
  CHECK(generator_act(0, u(1, 0), Parity::Even) == u(1, 1) * i_unit());
  CHECK(generator_act(2, u(1, 0)) == u(1, 0) * -i_unit());
  CHECK(generator_act(0, generator_act(0, u(1, 0))) == -u(1, 0));
  CHECK_THROWS_AS(generator_act(3, u(1, 0)), DimensionMismatch);
  CHECK_THROWS_AS(generator_act(2, u(1, 0), Parity::Even), DimensionMismatch);
}

TEST_CASE("forms acting on u_0") {
  for (int n = 1; n <= 4; ++n) {
    const SUStructureForms s = standard_forms(n);
    const Spinor u0 = u(n, 0);
    CHECK(form_act(s.F, u0) == u0 * (ComplexScalar(-n) * i_unit()));
    CHECK(form_act(s.alpha, u0) == u0 * ComplexScalar::i_pow(2 * n + 1));
    const int idx[] = {0, 1};
    CHECK(form_act(KForm::monomial(s.dim(), idx), u0) == u0 * -i_unit());
  }
}

TEST_CASE("spin lift") {
  for (int n = 1; n <= 4; ++n) {
    const Spinor u0 = u(n, 0);
    CHECK(spin_lift_act(j_matrix(n), u0) == u0 * (ComplexScalar(Scalar(Rational(-n, 2))) * i_unit()));
    CHECK(is_zero(spin_lift_act(ScalarMatrix::Zero(2 * n + 1, 2 * n + 1), u0)));
  }
}

TEST_CASE("spin lift respects commutators") {
  std::mt19937_64 rng(test_seed());
  const int n = 2;
  for (int trial = 0; trial < 20; ++trial) {
    const ScalarMatrix a = random_skew(rng, 5), b = random_skew(rng, 5);
    const ScalarMatrix c = a * b - b * a;
    for (int k = 0; k < 4; ++k) {
      const Spinor psi = u(n, k);
      CHECK(spin_lift_act(c, psi) == spin_lift_act(a, spin_lift_act(b, psi)) - spin_lift_act(b, spin_lift_act(a, psi)));
    }
  }
}

TEST_CASE("Clifford relations and the volume element, n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    const int dim = 2 * n + 1;
    for (int k = 0; k < (1 << n); ++k) {
      const Spinor psi = u(n, k);
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          const Spinor lhs = product_act({a, b}, psi) + product_act({b, a}, psi);
          CHECK(lhs == (a == b ? psi * ComplexScalar(-2) : Spinor(psi * ComplexScalar(0))));
        }
      Spinor vol = psi;
      for (int a = dim - 1; a >= 0; --a) vol = generator_act(a, vol);
      CHECK(vol == psi * ComplexScalar::i_pow(n + 1));
    }
  }
}

TEST_CASE("half-spinor split") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k < (1 << n); ++k)
      for (int a = 0; a < 2 * n; ++a) {
        const Spinor once = generator_act(a, u(n, k), Parity::Even);
        for (int t = 0; t < once.size(); ++t)
          if (!once(t).is_zero()) CHECK(even_digit_sum(t) != even_digit_sum(k));
        for (int b = 0; b < 2 * n; ++b) {
          const Spinor twice = product_act({a, b}, u(n, k), Parity::Even);
          for (int t = 0; t < twice.size(); ++t)
            if (!twice(t).is_zero()) CHECK(even_digit_sum(t) == even_digit_sum(k));
        }
      }
}

TEST_CASE("v -> v.u_0 is injective") {
  for (int n = 1; n <= 4; ++n) {
    const int dim = 2 * n + 1;
    ScalarMatrix m(2 << n, dim);
    for (int l = 0; l < dim; ++l) {
      const Spinor w = generator_act(l, u(n, 0));
      for (int t = 0; t < (1 << n); ++t) {
        m(2 * t, l) = w(t).re();
        m(2 * t + 1, l) = w(t).im();
      }
    }
    CHECK(kernel_basis<Scalar>(m).cols() == 0);
  }
}

TEST_CASE("extract Q") {
  const QResult g5 = extract_q(LieAlgebra::heisenberg(2), 2);
  CHECK(g5.status == QStatus::Ok);
  CHECK(g5.q == diag({-1, -1, -1, -1, 2}));

  const QResult su = extract_q(load_lap("su2xH"), 3);
  CHECK(su.status == QStatus::Ok);
  CHECK(su.q == diag({2, 0, 0, 2, 0, 2, 0}));

  const QResult flat = extract_q(LieAlgebra::abelian(7), 3);
  CHECK(flat.status == QStatus::Ok);
  CHECK(is_zero(flat.q));

  const Scalar c = Scalar::param("a") * Scalar::param("a") + Scalar::param("b") * Scalar::param("b");
  const Scalar lo = Scalar(1) - c * Scalar(Rational(1, 4)), hi = Scalar(1) + c * Scalar(Rational(1, 4));
  const QResult ab = extract_q(load_lap("abelian"), 3);
  CHECK(ab.status == QStatus::Ok);
  CHECK(ab.q == diag({lo, hi, hi, lo, hi, lo, Scalar(-3) - c * Scalar(Rational(3, 4))}));

  CHECK_THROWS_AS(extract_q(LieAlgebra::heisenberg(2), 3), DimensionMismatch);
  CHECK_THROWS_AS(extract_q(parse("dim 3; (0, e23, e12)"), 1), NotALieAlgebra);
}

TEST_CASE("extract Q rejects a non-Killing spinor") {
  const QResult r = extract_q(parse("dim 7; (0,0,0,0,0,0,e13)"), 3);
  CHECK(r.status != QStatus::Ok);
  CHECK(to_string(r.status) != "ok");
}

TEST_CASE("Q patterns") {
  const QPattern g5 = q_pattern(diag({-1, -1, -1, -1, 2}));
  CHECK(g5.kind == QPatternKind::AlphaEinsteinSasaki);
  CHECK(g5.a == Scalar(-1));
  CHECK(g5.b == Scalar(3));

  const QPattern plus = q_pattern(diag({1, 1, 1, 1, 1, 1, -3}));
  CHECK(plus.kind == QPatternKind::AlphaEinsteinSasaki);
  CHECK(plus.a == Scalar(1));
  CHECK(plus.b == Scalar(-4));

  CHECK(q_pattern(diag({2, 0, 0, 2, 0, 2, 0})).kind == QPatternKind::Generic);
  CHECK(q_pattern(diag({0, 0, 0})).kind == QPatternKind::Zero);
  CHECK(q_pattern(diag({2, 2, 2})).kind == QPatternKind::EinsteinSasaki);
  CHECK(to_string(QPatternKind::AlphaEinsteinSasaki) == "alpha_einstein_sasaki");
}

TEST_CASE("Clifford elements") {
  const CliffordElement e1 = CliffordElement::generator(0), e2 = CliffordElement::generator(1);
  CHECK(e1 * e1 == CliffordElement::scalar(-1));
  CHECK(e1 * e2 + e2 * e1 == CliffordElement());
  CHECK((e2 * e1).to_string() == "-e1*e2");
  const Spinor psi = u(2, 1);
  CHECK((e1 * e2).act(psi) == product_act({0, 1}, psi));
}

TEST_CASE("j homomorphisms") {
  CHECK(j_embed(3, 5, frame_basis(3, 0)) == CliffordElement::generator(3) * CliffordElement::generator(0));
  for (int i = 0; i < 3; ++i) {
    const CliffordElement once = j_embed(3, 5, frame_basis(3, i));
    const CliffordElement twice = j_apply(4, 5, j_embed(3, 4, frame_basis(3, i)));
    CHECK(once == twice);
  }
  std::mt19937_64 rng(test_seed());
  for (int trial = 0; trial < 30; ++trial) {
    const int a = uniform(rng, 0, 5), b = uniform(rng, 0, 5);
    const CliffordElement ja = j_embed(6, 7, frame_basis(6, a)), jb = j_embed(6, 7, frame_basis(6, b));
    CHECK(ja * jb + jb * ja == CliffordElement::scalar(a == b ? -2 : 0));
  }
  CHECK_THROWS_AS(j_embed(5, 5, frame_basis(5, 0)), DimensionMismatch);
}

TEST_CASE("Sigma_0 projection") {
  const int n = 2;
  const Spinor u0 = u(n, 0);
  const Spinor phi = sigma0_project(u0, n);
  CHECK(phi == u0 - generator_act(2, u0));
  CHECK(!is_zero(phi));
  CHECK(is_zero(sigma0_project(Spinor(u0 * ComplexScalar(0)), n)));

  for (int m = 2; m <= 4; ++m) {
    const Spinor p = sigma0_project(u(m, 0), m);
    // Reduced Reeb direction and reduced Kaehler pairs.
    CHECK(reduction_j(m, 2 * m).act(p) == p * ComplexScalar::i_pow(2 * m - 1));
    for (int k = 0; k < m - 1; ++k) {
      const CliffordElement pair = reduction_j(m, 2 * k) * reduction_j(m, 2 * k + 1);
      CHECK(pair.act(p) == p * -i_unit());
    }
  }
  CHECK_THROWS_AS(reduction_j(2, 2), DimensionMismatch);
}
