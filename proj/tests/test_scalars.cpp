#include <random>

#include "doctest.h"
#include "geomwb/dense.hpp"
#include "geomwb/errors.hpp"
#include "geomwb/notation.hpp"
#include "random_support.hpp"

using namespace geomwb;

namespace {
Scalar a() { return Scalar::param("a"); }
Scalar b() { return Scalar::param("b"); }
}  // namespace

TEST_CASE("normalize: cancellation and content") {
  CHECK(Scalar(a() * a() - b() * b()) / (a() - b()) == a() + b());
  CHECK((Scalar(0) / (a() * a() + b() * b())).is_zero());
  CHECK(normalize(Poly(2) * Poly(Var("a")), Poly(4)) == a() / Scalar(2));
  CHECK(normalize(Poly(Var("a")), Poly(-2) * Poly(Var("b"))).to_string() == "-1/2*a/b");
  CHECK((Scalar(1) / (Scalar(2) * a() + Scalar(4))).denominator().leading_coefficient() == 1);
}

TEST_CASE("evaluate") {
  const Scalar c = a() * a() + b() * b();
  CHECK(evaluate(Scalar(1) - c / Scalar(4), {{"a", 2}, {"b", 0}}) == 0);
  CHECK_THROWS_AS(evaluate(a() / c, {{"a", 0}, {"b", 0}}), DenominatorVanishes);
  CHECK(evaluate(Scalar(3), {}) == 3);
  CHECK_THROWS_AS(evaluate(a() + b(), {{"a", 1}}), std::out_of_range);
}

TEST_CASE("lin_solve") {
  ScalarMatrix A = ScalarMatrix::Identity(2, 2);
  ScalarVector rhs(2);
  rhs << Scalar(1), a();
  auto sol = lin_solve<Scalar>(A, rhs);
  REQUIRE(sol);
  CHECK(sol->x(0) == Scalar(1));
  CHECK(sol->x(1) == a());
  CHECK_FALSE(sol->underdetermined);

  ScalarMatrix B(2, 1);
  B << Scalar(1), Scalar(1);
  ScalarVector rb(2);
  rb << Scalar(1), Scalar(2);
  CHECK_FALSE(lin_solve<Scalar>(B, rb));

  ScalarMatrix C(1, 1);
  C << a();
  ScalarVector rc(1);
  rc << a() * a();
  auto sc = lin_solve<Scalar>(C, rc);
  REQUIRE(sc);
  CHECK(sc->x(0) == a());

  ScalarMatrix D(1, 2);
  D << Scalar(1), Scalar(1);
  ScalarVector rd(1);
  rd << Scalar(3);
  auto sd = lin_solve<Scalar>(D, rd);
  REQUIRE(sd);
  CHECK(sd->underdetermined);
  CHECK(sd->x(0) == Scalar(3));
  CHECK(sd->x(1) == Scalar(0));
}

TEST_CASE("kernel and inverse") {
  ScalarMatrix M(2, 3);
  M << Scalar(1), Scalar(2), Scalar(3), Scalar(2), Scalar(4), a();
  ScalarMatrix K = kernel_basis<Scalar>(M);
  REQUIRE(K.cols() == 1);
  CHECK(is_zero(ScalarMatrix(M * K)));
  ScalarMatrix N(2, 2);
  N << a(), Scalar(1), Scalar(1), b();
  auto inv = exact_inverse<Scalar>(N);
  REQUIRE(inv);
  CHECK(ScalarMatrix(N * *inv) == ScalarMatrix::Identity(2, 2));
}

TEST_CASE("complex scalars") {
  const ComplexScalar i = ComplexScalar::i();
  CHECK(i * i == ComplexScalar(-1));
  CHECK(ComplexScalar::i_pow(7) == -i);
  CHECK(ComplexScalar::i_pow(-1) == -i);
  CHECK((ComplexScalar(a(), b()) * ComplexScalar(a(), -b())).im().is_zero());
  CHECK(ComplexScalar(Scalar(1), Scalar(2)) / ComplexScalar(Scalar(1), Scalar(2)) == ComplexScalar(1));
}

TEST_CASE("property: field axioms on random triples") {
  std::mt19937_64 rng(test_seed());
  for (int trial = 0; trial < 1000; ++trial) {
    const Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK(x + (y + z) == (x + y) + z);
    CHECK(x * (y * z) == (x * y) * z);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK((x - x).is_zero());
    if (!x.is_zero()) CHECK(x * x.inverse() == Scalar(1));
  }
}

TEST_CASE("property: canonical zero test agrees with grid evaluation") {
  // Grid oracle: a polynomial of degree <= d in k variables vanishing on a
  // (d+1)^k grid is zero.
  std::mt19937_64 rng(test_seed() + 1);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar x = random_scalar(rng), y = random_scalar(rng);
    const bool expect_zero = trial % 2 == 0;
    const Scalar s = expect_zero ? (x + y) * (x - y) - (x * x - y * y) : (x + y) * (x - y) - x * x + y * y + x - y;
    const Poly num = (s.numerator());
    const int d = static_cast<int>(num.total_degree());
    bool grid_zero = true;
    for (int i = 0; i <= d && grid_zero; ++i)
      for (int j = 0; j <= d && grid_zero; ++j)
        for (int k = 0; k <= d && grid_zero; ++k)
          if (num.evaluate({{"a", i}, {"b", j}, {"c", k}}) != 0) grid_zero = false;
    CHECK(grid_zero == s.is_zero());
    if (expect_zero) CHECK(s.is_zero());
  }
}

TEST_CASE("property: evaluate commutes with normalization") {
  std::mt19937_64 rng(test_seed() + 2);
  for (int trial = 0; trial < 300; ++trial) {
    const Scalar x = random_scalar(rng), y = random_scalar(rng);
    const Poly raw_num = x.numerator() * y.denominator() + y.numerator() * x.denominator();
    const Poly raw_den = x.denominator() * y.denominator();
    const ParamAssignment v{{"a", Rational(trial % 7 - 3, 2)}, {"b", Rational(trial % 5 + 1)}, {"c", Rational(-2, 3)}};
    const Rational den = raw_den.evaluate(v);
    if (den == 0) continue;
    try {
      CHECK(evaluate(x + y, v) == raw_num.evaluate(v) / den);
    } catch (const DenominatorVanishes&) {
      FAIL("normalized denominator vanished where the raw one did not");
    }
  }
}

TEST_CASE("printing is parseable") {
  std::mt19937_64 rng(test_seed() + 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar x = random_scalar(rng);
    CHECK(parse_scalar(x.to_string()) == x);
  }
}
