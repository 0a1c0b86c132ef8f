#include <random>

#include "doctest.h"
#include "geomwb/errors.hpp"
#include "geomwb/exterior.hpp"
#include "geomwb/notation.hpp"
#include "random_support.hpp"

using namespace geomwb;

namespace {

const char* kSu2H =
    "dim 7; (4*e46, 2*(-e36-e45+e17), 2*(-e15+e26-e47), -4*e16, 2*(e13-e24-e67), 4*e14, -2*(e12+e34+e56))";

KForm e(int dim, std::initializer_list<int> one_based, ComplexScalar c = 1) {
  std::vector<int> idx;
  for (int i : one_based) idx.push_back(i - 1);
  return KForm::monomial(dim, idx, c);
}

KForm random_form(std::mt19937_64& rng, int dim, int degree) {
  KForm f(dim, degree);
  for (unsigned m = 0; m < (1u << dim); ++m)
    if (std::popcount(m) == degree && uniform(rng, 0, 2) == 0)
      f.add_term(static_cast<IndexMask>(m), Scalar(uniform(rng, -3, 3)));
  return f;
}

bool jacobi_by_brackets(const LieAlgebra& g) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const FrameVector x = frame_basis(n, i), y = frame_basis(n, j), z = frame_basis(n, k);
        const FrameVector s = g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y);
        if (!is_zero(s)) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("wedge") {
  CHECK(wedge(KForm::coframe(4, 0), KForm::coframe(4, 1)) == e(4, {1, 2}));
  CHECK(wedge(e(4, {1, 2}), e(4, {1, 2})).is_zero());
  CHECK(wedge(e(4, {1, 2}), e(4, {3, 4})) == e(4, {1, 2, 3, 4}));
  CHECK(wedge(e(4, {3, 4}), e(4, {1, 2})) == e(4, {1, 2, 3, 4}));
  CHECK(wedge(KForm::coframe(3, 1), KForm::coframe(3, 0)) == -e(3, {1, 2}));
  CHECK(e(3, {2, 1}) == -e(3, {1, 2}));
}

TEST_CASE("interior") {
  CHECK(interior(frame_basis(2, 0), e(2, {1, 2})) == KForm::coframe(2, 1));
  CHECK(interior(frame_basis(2, 1), e(2, {1, 2})) == -KForm::coframe(2, 0));
  CHECK(interior(frame_basis(6, 4), e(6, {1, 2}) + e(6, {3, 4}) + e(6, {5, 6})) == KForm::coframe(6, 5));
}

TEST_CASE("Chevalley-Eilenberg differential") {
  const LieAlgebra g3 = LieAlgebra::heisenberg(1);
  CHECK(ce_differential(KForm::coframe(3, 2), g3) == e(3, {1, 2}, -2));
  CHECK(ce_differential(e(3, {1, 2}), g3).is_zero());
  const LieAlgebra su2h = parse(kSu2H);
  CHECK(ce_differential(KForm::coframe(7, 0), su2h) == e(7, {4, 6}, 4));
  CHECK(g3 == parse("dim 3; (0,0,-2*e12)"));
}

TEST_CASE("structure constants follow d eta(X,Y) = -eta([X,Y])") {
  const LieAlgebra g3 = LieAlgebra::heisenberg(1);
  CHECK(g3.structure_constant(0, 1, 2) == Scalar(2));
  CHECK(g3.structure_constant(1, 0, 2) == Scalar(-2));
  CHECK(g3.bracket(frame_basis(3, 0), frame_basis(3, 1)) == frame_basis(3, 2) * Scalar(2));
}

TEST_CASE("jacobi residues") {
  CHECK(jacobi_residues(parse(kSu2H)).empty());
  CHECK(jacobi_residues(LieAlgebra::abelian(7)).empty());
  const auto r = jacobi_residues(parse("dim 3; (0, e23, e12)"));
  REQUIRE(r.size() == 1);
  CHECK(r[0].first == 2);
  CHECK(r[0].second == e(3, {1, 2, 3}, -1));
}

TEST_CASE("property: graded commutativity and the antiderivation rule") {
  std::mt19937_64 rng(test_seed() + 10);
  for (int trial = 0; trial < 150; ++trial) {
    const int dim = uniform(rng, 2, 6);
    const int p = uniform(rng, 0, dim), q = uniform(rng, 0, dim - p);
    const KForm a = random_form(rng, dim, p), b = random_form(rng, dim, q);
    const ComplexScalar sign = ((p * q) % 2) ? -1 : 1;
    CHECK(wedge(a, b) == wedge(b, a) * sign);

    FrameVector x(dim);
    for (int i = 0; i < dim; ++i) x(i) = Scalar(uniform(rng, -2, 2));
    if (p + q >= 1) {
      const ComplexScalar s = (p % 2) ? -1 : 1;
      CHECK(interior(x, wedge(a, b)) == wedge(interior(x, a), b) + wedge(a, interior(x, b)) * s);
    }
  }
}

TEST_CASE("property: d is a graded derivation") {
  std::mt19937_64 rng(test_seed() + 11);
  const LieAlgebra g = parse(kSu2H);
  for (int trial = 0; trial < 60; ++trial) {
    const int p = uniform(rng, 0, 3), q = uniform(rng, 0, 3);
    const KForm a = random_form(rng, 7, p), b = random_form(rng, 7, q);
    const ComplexScalar s = (p % 2) ? -1 : 1;
    CHECK(ce_differential(wedge(a, b), g) ==
          wedge(ce_differential(a, g), b) + wedge(a, ce_differential(b, g)) * s);
    CHECK(ce_differential(ce_differential(a, g), g).is_zero());
  }
}

TEST_CASE("property: Jacobi by residues agrees with bracket sums under perturbation") {
  std::mt19937_64 rng(test_seed() + 12);
  const LieAlgebra bases[] = {LieAlgebra::heisenberg(1), LieAlgebra::heisenberg(2), LieAlgebra::heisenberg(3),
                              parse(kSu2H), LieAlgebra::abelian(5)};
  int broken = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LieAlgebra& base = bases[trial % 5];
    std::vector<KForm> d = base.differentials();
    const int k = uniform(rng, 0, base.dim() - 1);
    d[static_cast<std::size_t>(k)] += random_two_form(rng, base.dim(), false);
    const LieAlgebra g(base.dim(), d);
    const bool by_residue = jacobi_residues(g).empty();
    CHECK(by_residue == jacobi_by_brackets(g));
    broken += !by_residue;
  }
  CHECK(broken > 0);
  CHECK(broken < 200);
}

TEST_CASE("frame change") {
  // Swapping e1, e2 negates the Heisenberg differential's 12-term.
  ScalarMatrix P = ScalarMatrix::Zero(3, 3);
  P(1, 0) = Scalar(1);
  P(0, 1) = Scalar(1);
  P(2, 2) = Scalar(1);
  const LieAlgebra h = change_frame(LieAlgebra::heisenberg(1), P);
  CHECK(h.d(2) == e(3, {1, 2}, 2));
  CHECK(change_frame(e(3, {1, 3}), P) == e(3, {2, 3}));
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(LieAlgebra(10, std::vector<KForm>(10, KForm())), UnsupportedDimension);
  CHECK_THROWS_AS(LieAlgebra(3, std::vector<KForm>(2, KForm(3, 2))), DimensionMismatch);
  CHECK_THROWS_AS(LieAlgebra(3, {KForm::coframe(3, 0), KForm(3, 2), KForm(3, 2)}), DegreeError);
}
