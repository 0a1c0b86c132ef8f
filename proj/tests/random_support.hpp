#pragma once

#include <cstdlib>
#include <random>

#include "geomwb/exterior.hpp"

namespace geomwb {

inline std::uint64_t test_seed() {
  if (const char* s = std::getenv("GEOMWB_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240607;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Poly random_poly(std::mt19937_64& rng, int max_terms = 3, int max_degree = 2) {
  static const char* names[] = {"a", "b", "c"};
  Poly p;
  const int terms = uniform(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    Poly m(Rational(uniform(rng, -5, 5), uniform(rng, 1, 3)));
    const int deg = uniform(rng, 0, max_degree);
    for (int d = 0; d < deg; ++d) m = m * Poly(Var(names[uniform(rng, 0, 2)]));
    p = p + m;
  }
  return p;
}

inline Scalar random_scalar(std::mt19937_64& rng) {
  const Poly num = random_poly(rng);
  if (uniform(rng, 0, 1) == 0) return Scalar(num);
  Poly den = random_poly(rng, 2, 1);
  if (den.is_zero()) den = Poly(1);
  return Scalar(num, den);
}

/// Random 2-form with small integer or parameter coefficients.
inline KForm random_two_form(std::mt19937_64& rng, int dim, bool with_params) {
  KForm f(dim, 2);
  const int terms = uniform(rng, 0, 3);
  for (int t = 0; t < terms; ++t) {
    const int i = uniform(rng, 0, dim - 2);
    const int j = uniform(rng, i + 1, dim - 1);
    const int idx[] = {i, j};
    Scalar c(Rational(uniform(rng, -4, 4), uniform(rng, 1, 2)));
    if (with_params && uniform(rng, 0, 2) == 0) c = c * Scalar::param(uniform(rng, 0, 1) ? "a" : "b");
    f += KForm::monomial(dim, idx, c);
  }
  return f;
}

}  // namespace geomwb
