#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geomwb/notation.hpp"
#include "random_support.hpp"

namespace geomwb {

inline LieAlgebra load_lap(const std::string& name) {
  std::ifstream in(std::string(GEOMWB_DATA_DIR) + "/catalog/" + name + ".lap");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

inline const std::vector<std::string>& catalog_files() {
  static const std::vector<std::string> names = {"abelian", "case4plus", "case4minus", "case5",      "case6",
                                                 "su2xH",   "heisenberg3", "heisenberg5", "heisenberg7"};
  return names;
}

inline ScalarMatrix diag(std::initializer_list<Scalar> d) {
  ScalarMatrix m = ScalarMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (const auto& x : d) m(i, i) = x, ++i;
  return m;
}

/// Rational orthogonal matrix (I - A)(I + A)^{-1} from a random skew A.
inline ScalarMatrix random_rotation(std::mt19937_64& rng, int dim) {
  ScalarMatrix a = ScalarMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (uniform(rng, 0, 3) == 0) {
        const Scalar v(Rational(uniform(rng, -2, 2), uniform(rng, 1, 3)));
        a(i, j) = v;
        a(j, i) = -v;
      }
  const ScalarMatrix id = ScalarMatrix::Identity(dim, dim);
  return (id - a) * *exact_inverse<Scalar>(id + a);
}

}  // namespace geomwb
