#pragma once

#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "geomwb/polynomial.hpp"

namespace geomwb {

/// Exact parameter values used to instantiate a Scalar.
using ParamAssignment = std::map<std::string, Rational>;

/// Rational function in the declared parameters, kept in canonical form:
/// numerator and denominator coprime, denominator monic under grlex, and
/// zero represented as 0/1. Equality is structural and therefore exact.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(int c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  /// Builds num/den and normalizes. Throws std::domain_error on den == 0.
  Scalar(Poly num, Poly den);

  static Scalar param(std::string_view name) { return Scalar(Poly(Var(name))); }

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Only meaningful when is_constant().
  Rational constant_value() const { return num_.constant_term(); }
  std::vector<Var> variables() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar&, const Scalar&) = default;

  Scalar pow(int e) const;
  Scalar inverse() const;

  std::string to_string() const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

/// Canonical representative of s (Scalars are always canonical; this is the
/// explicit entry point used where the contract asks for normalization).
Scalar normalize(const Poly& num, const Poly& den);

/// Substitutes every parameter. Throws DenominatorVanishes when the
/// denominator evaluates to zero and std::out_of_range on a missing value.
Rational evaluate(const Scalar& s, const ParamAssignment& values);

/// Substitutes a subset of parameters, keeping the rest symbolic.
Scalar substitute(const Scalar& s, const ParamAssignment& values);

/// Pair (re, im) of Scalars with i^2 = -1.
class ComplexScalar {
 public:
  ComplexScalar() = default;
  ComplexScalar(int c) : re_(c) {}  // NOLINT(google-explicit-constructor)
  ComplexScalar(const Rational& c) : re_(c) {}  // NOLINT(google-explicit-constructor)
  ComplexScalar(Scalar re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ComplexScalar(Scalar re, Scalar im) : re_(std::move(re)), im_(std::move(im)) {}

  static ComplexScalar i() { return {Scalar(0), Scalar(1)}; }
  /// i^k for any integer k.
  static ComplexScalar i_pow(int k);

  const Scalar& re() const { return re_; }
  const Scalar& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ComplexScalar conj() const { return {re_, -im_}; }
  ComplexScalar operator-() const { return {-re_, -im_}; }
  ComplexScalar& operator+=(const ComplexScalar& o);
  ComplexScalar& operator-=(const ComplexScalar& o);
  ComplexScalar& operator*=(const ComplexScalar& o);
  ComplexScalar& operator/=(const ComplexScalar& o);
  friend ComplexScalar operator+(ComplexScalar a, const ComplexScalar& b) { return a += b; }
  friend ComplexScalar operator-(ComplexScalar a, const ComplexScalar& b) { return a -= b; }
  friend ComplexScalar operator*(ComplexScalar a, const ComplexScalar& b) { return a *= b; }
  friend ComplexScalar operator/(ComplexScalar a, const ComplexScalar& b) { return a /= b; }
  friend bool operator==(const ComplexScalar&, const ComplexScalar&) = default;

  std::string to_string() const;

 private:
  Scalar re_;
  Scalar im_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const ComplexScalar& s) { return os << s.to_string(); }

}  // namespace geomwb
