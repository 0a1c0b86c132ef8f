#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geomwb {

using Rational = mpq_class;

/// Interned parameter symbol. Two Vars with the same name share storage, so
/// equality is a pointer compare; ordering is alphabetical on the name.
class Var {
 public:
  explicit Var(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(Var a, Var b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Var a, Var b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return a.name_->compare(*b.name_) < 0 ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
  }

 private:
  const std::string* name_;
};

/// Power product of parameters, stored as (var, exponent) pairs sorted by var
/// with strictly positive exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v, unsigned exponent = 1);

  unsigned degree() const;
  unsigned exponent(Var v) const;
  bool is_one() const { return factors_.empty(); }
  const std::vector<std::pair<Var, unsigned>>& factors() const { return factors_; }

  /// nullopt-free divisibility test; `divides(m)` means *this | m.
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, other) i.e. other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial without(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<std::pair<Var, unsigned>> factors_;
};

/// Graded lexicographic order with variables ranked alphabetically
/// (a > b > c ...). Returns <0, 0, >0 like strcmp.
int grlex_compare(const Monomial& a, const Monomial& b);

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare(a, b) > 0;
  }
};

/// Sparse multivariate polynomial over Q in named parameters. Terms are kept
/// sorted by descending grlex, with no zero coefficients.
class Poly {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly() = default;
  Poly(int c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Poly(Var v);
  Poly(Monomial m, Rational c);

  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of the constant term (0 if absent).
  Rational constant_term() const;
  unsigned total_degree() const;
  unsigned degree_in(Var v) const;
  std::vector<Var> variables() const;

  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(unsigned e) const;

  /// Exact quotient; throws std::logic_error if `divisor` does not divide.
  Poly divide_exact(const Poly& divisor) const;

  /// Coefficients of *this viewed as a univariate polynomial in v.
  std::map<unsigned, Poly> coefficients_in(Var v) const;
  static Poly from_coefficients(Var v, const std::map<unsigned, Poly>& coeffs);

  Rational evaluate(const std::map<std::string, Rational>& values) const;
  Poly substitute(Var v, const Rational& value) const;

  /// Scales so the leading coefficient is 1; zero stays zero.
  Poly monic() const;

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor over Q, normalized monic (gcd(0,0) = 0).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace geomwb
