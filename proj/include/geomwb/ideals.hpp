#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "geomwb/exterior.hpp"
#include "geomwb/polynomial.hpp"

namespace geomwb {

inline constexpr int kMaxIdealVars = 16;

enum class MonomialOrder { Grevlex, Lex };

/// Exponent vector over a fixed variable list.
struct Exponent {
  std::array<std::uint8_t, kMaxIdealVars> e{};
  std::uint16_t degree = 0;
  /// Bit i set iff e[i] > 0.
  std::uint16_t support = 0;

  friend bool operator==(const Exponent& a, const Exponent& b) { return a.e == b.e; }
};

bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent operator*(const Exponent& a, const Exponent& b);
/// Requires divides(b, a).
Exponent operator/(const Exponent& a, const Exponent& b);

/// Variables x_0 > x_1 > ... together with a monomial order.
class PolyRing {
 public:
  PolyRing(std::vector<std::string> names, MonomialOrder order);

  const std::vector<std::string>& names() const { return names_; }
  MonomialOrder order() const { return order_; }
  int size() const { return static_cast<int>(names_.size()); }
  /// -1 when absent.
  int index_of(const std::string& name) const;
  /// <0, 0, >0 like strcmp.
  int compare(const Exponent& a, const Exponent& b) const;

 private:
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::Grevlex);

/// Sparse polynomial over Q in the ring's variables, terms sorted by the
/// ring's order (descending).
class GPoly {
 public:
  struct Term {
    Exponent exponent;
    Rational coefficient;
  };

  GPoly() = default;
  explicit GPoly(RingPtr ring) : ring_(std::move(ring)) {}
  GPoly(RingPtr ring, const Rational& c);
  static GPoly variable(RingPtr ring, const std::string& name);
  /// Sorts and combines like terms.
  static GPoly from_terms(RingPtr ring, std::vector<Term> terms);
  /// Converts a parameter polynomial; every variable must belong to the ring.
  static GPoly from_poly(RingPtr ring, const Poly& p);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Exponent& leading_exponent() const { return terms_.front().exponent; }
  const Rational& leading_coefficient() const { return terms_.front().coefficient; }
  int total_degree() const;

  GPoly operator-() const;
  friend GPoly operator+(const GPoly& a, const GPoly& b);
  friend GPoly operator-(const GPoly& a, const GPoly& b);
  friend GPoly operator*(const GPoly& a, const GPoly& b);
  friend GPoly operator*(GPoly a, const Rational& c);
  GPoly times_term(const Exponent& m, const Rational& c) const;
  GPoly pow(unsigned e) const;
  friend bool operator==(const GPoly& a, const GPoly& b);

  GPoly monic() const;
  /// Replaces the variable by zero.
  GPoly set_zero(int var) const;
  /// Same polynomial over another ring containing all used variable names.
  GPoly in_ring(RingPtr ring) const;
  Poly to_poly() const;

  std::string to_string() const;

 private:
  static GPoly from_sorted(RingPtr ring, std::vector<Term> terms);
  RingPtr ring_;
  std::vector<Term> terms_;
};

struct GroebnerLimits {
  std::size_t max_pairs = 500000;
  std::size_t max_basis = 20000;
  int max_degree = 40;
  double max_seconds = 900.0;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;
  int max_degree = 0;
  double seconds = 0.0;
};

struct GroebnerBasis {
  RingPtr ring;
  /// Reduced and monic, sorted by ascending leading monomial.
  std::vector<GPoly> generators;
  GroebnerStats stats;

  bool is_unit() const;
};

/// Reduced Groebner basis by Buchberger's algorithm with the Gebauer-Moeller
/// criteria and the sugar selection strategy. Throws ResourceLimit when a
/// budget in `limits` is exhausted.
GroebnerBasis buchberger(const std::vector<GPoly>& gens, const GroebnerLimits& limits = {});

/// Remainder of full multivariate division by the basis.
GPoly normal_form(const GPoly& p, const GroebnerBasis& g);
bool ideal_member(const GPoly& p, const GroebnerBasis& g);

GPoly s_polynomial(const GPoly& f, const GPoly& g);
/// Every S-polynomial of the generators reduces to zero.
bool is_groebner(const GroebnerBasis& g);

/// The printed family of hypo-contact semidirect products over a 3-dimensional
/// solvable algebra spanned by e_1, e_4, e_6.
struct ClassificationFamily {
  LieAlgebra algebra;
  /// The 16 unknowns, in the default variable order.
  std::vector<std::string> variables;
};

ClassificationFamily classification_family();

/// Every coefficient of d(de^k) for every k, as polynomials in the unknowns.
std::vector<Poly> d2_ideal(const ClassificationFamily& f);

enum class MembershipStrategy { Substitution, Direct };

struct MembershipOptions {
  MembershipStrategy strategy = MembershipStrategy::Substitution;
  MonomialOrder order = MonomialOrder::Grevlex;
  GroebnerLimits limits;
  /// Claims to run (1-based); empty runs all three and the negative control.
  std::vector<int> claims;
};

struct ClaimResult {
  int claim = 0;
  std::string statement;
  std::string strategy;
  bool holds = false;
  std::size_t basis_size = 0;
  GroebnerStats stats;
};

struct MembershipReport {
  std::vector<ClaimResult> claims;
  /// B in J + (A, C); expected false.
  bool negative_control_member = true;
  bool negative_control_run = false;

  bool all_hold() const;
};

MembershipReport verify_membership_claims(const MembershipOptions& options = {});

}  // namespace geomwb
