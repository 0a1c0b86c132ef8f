#include "geomwb/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace geomwb {

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::set<std::string, std::less<>> table;
  std::lock_guard lock(mutex);
  auto it = table.find(name);
  if (it == table.end()) it = table.emplace(name).first;
  return &*it;
}

}  // namespace

Var::Var(std::string_view name) : name_(intern(name)) {}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Var v, unsigned exponent) {
  if (exponent > 0) factors_.emplace_back(v, exponent);
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

unsigned Monomial::exponent(Var v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

bool Monomial::divides(const Monomial& m) const {
  auto it = m.factors_.begin();
  for (const auto& [v, e] : factors_) {
    while (it != m.factors_.end() && it->first < v) ++it;
    if (it == m.factors_.end() || !(it->first == v) || it->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  auto b = other.factors_.begin();
  for (const auto& [v, e] : factors_) {
    unsigned sub = 0;
    if (b != other.factors_.end() && b->first == v) {
      sub = b->second;
      ++b;
    }
    if (sub > e) throw std::logic_error("Monomial division is not exact");
    if (e > sub) out.factors_.emplace_back(v, e - sub);
  }
  if (b != other.factors_.end()) throw std::logic_error("Monomial division is not exact");
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out;
  for (const auto& f : factors_)
    if (!(f.first == v)) out.factors_.push_back(f);
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : factors_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

int grlex_compare(const Monomial& a, const Monomial& b) {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? -1 : 1;
      ++i;
      ++j;
    } else {
      // The alphabetically smaller variable ranks higher.
      return fa[i].first < fb[j].first ? 1 : -1;
    }
  }
  if (i < fa.size()) return 1;
  if (j < fb.size()) return -1;
  return 0;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(int c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) {
  if (c != 0) {
    terms_.push_back({Monomial(), c});
    terms_.back().coefficient.canonicalize();
  }
}

Poly::Poly(Var v) { terms_.push_back({Monomial(v), Rational(1)}); }

Poly::Poly(Monomial m, Rational c) {
  c.canonicalize();
  if (c != 0) terms_.push_back({std::move(m), std::move(c)});
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::map<Monomial, Rational, GrlexGreater> acc;
  for (auto& t : terms) {
    t.coefficient.canonicalize();
    acc[t.monomial] += t.coefficient;
  }
  Poly p;
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

unsigned Poly::total_degree() const {
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

unsigned Poly::degree_in(Var v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
  return d;
}

std::vector<Var> Poly::variables() const {
  std::vector<Var> vars;
  for (const auto& t : terms_)
    for (const auto& [v, e] : t.monomial.factors())
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return vars;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    int cmp;
    if (a == terms_.end()) cmp = -1;
    else if (b == other.terms_.end()) cmp = 1;
    else cmp = grlex_compare(a->monomial, b->monomial);
    if (cmp > 0) {
      merged.push_back(std::move(*a++));
    } else if (cmp < 0) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coefficient + b->coefficient;
      if (c != 0) merged.push_back({std::move(a->monomial), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.terms_.size() == 1 && a.terms_[0].monomial.is_one()) return b * a.terms_[0].coefficient;
  if (b.terms_.size() == 1 && b.terms_[0].monomial.is_one()) return a * b.terms_[0].coefficient;
  std::map<Monomial, Rational, GrlexGreater> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) acc[ta.monomial * tb.monomial] += ta.coefficient * tb.coefficient;
  Poly p;
  p.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else if (c != 1) {
    for (auto& t : terms_) t.coefficient *= c;
  }
  return *this;
}

Poly Poly::pow(unsigned e) const {
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

Poly Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("Poly division by zero");
  if (divisor.is_constant()) return *this * Rational(1 / divisor.leading_coefficient());
  const Term& lead = divisor.leading_term();
  Poly quotient;
  Poly rest = *this;
  while (!rest.is_zero()) {
    const Term& t = rest.leading_term();
    if (!lead.monomial.divides(t.monomial)) throw std::logic_error("Poly division is not exact");
    Poly q(t.monomial / lead.monomial, Rational(t.coefficient / lead.coefficient));
    rest -= q * divisor;
    quotient += q;
  }
  return quotient;
}

std::map<unsigned, Poly> Poly::coefficients_in(Var v) const {
  std::map<unsigned, std::vector<Term>> buckets;
  for (const auto& t : terms_) buckets[t.monomial.exponent(v)].push_back({t.monomial.without(v), t.coefficient});
  std::map<unsigned, Poly> out;
  for (auto& [e, ts] : buckets) out.emplace(e, Poly::from_terms(std::move(ts)));
  return out;
}

Poly Poly::from_coefficients(Var v, const std::map<unsigned, Poly>& coeffs) {
  Poly out;
  for (const auto& [e, c] : coeffs) out += c * Poly(Monomial(v, e), Rational(1));
  return out;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational term = t.coefficient;
    for (const auto& [v, e] : t.monomial.factors()) {
      auto it = values.find(v.name());
      if (it == values.end()) throw std::out_of_range("no value for parameter " + v.name());
      for (unsigned k = 0; k < e; ++k) term *= it->second;
    }
    sum += term;
  }
  return sum;
}

Poly Poly::substitute(Var v, const Rational& value) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    const unsigned e = t.monomial.exponent(v);
    for (unsigned k = 0; k < e; ++k) c *= value;
    out.push_back({t.monomial.without(v), c});
  }
  return from_terms(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading_coefficient());
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    std::string term;
    if (t.monomial.is_one()) {
      term = t.coefficient.get_str();
    } else if (t.coefficient == 1) {
      term = t.monomial.to_string();
    } else if (t.coefficient == -1) {
      term = "-" + t.monomial.to_string();
    } else {
      term = t.coefficient.get_str() + "*" + t.monomial.to_string();
    }
    if (!s.empty() && term.front() != '-') s += '+';
    s += term;
  }
  return s;
}

// ---------------------------------------------------------------------------
// gcd

namespace {

Poly content_in(const Poly& p, Var x) {
  Poly g;
  for (const auto& [e, c] : p.coefficients_in(x)) {
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

Poly primitive_part_in(const Poly& p, Var x) { return p.divide_exact(content_in(p, x)); }

Poly leading_coefficient_in(const Poly& p, Var x) { return p.coefficients_in(x).rbegin()->second; }

Poly pseudo_remainder(const Poly& a, const Poly& b, Var x) {
  const unsigned db = b.degree_in(x);
  const Poly lb = leading_coefficient_in(b, x);
  Poly r = a;
  while (!r.is_zero() && r.degree_in(x) >= db) {
    const unsigned d = r.degree_in(x) - db;
    const Poly lr = leading_coefficient_in(r, x);
    r = lb * r - lr * Poly(Monomial(x, d), Rational(1)) * b;
  }
  return r;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);

  auto va = a.variables();
  auto vb = b.variables();
  const Var x = std::min(va.front(), vb.front());
  const bool in_a = std::find(va.begin(), va.end(), x) != va.end();
  const bool in_b = std::find(vb.begin(), vb.end(), x) != vb.end();
  if (!in_a) return gcd(a, content_in(b, x));
  if (!in_b) return gcd(content_in(a, x), b);

  const Poly ca = content_in(a, x);
  const Poly cb = content_in(b, x);
  const Poly c = gcd(ca, cb);
  Poly p = a.divide_exact(ca);
  Poly q = b.divide_exact(cb);
  if (p.degree_in(x) < q.degree_in(x)) std::swap(p, q);
  while (true) {
    Poly r = pseudo_remainder(p, q, x);
    if (r.is_zero()) break;
    if (r.degree_in(x) == 0) {
      q = Poly(1);
      break;
    }
    p = std::move(q);
    q = primitive_part_in(r, x);
  }
  return (c * primitive_part_in(q, x)).monic();
}

}  // namespace geomwb
