#include "geomwb/ideals.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "geomwb/errors.hpp"
#include "geomwb/notation.hpp"

namespace geomwb {

// ---------------------------------------------------------------------------
// Exponents and rings

bool divides(const Exponent& a, const Exponent& b) {
  if ((a.support & ~b.support) != 0 || a.degree > b.degree) return false;
  for (int i = 0; i < kMaxIdealVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

namespace {

Exponent finish(Exponent x) {
  x.degree = 0;
  x.support = 0;
  for (int i = 0; i < kMaxIdealVars; ++i) {
    x.degree = static_cast<std::uint16_t>(x.degree + x.e[i]);
    if (x.e[i]) x.support = static_cast<std::uint16_t>(x.support | (1u << i));
  }
  return x;
}

bool coprime(const Exponent& a, const Exponent& b) { return (a.support & b.support) == 0; }

}  // namespace

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent x;
  for (int i = 0; i < kMaxIdealVars; ++i) x.e[i] = std::max(a.e[i], b.e[i]);
  return finish(x);
}

Exponent operator*(const Exponent& a, const Exponent& b) {
  Exponent x;
  for (int i = 0; i < kMaxIdealVars; ++i) {
    const int s = a.e[i] + b.e[i];
    if (s > 255) throw ResourceLimit("exponent overflow");
    x.e[i] = static_cast<std::uint8_t>(s);
  }
  return finish(x);
}

Exponent operator/(const Exponent& a, const Exponent& b) {
  Exponent x;
  for (int i = 0; i < kMaxIdealVars; ++i) x.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
  return finish(x);
}

PolyRing::PolyRing(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(order) {
  if (names_.size() > static_cast<std::size_t>(kMaxIdealVars))
    throw DimensionMismatch("at most " + std::to_string(kMaxIdealVars) + " variables");
}

int PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int PolyRing::compare(const Exponent& a, const Exponent& b) const {
  if (order_ == MonomialOrder::Grevlex) {
    if (a.degree != b.degree) return a.degree < b.degree ? -1 : 1;
    for (int i = kMaxIdealVars - 1; i >= 0; --i)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
    return 0;
  }
  for (int i = 0; i < kMaxIdealVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const PolyRing>(std::move(names), order);
}

// ---------------------------------------------------------------------------
// GPoly

GPoly::GPoly(RingPtr ring, const Rational& c) : ring_(std::move(ring)) {
  if (c != 0) terms_.push_back({Exponent{}, c});
}

GPoly GPoly::variable(RingPtr ring, const std::string& name) {
  const int i = ring->index_of(name);
  if (i < 0) throw DimensionMismatch("unknown variable " + name);
  Exponent x;
  x.e[static_cast<std::size_t>(i)] = 1;
  GPoly p(std::move(ring));
  p.terms_.push_back({finish(x), Rational(1)});
  return p;
}

GPoly GPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& r = *ring;
  std::sort(terms.begin(), terms.end(),
            [&r](const Term& a, const Term& b) { return r.compare(a.exponent, b.exponent) > 0; });
  std::vector<Term> merged;
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().exponent == t.exponent) merged.back().coefficient += t.coefficient;
    else merged.push_back(std::move(t));
    if (merged.back().coefficient == 0) merged.pop_back();
  }
  return from_sorted(std::move(ring), std::move(merged));
}

GPoly GPoly::from_sorted(RingPtr ring, std::vector<Term> terms) {
  GPoly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

GPoly GPoly::from_poly(RingPtr ring, const Poly& p) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    Exponent x;
    for (const auto& [v, e] : t.monomial.factors()) {
      const int i = ring->index_of(v.name());
      if (i < 0) throw DimensionMismatch("variable " + v.name() + " is not in the ring");
      x.e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
    }
    terms.push_back({finish(x), t.coefficient});
  }
  return from_terms(std::move(ring), std::move(terms));
}

int GPoly::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exponent.degree);
  return d;
}

GPoly GPoly::operator-() const {
  GPoly p = *this;
  for (auto& t : p.terms_) t.coefficient = -t.coefficient;
  return p;
}

namespace {

template <class Term, class Coeff, class Combine>
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                              Combine combine) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = ring.compare(a[i].exponent, b[j].exponent);
    if (c > 0) {
      out.push_back({a[i].exponent, combine(&a[i].coefficient, nullptr)});
      ++i;
    } else if (c < 0) {
      out.push_back({b[j].exponent, combine(nullptr, &b[j].coefficient)});
      ++j;
    } else {
      Coeff s = combine(&a[i].coefficient, &b[j].coefficient);
      if (s != 0) out.push_back({a[i].exponent, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

const RingPtr& common_ring(const GPoly& a, const GPoly& b) {
  if (a.ring() && b.ring() && a.ring() != b.ring() && a.ring()->names() != b.ring()->names())
    throw DimensionMismatch("polynomials over different rings");
  return a.ring() ? a.ring() : b.ring();
}

}  // namespace

GPoly operator+(const GPoly& a, const GPoly& b) {
  const RingPtr& r = common_ring(a, b);
  if (!r) return a;
  return GPoly::from_sorted(r, merge_terms<GPoly::Term, Rational>(*r, a.terms_, b.terms_,
                                                                   [](const Rational* x, const Rational* y) {
                                                                     if (x && y) return Rational(*x + *y);
                                                                     return x ? *x : *y;
                                                                   }));
}

GPoly operator-(const GPoly& a, const GPoly& b) { return a + (-b); }

GPoly GPoly::times_term(const Exponent& m, const Rational& c) const {
  if (c == 0) return GPoly(ring_);
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& x : terms_) t.push_back({x.exponent * m, x.coefficient * c});
  return from_sorted(ring_, std::move(t));
}

GPoly operator*(const GPoly& a, const GPoly& b) {
  const RingPtr& r = common_ring(a, b);
  GPoly out(r);
  for (const auto& t : b.terms_) out = out + a.times_term(t.exponent, t.coefficient);
  return out;
}

GPoly operator*(GPoly a, const Rational& c) {
  if (c == 0) return GPoly(a.ring_);
  for (auto& t : a.terms_) t.coefficient *= c;
  return a;
}

GPoly GPoly::pow(unsigned e) const {
  GPoly out(ring_, Rational(1));
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

bool operator==(const GPoly& a, const GPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].exponent == b.terms_[i].exponent) || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

GPoly GPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading_coefficient());
}

GPoly GPoly::set_zero(int var) const {
  std::vector<Term> t;
  for (const auto& x : terms_)
    if (x.exponent.e[static_cast<std::size_t>(var)] == 0) t.push_back(x);
  return from_sorted(ring_, std::move(t));
}

GPoly GPoly::in_ring(RingPtr ring) const { return from_poly(std::move(ring), to_poly()); }

Poly GPoly::to_poly() const {
  Poly p;
  for (const auto& t : terms_) {
    Monomial m;
    for (int i = 0; i < ring_->size(); ++i)
      if (t.exponent.e[static_cast<std::size_t>(i)])
        m = m * Monomial(Var(ring_->names()[static_cast<std::size_t>(i)]), t.exponent.e[static_cast<std::size_t>(i)]);
    p += Poly(m, t.coefficient);
  }
  return p;
}

std::string GPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (int i = 0; i < ring_->size(); ++i) {
      const int e = t.exponent.e[static_cast<std::size_t>(i)];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->names()[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    Rational c = t.coefficient;
    if (c < 0) {
      os << "-";
      c = -c;
    } else if (!first) {
      os << "+";
    }
    if (mono.empty()) os << c.get_str();
    else if (c == 1) os << mono;
    else os << c.get_str() << "*" << mono;
    first = false;
  }
  return os.str();
}

bool GroebnerBasis::is_unit() const {
  return generators.size() == 1 && generators[0].terms().size() == 1 && generators[0].leading_exponent().degree == 0;
}

// ---------------------------------------------------------------------------
// Fraction-free engine

namespace {

struct ITerm {
  Exponent exponent;
  mpz_class coefficient;
};

struct IPoly {
  std::vector<ITerm> terms;
  int sugar = 0;
  const Exponent& lm() const { return terms.front().exponent; }
};

void make_primitive(IPoly& p) {
  if (p.terms.empty()) return;
  mpz_class g = 0;
  for (const auto& t : p.terms) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coefficient.get_mpz_t());
    if (g == 1) break;
  }
  if (p.terms.front().coefficient < 0) g = -g;
  if (g != 1)
    for (auto& t : p.terms) mpz_divexact(t.coefficient.get_mpz_t(), t.coefficient.get_mpz_t(), g.get_mpz_t());
}

IPoly to_ipoly(const GPoly& p) {
  IPoly out;
  mpz_class den = 1;
  for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  for (const auto& t : p.terms()) {
    mpz_class c = t.coefficient.get_num() * (den / t.coefficient.get_den());
    out.terms.push_back({t.exponent, std::move(c)});
  }
  out.sugar = p.total_degree();
  make_primitive(out);
  return out;
}

GPoly to_gpoly(const RingPtr& ring, const IPoly& p) {
  std::vector<GPoly::Term> terms;
  for (const auto& t : p.terms) terms.push_back({t.exponent, Rational(t.coefficient)});
  return GPoly::from_terms(ring, std::move(terms)).monic();
}

class Engine {
 public:
  Engine(RingPtr ring, const GroebnerLimits& limits)
      : ring_(std::move(ring)), limits_(limits), start_(std::chrono::steady_clock::now()) {}

  /// f <- a f - b m g, cancelling the term at position pos.
  void reduce_step(IPoly& f, std::size_t pos, const IPoly& g) {
    const Exponent m = f.terms[pos].exponent / g.lm();
    mpz_class a = g.terms.front().coefficient, b = f.terms[pos].coefficient, d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());

    std::vector<ITerm> out;
    out.reserve(f.terms.size() + g.terms.size());
    for (std::size_t i = 0; i < pos; ++i) out.push_back({f.terms[i].exponent, f.terms[i].coefficient * a});
    std::size_t i = pos + 1, j = 1;
    while (i < f.terms.size() || j < g.terms.size()) {
      int c;
      Exponent gm;
      if (j < g.terms.size()) gm = g.terms[j].exponent * m;
      if (i == f.terms.size()) c = -1;
      else if (j == g.terms.size()) c = 1;
      else c = ring_->compare(f.terms[i].exponent, gm);
      if (c > 0) {
        out.push_back({f.terms[i].exponent, f.terms[i].coefficient * a});
        ++i;
      } else if (c < 0) {
        out.push_back({gm, -b * g.terms[j].coefficient});
        ++j;
      } else {
        mpz_class s = f.terms[i].coefficient * a - b * g.terms[j].coefficient;
        if (s != 0) out.push_back({gm, std::move(s)});
        ++i;
        ++j;
      }
    }
    f.terms = std::move(out);
    f.sugar = std::max(f.sugar, g.sugar + m.degree);
  }

  const IPoly* find_reducer(const Exponent& x) const {
    const IPoly* best = nullptr;
    for (std::size_t k : active_) {
      const IPoly& g = basis_[k];
      if (divides(g.lm(), x) && (!best || g.terms.size() < best->terms.size())) best = &g;
    }
    return best;
  }

  void reduce(IPoly& f, bool full) {
    std::size_t pos = 0, steps = 0;
    while (pos < f.terms.size()) {
      const IPoly* g = find_reducer(f.terms[pos].exponent);
      if (!g) {
        if (!full) break;
        ++pos;
        continue;
      }
      reduce_step(f, pos, *g);
      if (++steps % 16 == 0) {
        make_primitive(f);
        check_time();
      }
    }
    make_primitive(f);
  }

  void check_time() const {
    const double s = elapsed();
    if (s > limits_.max_seconds)
      throw ResourceLimit("Groebner basis exceeded " + std::to_string(limits_.max_seconds) + " s after " +
                          std::to_string(stats_.pairs_reduced) + " pairs (basis size " +
                          std::to_string(basis_.size()) + ")");
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  struct Pair {
    std::size_t i, j;
    Exponent lcm;
    int sugar;
  };

  int pair_sugar(std::size_t i, std::size_t j, const Exponent& l) const {
    return std::max(basis_[i].sugar + (l.degree - basis_[i].lm().degree),
                    basis_[j].sugar + (l.degree - basis_[j].lm().degree));
  }

  /// Gebauer-Moeller update for a new basis element h.
  void update(std::size_t h) {
    const Exponent& lh = basis_[h].lm();
    std::vector<Pair> c;
    for (std::size_t g : active_) {
      const Exponent l = lcm(lh, basis_[g].lm());
      c.push_back({g, h, l, pair_sugar(g, h, l)});
    }
    std::vector<Pair> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = coprime(lh, basis_[c[a].i].lm());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (divides(c[b].lcm, c[a].lcm)) keep = false;
        for (std::size_t b = 0; b < d.size() && keep; ++b)
          if (divides(d[b].lcm, c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }
    std::vector<Pair> kept;
    for (const Pair& p : pairs_) {
      if (divides(lh, p.lcm) && !(lcm(basis_[p.i].lm(), lh) == p.lcm) && !(lcm(basis_[p.j].lm(), lh) == p.lcm)) {
        ++stats_.pairs_skipped;
        continue;
      }
      kept.push_back(p);
    }
    for (const Pair& p : d) {
      if (coprime(basis_[p.i].lm(), lh)) {
        ++stats_.pairs_skipped;
        continue;
      }
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    std::vector<std::size_t> act;
    for (std::size_t g : active_)
      if (!divides(lh, basis_[g].lm())) act.push_back(g);
    act.push_back(h);
    active_ = std::move(act);
  }

  IPoly spoly(const Pair& p) const {
    const IPoly& f = basis_[p.i];
    const IPoly& g = basis_[p.j];
    const Exponent mf = p.lcm / f.lm(), mg = p.lcm / g.lm();
    mpz_class a = g.terms.front().coefficient, b = f.terms.front().coefficient, d;
    mpz_gcd(d.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    a /= d;
    b /= d;
    IPoly s;
    s.sugar = p.sugar;
    // a mf f - b mg g, both leading terms cancel.
    std::size_t i = 1, j = 1;
    while (i < f.terms.size() || j < g.terms.size()) {
      int c;
      Exponent x, y;
      if (i < f.terms.size()) x = f.terms[i].exponent * mf;
      if (j < g.terms.size()) y = g.terms[j].exponent * mg;
      if (i == f.terms.size()) c = -1;
      else if (j == g.terms.size()) c = 1;
      else c = ring_->compare(x, y);
      if (c > 0) {
        s.terms.push_back({x, a * f.terms[i].coefficient});
        ++i;
      } else if (c < 0) {
        s.terms.push_back({y, -b * g.terms[j].coefficient});
        ++j;
      } else {
        mpz_class v = a * f.terms[i].coefficient - b * g.terms[j].coefficient;
        if (v != 0) s.terms.push_back({x, std::move(v)});
        ++i;
        ++j;
      }
    }
    return s;
  }

  bool add(IPoly f) {
    if (f.terms.empty()) return false;
    if (f.lm().degree == 0) {
      return true;
    }
    if (basis_.size() >= limits_.max_basis)
      throw ResourceLimit("Groebner basis exceeded " + std::to_string(limits_.max_basis) + " elements");
    stats_.max_degree = std::max<int>(stats_.max_degree, f.lm().degree);
    basis_.push_back(std::move(f));
    update(basis_.size() - 1);
    return false;
  }

  std::size_t select() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& p = pairs_[k];
      const Pair& q = pairs_[best];
      if (p.sugar != q.sugar) {
        if (p.sugar < q.sugar) best = k;
        continue;
      }
      const int c = ring_->compare(p.lcm, q.lcm);
      if (c < 0 || (c == 0 && std::tie(p.j, p.i) < std::tie(q.j, q.i))) best = k;
    }
    return best;
  }

  GroebnerBasis run(const std::vector<GPoly>& gens) {
    std::vector<IPoly> input;
    for (const auto& g : gens)
      if (!g.is_zero()) input.push_back(to_ipoly(g));
    std::sort(input.begin(), input.end(), [this](const IPoly& a, const IPoly& b) {
      return ring_->compare(a.lm(), b.lm()) < 0;
    });
    for (auto& f : input) {
      reduce(f, true);
      if (add(std::move(f))) return finish_unit();
    }
    while (!pairs_.empty()) {
      check_time();
      if (stats_.pairs_reduced >= limits_.max_pairs)
        throw ResourceLimit("Groebner basis exceeded " + std::to_string(limits_.max_pairs) + " S-pairs (basis size " +
                            std::to_string(basis_.size()) + ")");
      const std::size_t k = select();
      const Pair p = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      if (p.lcm.degree > limits_.max_degree)
        throw ResourceLimit("S-pair degree " + std::to_string(p.lcm.degree) + " exceeds the degree budget");
      IPoly s = spoly(p);
      ++stats_.pairs_reduced;
      reduce(s, true);
      if (s.terms.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (add(std::move(s))) return finish_unit();
    }
    return finish();
  }

  GroebnerBasis finish_unit() {
    GroebnerBasis out;
    out.ring = ring_;
    out.generators.push_back(GPoly(ring_, Rational(1)));
    stats_.seconds = elapsed();
    out.stats = stats_;
    return out;
  }

  GroebnerBasis finish() {
    // Minimal basis: active elements already have pairwise non-dividing
    // leading monomials except for equal ones, which update() keeps apart.
    std::vector<IPoly> minimal;
    for (std::size_t k : active_) {
      bool redundant = false;
      for (const auto& m : minimal)
        if (divides(m.lm(), basis_[k].lm())) redundant = true;
      if (!redundant) minimal.push_back(basis_[k]);
    }
    std::sort(minimal.begin(), minimal.end(),
              [this](const IPoly& a, const IPoly& b) { return ring_->compare(a.lm(), b.lm()) < 0; });
    // Tail-reduce each element by the others.
    basis_ = minimal;
    GroebnerBasis out;
    out.ring = ring_;
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      active_.clear();
      for (std::size_t o = 0; o < basis_.size(); ++o)
        if (o != k) active_.push_back(o);
      IPoly f = basis_[k];
      IPoly whole = f;
      std::size_t pos = 1;
      while (pos < whole.terms.size()) {
        const IPoly* g = find_reducer(whole.terms[pos].exponent);
        if (!g) {
          ++pos;
          continue;
        }
        reduce_step(whole, pos, *g);
      }
      make_primitive(whole);
      basis_[k] = whole;
      out.generators.push_back(to_gpoly(ring_, whole));
    }
    stats_.seconds = elapsed();
    out.stats = stats_;
    return out;
  }

 private:
  RingPtr ring_;
  GroebnerLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::vector<IPoly> basis_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  GroebnerStats stats_;
};

}  // namespace

GroebnerBasis buchberger(const std::vector<GPoly>& gens, const GroebnerLimits& limits) {
  RingPtr ring;
  for (const auto& g : gens)
    if (g.ring()) ring = g.ring();
  if (!ring) throw DimensionMismatch("buchberger needs at least one polynomial with a ring");
  for (const auto& g : gens)
    if (g.ring() && g.ring() != ring && g.ring()->names() != ring->names())
      throw DimensionMismatch("generators over different rings");
  Engine engine(ring, limits);
  return engine.run(gens);
}

GPoly normal_form(const GPoly& p, const GroebnerBasis& g) {
  std::vector<GPoly::Term> remainder;
  GPoly f = p.ring() ? p : GPoly(g.ring);
  while (!f.is_zero()) {
    const auto& lt = f.terms().front();
    const GPoly* red = nullptr;
    for (const auto& q : g.generators)
      if (divides(q.leading_exponent(), lt.exponent)) {
        red = &q;
        break;
      }
    if (red) {
      const Exponent m = lt.exponent / red->leading_exponent();
      f = f - red->times_term(m, lt.coefficient / red->leading_coefficient());
    } else {
      remainder.push_back(lt);
      GPoly head(g.ring, Rational(1));
      f = f - head.times_term(lt.exponent, lt.coefficient);
    }
  }
  GPoly r(g.ring);
  for (const auto& t : remainder) r = r + GPoly(g.ring, Rational(1)).times_term(t.exponent, t.coefficient);
  return r;
}

bool ideal_member(const GPoly& p, const GroebnerBasis& g) { return normal_form(p, g).is_zero(); }

GPoly s_polynomial(const GPoly& f, const GPoly& g) {
  const Exponent l = lcm(f.leading_exponent(), g.leading_exponent());
  return f.times_term(l / f.leading_exponent(), 1 / f.leading_coefficient()) -
         g.times_term(l / g.leading_exponent(), 1 / g.leading_coefficient());
}

bool is_groebner(const GroebnerBasis& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j)
      if (!normal_form(s_polynomial(g.generators[i], g.generators[j]), g).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Classification family

namespace {

const char* kFamily = R"(
dim 7;
param A, B, C, a13, a14, a17, a18, a1_12, a21, a25, a28, a2_10, a2_11, a2_12, a39, a3_12;
de1 = 0;
de2 = (2*C - a39)*e56 + a17*(e45 - e36) + a13*(e15 + e26) + (2*A - a25)*e34
      - (C + A - a39 - a25)*e12 + a21*(e13 + e24) + a18*e47 + a1_12*e67 + a14*e17;
de3 = a2_10*(e45 - e36) - e24*a25 + a21*e12 + a28*e47 + a2_12*e67 - a18*e17
      - (a21 - a2_11)*e34 - (B + a17)*(e15 + e26) + (A - a25)*e13 - a2_11*e56;
de4 = A*e14;
de5 = -a17*e13 - a39*e26 - a2_10*e34 + a13*e12 + a3_12*e67 + (C - a39)*e15 + a2_12*e47
      - a1_12*e17 - (B + a17)*e24 - (a13 - a2_10)*e56 + a2_11*(e45 - e36);
de6 = B*e14 + C*e16;
de7 = -2*e12 - 2*e34 - 2*e56;
)";

}  // namespace

ClassificationFamily classification_family() {
  return {parse(kFamily), {"A", "B", "C", "a13", "a14", "a17", "a18", "a1_12", "a21", "a25", "a28", "a2_10", "a2_11",
                           "a2_12", "a39", "a3_12"}};
}

std::vector<Poly> d2_ideal(const ClassificationFamily& f) {
  std::vector<Poly> out;
  for (const auto& [k, residue] : jacobi_residues(f.algebra))
    for (const auto& [mask, c] : residue.terms()) {
      if (!c.im().is_zero() || !c.re().denominator().is_constant())
        throw Error("d^2 coefficient is not a real polynomial");
      Poly p = c.re().numerator() * Rational(1 / c.re().denominator().constant_term());
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Membership claims

namespace {

std::vector<std::string> without(std::vector<std::string> names, std::initializer_list<const char*> drop) {
  for (const char* d : drop) names.erase(std::remove(names.begin(), names.end(), std::string(d)), names.end());
  return names;
}

std::vector<GPoly> restricted(const std::vector<Poly>& j, const RingPtr& ring,
                              std::initializer_list<const char*> zero) {
  std::vector<GPoly> out;
  for (const auto& p : j) {
    Poly q = p;
    for (const char* v : zero) q = q.substitute(Var(v), 0);
    if (!q.is_zero()) out.push_back(GPoly::from_poly(ring, q));
  }
  return out;
}

}  // namespace

bool MembershipReport::all_hold() const {
  for (const auto& c : claims)
    if (!c.holds) return false;
  return !negative_control_run || !negative_control_member;
}

MembershipReport verify_membership_claims(const MembershipOptions& options) {
  const ClassificationFamily fam = classification_family();
  const std::vector<Poly> j = d2_ideal(fam);
  const bool direct = options.strategy == MembershipStrategy::Direct;
  auto wanted = [&options](int c) {
    return options.claims.empty() || std::find(options.claims.begin(), options.claims.end(), c) != options.claims.end();
  };
  const Poly A(Var("A")), B(Var("B")), C(Var("C")), a14(Var("a14")), a2_12(Var("a2_12"));

  MembershipReport report;
  const RingPtr full = make_ring(fam.variables, options.order);
  auto full_gens = [&]() {
    std::vector<GPoly> g;
    for (const auto& p : j) g.push_back(GPoly::from_poly(full, p));
    return g;
  };

  if (wanted(1)) {
    const GroebnerBasis gb = buchberger(full_gens(), options.limits);
    ClaimResult r{1, "a2_12*(a14^2+a2_12^2) in J", "direct", false, gb.generators.size(), gb.stats};
    r.holds = ideal_member(GPoly::from_poly(full, a2_12 * (a14 * a14 + a2_12 * a2_12)), gb);
    report.claims.push_back(r);
  }

  if (wanted(2) || options.claims.empty()) {
    GroebnerBasis gb;
    RingPtr ring;
    if (direct) {
      ring = full;
      std::vector<GPoly> g = full_gens();
      g.push_back(GPoly::from_poly(full, A));
      g.push_back(GPoly::from_poly(full, C));
      gb = buchberger(g, options.limits);
    } else {
      ring = make_ring(without(fam.variables, {"A", "C"}), options.order);
      gb = buchberger(restricted(j, ring, {"A", "C"}), options.limits);
    }
    if (wanted(2)) {
      ClaimResult r{2, "B^3 in J+(A,C)", direct ? "direct" : "substitution A=C=0", false, gb.generators.size(),
                    gb.stats};
      r.holds = ideal_member(GPoly::from_poly(ring, B.pow(3)), gb);
      report.claims.push_back(r);
    }
    if (options.claims.empty()) {
      report.negative_control_run = true;
      report.negative_control_member = ideal_member(GPoly::from_poly(ring, B), gb);
    }
  }

  if (wanted(3)) {
    GroebnerBasis gb;
    RingPtr ring;
    if (direct) {
      ring = full;
      std::vector<GPoly> g = full_gens();
      g.push_back(GPoly::from_poly(full, a2_12));
      gb = buchberger(g, options.limits);
    } else {
      ring = make_ring(without(fam.variables, {"a2_12"}), options.order);
      gb = buchberger(restricted(j, ring, {"a2_12"}), options.limits);
    }
    ClaimResult r{3, "B*C*(B^2+9*C^2) in J+(a2_12)", direct ? "direct" : "substitution a2_12=0", false,
                  gb.generators.size(), gb.stats};
    r.holds = ideal_member(GPoly::from_poly(ring, B * C * (B * B + C * C * Rational(9))), gb);
    report.claims.push_back(r);
  }
  return report;
}

}  // namespace geomwb
