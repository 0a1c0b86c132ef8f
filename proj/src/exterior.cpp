#include "geomwb/exterior.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "geomwb/errors.hpp"

namespace geomwb {

namespace {

int popcount(unsigned x) { return std::popcount(x); }

/// Sign of e^A ^ e^B relative to e^{A|B}; A and B disjoint.
int wedge_sign(IndexMask a, IndexMask b) {
  int inversions = 0;
  for (unsigned bits = b; bits != 0; bits &= bits - 1) {
    const int j = std::countr_zero(bits);
    inversions += popcount(static_cast<unsigned>(a) >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

std::string atom_string(IndexMask mask) {
  std::string s = "e";
  for (int i : mask_indices(mask)) s += std::to_string(i + 1);
  return s;
}

std::string coefficient_times(const ComplexScalar& c, const std::string& atom) {
  if (c == ComplexScalar(1)) return atom;
  if (c == ComplexScalar(-1)) return "-" + atom;
  if (c.is_real()) {
    const Scalar& s = c.re();
    const bool plain = s.denominator() == Poly(1) && s.numerator().terms().size() == 1;
    if (plain || !(s.denominator() == Poly(1))) return s.to_string() + "*" + atom;
    return "(" + s.to_string() + ")*" + atom;
  }
  return "(" + c.to_string() + ")*" + atom;
}

}  // namespace

FrameVector frame_basis(int dim, int i) {
  FrameVector v = FrameVector::Constant(dim, Scalar(0));
  v(i) = Scalar(1);
  return v;
}

std::vector<int> mask_indices(IndexMask mask) {
  std::vector<int> out;
  for (unsigned bits = mask; bits != 0; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

IndexMask indices_mask(std::span<const int> indices) {
  IndexMask m = 0;
  for (int i : indices) m = static_cast<IndexMask>(m | (1u << i));
  return m;
}

// ---------------------------------------------------------------------------
// KForm

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxDim) throw UnsupportedDimension("form dimension " + std::to_string(dim) + " outside [0, 9]");
  if (degree < 0) throw DegreeError("negative form degree");
}

KForm KForm::coframe(int dim, int i) {
  KForm f(dim, 1);
  f.terms_.emplace(static_cast<IndexMask>(1u << i), ComplexScalar(1));
  return f;
}

KForm KForm::monomial(int dim, std::span<const int> indices, ComplexScalar c) {
  KForm f(dim, static_cast<int>(indices.size()));
  std::vector<int> idx(indices.begin(), indices.end());
  int sign = 1;
  // Bubble sort to track the permutation sign; tuples are short.
  for (std::size_t a = 0; a < idx.size(); ++a)
    for (std::size_t b = 0; b + 1 < idx.size() - a; ++b)
      if (idx[b] > idx[b + 1]) {
        std::swap(idx[b], idx[b + 1]);
        sign = -sign;
      }
  for (std::size_t a = 0; a + 1 < idx.size(); ++a)
    if (idx[a] == idx[a + 1]) return f;
  for (int i : idx)
    if (i < 0 || i >= dim) throw DimensionMismatch("index " + std::to_string(i + 1) + " outside the coframe");
  f.add_term(indices_mask(idx), sign > 0 ? c : -c);
  return f;
}

KForm KForm::flat(const FrameVector& v) {
  KForm f(static_cast<int>(v.size()), 1);
  for (Eigen::Index i = 0; i < v.size(); ++i) f.add_term(static_cast<IndexMask>(1u << i), v(i));
  return f;
}

bool KForm::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

ComplexScalar KForm::coefficient(IndexMask mask) const {
  auto it = terms_.find(mask);
  return it == terms_.end() ? ComplexScalar() : it->second;
}

ComplexScalar KForm::coefficient(std::span<const int> indices) const {
  KForm probe = monomial(dim_, indices);
  if (probe.is_zero()) return ComplexScalar();
  const auto& [mask, sign] = *probe.terms_.begin();
  return coefficient(mask) * sign;
}

void KForm::add_term(IndexMask mask, const ComplexScalar& c) {
  if (c.is_zero()) return;
  if (popcount(mask) != degree_) throw DegreeError("term degree does not match form degree");
  auto [it, inserted] = terms_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

KForm KForm::operator-() const {
  KForm out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

KForm& KForm::operator+=(const KForm& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty() && (dim_ == 0 || dim_ == o.dim_)) return *this = o;
  if (o.dim_ != dim_) throw DimensionMismatch("adding forms on different dimensions");
  if (o.degree_ != degree_) throw DegreeError("adding forms of different degree");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

KForm& KForm::operator-=(const KForm& o) { return *this += -o; }

KForm& KForm::operator*=(const ComplexScalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

KForm KForm::conj() const {
  KForm out = *this;
  for (auto& [m, c] : out.terms_) c = c.conj();
  return out;
}

KForm KForm::real_part() const {
  KForm out(dim_, degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.re());
  return out;
}

KForm KForm::imag_part() const {
  KForm out(dim_, degree_);
  for (const auto& [m, c] : terms_) out.add_term(m, c.im());
  return out;
}

ComplexScalar KForm::operator()(const FrameVector& v) const {
  if (degree_ != 1) throw DegreeError("evaluating a non-1-form on one vector");
  ComplexScalar sum;
  for (const auto& [m, c] : terms_) {
    const int i = std::countr_zero(static_cast<unsigned>(m));
    if (!v(i).is_zero()) sum += c * v(i);
  }
  return sum;
}

ComplexScalar KForm::operator()(const FrameVector& u, const FrameVector& v) const {
  if (degree_ != 2) throw DegreeError("evaluating a non-2-form on two vectors");
  ComplexScalar sum;
  for (const auto& [m, c] : terms_) {
    const auto idx = mask_indices(m);
    const Scalar det = u(idx[0]) * v(idx[1]) - u(idx[1]) * v(idx[0]);
    if (!det.is_zero()) sum += c * det;
  }
  return sum;
}

FrameVector KForm::sharp() const {
  if (degree_ != 1) throw DegreeError("sharp of a non-1-form");
  FrameVector v = FrameVector::Constant(dim_, Scalar(0));
  for (const auto& [m, c] : terms_) {
    if (!c.is_real()) throw DegreeError("sharp of a complex 1-form");
    v(std::countr_zero(static_cast<unsigned>(m))) = c.re();
  }
  return v;
}

std::string KForm::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, IndexMask>> order;
  for (const auto& [m, c] : terms_) order.emplace_back(mask_indices(m), m);
  std::sort(order.begin(), order.end());
  std::string s;
  for (const auto& [idx, m] : order) {
    std::string term = degree_ == 0 ? terms_.at(m).to_string() : coefficient_times(terms_.at(m), atom_string(m));
    if (!s.empty() && term.front() != '-') s += '+';
    s += term;
  }
  return s;
}

// ---------------------------------------------------------------------------

KForm wedge(const KForm& a, const KForm& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("wedge of forms on different dimensions");
  KForm out(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      const ComplexScalar c = ca * cb;
      out.add_term(static_cast<IndexMask>(ma | mb), wedge_sign(ma, mb) > 0 ? c : -c);
    }
  return out;
}

KForm interior(const FrameVector& x, const KForm& w) {
  if (x.size() != w.dim()) throw DimensionMismatch("interior product dimension mismatch");
  if (w.degree() == 0) return KForm(w.dim(), 0);
  KForm out(w.dim(), w.degree() - 1);
  for (const auto& [m, c] : w.terms())
    for (int i : mask_indices(m)) {
      if (x(i).is_zero()) continue;
      const int below = popcount(static_cast<unsigned>(m) & ((1u << i) - 1u));
      const ComplexScalar v = c * x(i);
      out.add_term(static_cast<IndexMask>(m & ~(1u << i)), (below & 1) ? -v : v);
    }
  return out;
}

// ---------------------------------------------------------------------------
// LieAlgebra

LieAlgebra::LieAlgebra(int dim, std::vector<KForm> differentials, std::vector<std::string> params)
    : dim_(dim), differentials_(std::move(differentials)), params_(std::move(params)) {
  if (dim < 1 || dim > kMaxDim) throw UnsupportedDimension("dimension " + std::to_string(dim) + " outside [1, 9]");
  if (static_cast<int>(differentials_.size()) != dim)
    throw DimensionMismatch("expected " + std::to_string(dim) + " differentials, got " +
                            std::to_string(differentials_.size()));
  for (auto& d : differentials_) {
    if (d.is_zero()) d = KForm(dim, 2);
    if (d.dim() != dim || d.degree() != 2) throw DegreeError("differential is not a 2-form on the coframe");
    if (!d.is_real()) throw DegreeError("differential has complex coefficients");
  }
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim, std::vector<KForm>(static_cast<std::size_t>(dim), KForm(dim, 2))); }

LieAlgebra LieAlgebra::heisenberg(int n) {
  const int dim = 2 * n + 1;
  std::vector<KForm> d(static_cast<std::size_t>(dim), KForm(dim, 2));
  for (int j = 0; j < n; ++j) {
    const int idx[] = {2 * j, 2 * j + 1};
    d.back() += KForm::monomial(dim, idx, ComplexScalar(-2));
  }
  return LieAlgebra(dim, std::move(d));
}

Scalar LieAlgebra::structure_constant(int i, int j, int k) const {
  if (i == j) return Scalar(0);
  const int idx[] = {i, j};
  return -d(k).coefficient(idx).re();
}

FrameVector LieAlgebra::bracket(const FrameVector& x, const FrameVector& y) const {
  FrameVector out = FrameVector::Constant(dim_, Scalar(0));
  for (int k = 0; k < dim_; ++k)
    for (const auto& [m, c] : d(k).terms()) {
      const auto idx = mask_indices(m);
      // [e_i, e_j] has e_k-component -c for i < j.
      const Scalar w = x(idx[0]) * y(idx[1]) - x(idx[1]) * y(idx[0]);
      if (!w.is_zero()) out(k) -= c.re() * w;
    }
  return out;
}

KForm ce_differential(const KForm& w, const LieAlgebra& g) {
  if (w.dim() != g.dim()) throw DimensionMismatch("form and algebra dimensions differ");
  const int dim = g.dim();
  if (w.degree() >= dim) return KForm(dim, w.degree() + 1);
  std::map<IndexMask, KForm> memo;
  auto d_mono = [&](auto&& self, IndexMask mask) -> KForm {
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    const int deg = popcount(mask);
    KForm result(dim, deg + 1);
    if (deg == 1) {
      result = g.d(std::countr_zero(static_cast<unsigned>(mask)));
    } else {
      const int i = std::countr_zero(static_cast<unsigned>(mask));
      const IndexMask rest = static_cast<IndexMask>(mask & ~(1u << i));
      KForm rest_form(dim, deg - 1);
      rest_form.add_term(rest, ComplexScalar(1));
      result = wedge(g.d(i), rest_form) - wedge(KForm::coframe(dim, i), self(self, rest));
    }
    memo.emplace(mask, result);
    return result;
  };
  KForm out(dim, w.degree() + 1);
  for (const auto& [m, c] : w.terms()) {
    if (m == 0) continue;
    out += d_mono(d_mono, m) * c;
  }
  return out;
}

std::vector<std::pair<int, KForm>> jacobi_residues(const LieAlgebra& g) {
  std::vector<std::pair<int, KForm>> out;
  for (int k = 0; k < g.dim(); ++k) {
    KForm r = ce_differential(g.d(k), g);
    if (!r.is_zero()) out.emplace_back(k, std::move(r));
  }
  return out;
}

KForm change_frame(const KForm& w, const ScalarMatrix& P) {
  const int dim = w.dim();
  std::vector<KForm> images;
  for (int i = 0; i < dim; ++i) {
    KForm e(dim, 1);
    for (int b = 0; b < dim; ++b) e.add_term(static_cast<IndexMask>(1u << b), P(i, b));
    images.push_back(std::move(e));
  }
  KForm out(dim, w.degree());
  for (const auto& [m, c] : w.terms()) {
    KForm term(dim, 0);
    term.add_term(0, c);
    for (int i : mask_indices(m)) term = wedge(term, images[static_cast<std::size_t>(i)]);
    out += term;
  }
  return out;
}

LieAlgebra change_frame(const LieAlgebra& g, const ScalarMatrix& P) {
  const int dim = g.dim();
  std::vector<KForm> d;
  for (int a = 0; a < dim; ++a) {
    KForm df(dim, 2);
    for (int i = 0; i < dim; ++i)
      if (!P(i, a).is_zero()) df += g.d(i) * ComplexScalar(P(i, a));
    d.push_back(change_frame(df, P));
  }
  return LieAlgebra(dim, std::move(d), g.params());
}

KForm substitute(const KForm& w, const ParamAssignment& values) {
  KForm out(w.dim(), w.degree());
  for (const auto& [m, c] : w.terms())
    out.add_term(m, ComplexScalar(substitute(c.re(), values), substitute(c.im(), values)));
  return out;
}

LieAlgebra substitute(const LieAlgebra& g, const ParamAssignment& values) {
  std::vector<KForm> d;
  for (const auto& f : g.differentials()) d.push_back(substitute(f, values));
  std::vector<std::string> params;
  for (const auto& p : g.params())
    if (!values.count(p)) params.push_back(p);
  return LieAlgebra(g.dim(), std::move(d), std::move(params));
}

}  // namespace geomwb
