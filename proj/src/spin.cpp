#include "geomwb/spin.hpp"

#include <bit>

#include "geomwb/errors.hpp"

namespace geomwb {

namespace {

int spinor_rank(const Spinor& psi) {
  const auto size = static_cast<unsigned>(psi.size());
  if (size == 0 || !std::has_single_bit(size)) throw DimensionMismatch("spinor length is not a power of two");
  return std::countr_zero(size);
}

bool odd_popcount(unsigned x) { return std::popcount(x) & 1; }

int blade_sign(IndexMask a, IndexMask b) {
  int swaps = std::popcount(static_cast<unsigned>(a & b));
  for (unsigned bits = b; bits != 0; bits &= bits - 1) {
    const int j = std::countr_zero(bits);
    swaps += std::popcount(static_cast<unsigned>(a) >> (j + 1));
  }
  return (swaps & 1) ? -1 : 1;
}

}  // namespace

Spinor spinor_basis(int n, int k) {
  Spinor s = Spinor::Constant(1 << n, ComplexScalar());
  s(k) = ComplexScalar(1);
  return s;
}

Spinor generator_act(int j, const Spinor& psi, Parity parity) {
  const int n = spinor_rank(psi);
  const int top = parity == Parity::Odd ? 2 * n + 1 : 2 * n;
  if (j < 0 || j >= top) throw DimensionMismatch("generator e_" + std::to_string(j + 1) + " outside the representation");
  Spinor out = Spinor::Constant(psi.size(), ComplexScalar());
  const ComplexScalar i = ComplexScalar::i();
  if (j == 2 * n) {
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
      if (psi(k).is_zero()) continue;
      const bool neg = (std::popcount(static_cast<unsigned>(k)) + n) & 1;
      out(k) = psi(k) * (neg ? -i : i);
    }
    return out;
  }
  // 1-based generator e_{j+1}; pair index jj = floor(j/2) + 1.
  const int pair = j / 2;
  const unsigned flip = 1u << pair;
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    if (psi(k).is_zero()) continue;
    const auto uk = static_cast<unsigned>(k);
    ComplexScalar c;
    if (j % 2 == 1) {
      // e_{2p}: -(-1)^{a_0 + ... + a_{p-1}} with p = pair + 1.
      c = odd_popcount(uk & ((1u << (pair + 1)) - 1u)) ? ComplexScalar(1) : ComplexScalar(-1);
    } else {
      // e_{2p-1}: i (-1)^{a_0 + ... + a_{p-2}}.
      c = odd_popcount(uk & ((1u << pair) - 1u)) ? -i : i;
    }
    const unsigned target = uk ^ flip;
    if (parity == Parity::Odd) {
      const bool neg = (std::popcount(target) + n) & 1;
      c *= neg ? i : -i;
    }
    out(target) += c * psi(k);
  }
  return out;
}

Spinor vector_act(const FrameVector& v, const Spinor& psi, Parity parity) {
  Spinor out = Spinor::Constant(psi.size(), ComplexScalar());
  for (Eigen::Index j = 0; j < v.size(); ++j)
    if (!v(j).is_zero()) out += generator_act(static_cast<int>(j), psi, parity) * ComplexScalar(v(j));
  return out;
}

Spinor form_act(const KForm& w, const Spinor& psi) {
  Spinor out = Spinor::Constant(psi.size(), ComplexScalar());
  for (const auto& [mask, c] : w.terms()) {
    const std::vector<int> idx = mask_indices(mask);
    Spinor v = psi;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) v = generator_act(*it, v);
    out += v * c;
  }
  return out;
}

Spinor spin_lift_act(const ScalarMatrix& a, const Spinor& psi) {
  Spinor out = Spinor::Constant(psi.size(), ComplexScalar());
  const ComplexScalar minus_half = ComplexScalar(Scalar(Rational(-1, 2)));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      const Spinor v = generator_act(static_cast<int>(i), generator_act(static_cast<int>(j), psi));
      out += v * (minus_half * ComplexScalar(a(i, j)));
    }
  return out;
}

std::string to_string(QStatus s) {
  switch (s) {
    case QStatus::Ok: return "ok";
    case QStatus::NoSolution: return "no_solution";
    case QStatus::Asymmetric: return "asymmetric";
  }
  return "?";
}

std::vector<Spinor> spinor_derivatives(const ConnectionData& gamma, int n) {
  std::vector<Spinor> sigma;
  const Spinor u0 = spinor_basis(n, 0);
  for (int i = 0; i < gamma.dim(); ++i) sigma.push_back(spin_lift_act(gamma.omega(i), u0));
  return sigma;
}

QResult extract_q(const LieAlgebra& g, int n) {
  const int dim = 2 * n + 1;
  if (g.dim() != dim)
    throw DimensionMismatch("extract_q: algebra dimension " + std::to_string(g.dim()) + " is not 2n+1 = " +
                            std::to_string(dim));
  const ConnectionData gamma = koszul(g);
  const std::vector<Spinor> sigma = spinor_derivatives(gamma, n);
  const Spinor u0 = spinor_basis(n, 0);
  const int rows = 2 << n;

  // Real system for v . u_0: rows are (re, im) of each spinor component.
  ScalarMatrix m(rows, dim);
  for (int l = 0; l < dim; ++l) {
    const Spinor w = generator_act(l, u0);
    for (int t = 0; t < (1 << n); ++t) {
      m(2 * t, l) = w(t).re();
      m(2 * t + 1, l) = w(t).im();
    }
  }

  QResult out;
  out.q = ScalarMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    ScalarVector rhs(rows);
    for (int t = 0; t < (1 << n); ++t) {
      rhs(2 * t) = sigma[static_cast<std::size_t>(i)](t).re() * Scalar(2);
      rhs(2 * t + 1) = sigma[static_cast<std::size_t>(i)](t).im() * Scalar(2);
    }
    auto sol = lin_solve<Scalar>(m, rhs);
    if (!sol) {
      out.status = QStatus::NoSolution;
      out.failing_row = i;
      return out;
    }
    out.q.row(i) = sol->x.transpose();
  }
  out.status = is_symmetric(out.q) ? QStatus::Ok : QStatus::Asymmetric;
  return out;
}

std::string to_string(QPatternKind k) {
  switch (k) {
    case QPatternKind::Zero: return "zero";
    case QPatternKind::EinsteinSasaki: return "einstein_sasaki";
    case QPatternKind::AlphaEinsteinSasaki: return "alpha_einstein_sasaki";
    case QPatternKind::Generic: return "generic";
  }
  return "?";
}

QPattern q_pattern(const ScalarMatrix& q) {
  QPattern p;
  const Eigen::Index dim = q.rows();
  if (is_zero(q)) {
    p.kind = QPatternKind::Zero;
    return p;
  }
  const Scalar a = q(0, 0);
  const Scalar b = q(dim - 1, dim - 1) - a;
  ScalarMatrix model = ScalarMatrix::Identity(dim, dim) * a;
  model(dim - 1, dim - 1) += b;
  if (!(model == q)) return p;
  p.a = a;
  p.b = b;
  p.kind = b.is_zero() ? QPatternKind::EinsteinSasaki : QPatternKind::AlphaEinsteinSasaki;
  return p;
}

// ---------------------------------------------------------------------------
// CliffordElement

CliffordElement CliffordElement::scalar(const ComplexScalar& c) {
  CliffordElement x;
  x.add_term(0, c);
  return x;
}

CliffordElement CliffordElement::generator(int i) {
  CliffordElement x;
  x.add_term(static_cast<IndexMask>(1u << i), ComplexScalar(1));
  return x;
}

CliffordElement CliffordElement::vector(const FrameVector& v) {
  CliffordElement x;
  for (Eigen::Index i = 0; i < v.size(); ++i) x.add_term(static_cast<IndexMask>(1u << i), v(i));
  return x;
}

void CliffordElement::add_term(IndexMask blade, const ComplexScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(blade, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  CliffordElement out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      const ComplexScalar c = ca * cb;
      out.add_term(static_cast<IndexMask>(ma ^ mb), blade_sign(ma, mb) > 0 ? c : -c);
    }
  return out;
}

CliffordElement operator*(CliffordElement a, const ComplexScalar& c) {
  if (c.is_zero()) return {};
  for (auto& [m, v] : a.terms_) v *= c;
  return a;
}

Spinor CliffordElement::act(const Spinor& psi) const {
  Spinor out = Spinor::Constant(psi.size(), ComplexScalar());
  for (const auto& [mask, c] : terms_) {
    const std::vector<int> idx = mask_indices(mask);
    Spinor v = psi;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) v = generator_act(*it, v);
    out += v * c;
  }
  return out;
}

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    std::string blade;
    for (int i : mask_indices(m)) blade += (blade.empty() ? "e" : "*e") + std::to_string(i + 1);
    std::string term;
    if (blade.empty()) {
      term = c.to_string();
    } else if (c == ComplexScalar(1)) {
      term = blade;
    } else if (c == ComplexScalar(-1)) {
      term = "-" + blade;
    } else {
      term = "(" + c.to_string() + ")*" + blade;
    }
    if (!s.empty() && term.front() != '-') s += "+";
    s += term;
  }
  return s;
}

CliffordElement j_embed(int k, int m, const FrameVector& v) {
  if (!(k < m)) throw DimensionMismatch("j_k^m needs k < m");
  if (v.size() != k) throw DimensionMismatch("j_k^m acts on vectors of R^k");
  return CliffordElement::generator(k) * CliffordElement::vector(v);
}

CliffordElement j_apply(int k, int m, const CliffordElement& x) {
  if (!(k < m)) throw DimensionMismatch("j_k^m needs k < m");
  CliffordElement out;
  for (const auto& [mask, c] : x.terms()) {
    CliffordElement image = CliffordElement::scalar(c);
    for (int i : mask_indices(mask)) {
      if (i >= k) throw DimensionMismatch("blade outside Cl(k)");
      image = image * j_embed(k, m, frame_basis(k, i));
    }
    out += image;
  }
  return out;
}

CliffordElement reduction_j(int n, int k) {
  if (k == 2 * n - 2 || k == 2 * n - 1 || k < 0 || k > 2 * n)
    throw DimensionMismatch("index outside the reduced sub-basis");
  return CliffordElement::generator(2 * n - 2) * CliffordElement::generator(k);
}

Spinor sigma0_project(const Spinor& psi, int n) {
  if (spinor_rank(psi) != n) throw DimensionMismatch("spinor does not belong to Sigma^{2n+1}");
  return psi - generator_act(2 * n - 2, psi);
}

}  // namespace geomwb
