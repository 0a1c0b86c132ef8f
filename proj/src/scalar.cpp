#include "geomwb/scalar.hpp"

#include <algorithm>
#include <stdexcept>

#include "geomwb/errors.hpp"

namespace geomwb {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("Scalar with zero denominator");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den_.is_constant()) {
    if (den_.leading_coefficient() != 1) {
      num_ *= Rational(1 / den_.leading_coefficient());
      den_ = Poly(1);
    }
    return;
  }
  const Poly g = gcd(num_, den_);
  if (!g.is_constant()) {
    num_ = num_.divide_exact(g);
    den_ = den_.divide_exact(g);
  }
  const Rational lead = den_.leading_coefficient();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  if (den_.is_constant()) den_ = Poly(1);
}

std::vector<Var> Scalar::variables() const {
  auto vars = num_.variables();
  for (Var v : den_.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  return vars;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  const bool plain = den_.is_constant() && o.den_.is_constant();
  num_ *= o.num_;
  if (plain) return *this;
  den_ *= o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar division by zero");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar out;
  out.num_ = num_.pow(static_cast<unsigned>(e));
  out.den_ = den_.pow(static_cast<unsigned>(e));
  return out;
}

std::string Scalar::to_string() const {
  if (den_ == Poly(1)) return num_.to_string();
  std::string n = num_.to_string();
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.to_string();
  const bool bare = den_.terms().size() == 1 && den_.leading_term().monomial.factors().size() == 1;
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

Scalar normalize(const Poly& num, const Poly& den) { return Scalar(num, den); }

Rational evaluate(const Scalar& s, const ParamAssignment& values) {
  const Rational den = s.denominator().evaluate(values);
  if (den == 0) throw DenominatorVanishes("denominator " + s.denominator().to_string() + " vanishes");
  return s.numerator().evaluate(values) / den;
}

Scalar substitute(const Scalar& s, const ParamAssignment& values) {
  Poly num = s.numerator();
  Poly den = s.denominator();
  for (const auto& [name, value] : values) {
    num = num.substitute(Var(name), value);
    den = den.substitute(Var(name), value);
  }
  if (den.is_zero()) throw DenominatorVanishes("denominator " + s.denominator().to_string() + " vanishes");
  return Scalar(num, den);
}

// ---------------------------------------------------------------------------

ComplexScalar ComplexScalar::i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Scalar(1), Scalar(0)};
    case 1: return {Scalar(0), Scalar(1)};
    case 2: return {Scalar(-1), Scalar(0)};
    default: return {Scalar(0), Scalar(-1)};
  }
}

ComplexScalar& ComplexScalar::operator+=(const ComplexScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexScalar& ComplexScalar::operator-=(const ComplexScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexScalar& ComplexScalar::operator*=(const ComplexScalar& o) {
  if (o.im_.is_zero()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (im_.is_zero()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Scalar re = re_ * o.re_ - im_ * o.im_;
  Scalar im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexScalar& ComplexScalar::operator/=(const ComplexScalar& o) {
  const Scalar norm = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::string ComplexScalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im;
  if (im_ == Scalar(1)) im = "i";
  else if (im_ == Scalar(-1)) im = "-i";
  else im = "(" + im_.to_string() + ")*i";
  if (re_.is_zero()) return im;
  return re_.to_string() + (im.front() == '-' ? "" : "+") + im;
}

}  // namespace geomwb
