#include "geomwb/notation.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "geomwb/errors.hpp"

namespace geomwb {

namespace {

enum class Tok { Number, Ident, Atom, DiffHead, Punct, End };

struct Token {
  Tok kind;
  std::string text;           // identifier name, number digits or punctuation
  std::vector<int> indices;   // 0-based, for Atom and DiffHead
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      const int l = line_, c = col_;
      if (pos_ >= src_.size()) {
        out.push_back({Tok::End, "", {}, l, c});
        return out;
      }
      const char ch = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += advance();
        out.push_back({Tok::Number, digits, {}, l, c});
      } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
        if (ch == 'd' && peek(1) == 'e') {
          const std::size_t save = pos_;
          const int sl = line_, sc = col_;
          advance();
          if (auto idx = try_atom()) {
            if (idx->size() != 1) throw SyntaxError("differential head must name one coframe element", l, c);
            out.push_back({Tok::DiffHead, "", *idx, l, c});
            continue;
          }
          pos_ = save;
          line_ = sl;
          col_ = sc;
        }
        if (ch == 'e') {
          if (auto idx = try_atom()) {
            out.push_back({Tok::Atom, "", *idx, l, c});
            continue;
          }
        }
        std::string name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
          name += advance();
        out.push_back({Tok::Ident, name, {}, l, c});
      } else if (std::string_view("()+-*/^,;=").find(ch) != std::string_view::npos) {
        out.push_back({Tok::Punct, std::string(1, advance()), {}, l, c});
      } else {
        throw SyntaxError(std::string("unexpected character '") + ch + "'", l, c);
      }
    }
  }

 private:
  char peek(std::size_t k) const { return pos_ + k < src_.size() ? src_[pos_ + k] : '\0'; }
  char advance() {
    const char ch = src_[pos_++];
    if (ch == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return ch;
  }
  void skip_space() {
    while (pos_ < src_.size()) {
      if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else if (src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  // At an 'e': e14, e1.12, e_2, e^{14}, e^{1,12}, e^3. Leaves the position
  // untouched and returns nullopt if the text is an ordinary identifier.
  std::optional<std::vector<int>> try_atom() {
    const int l = line_, c = col_;
    std::size_t p = pos_ + 1;
    bool braced = false;
    if (p < src_.size() && src_[p] == '_') {
      ++p;
    } else if (p < src_.size() && src_[p] == '^') {
      ++p;
      if (p < src_.size() && src_[p] == '{') {
        braced = true;
        ++p;
      }
    }
    std::string body;
    while (p < src_.size()) {
      const char ch = src_[p];
      if (std::isdigit(static_cast<unsigned char>(ch)) || ((ch == '.' || (braced && ch == ',')) && !body.empty())) {
        body += ch;
        ++p;
      } else {
        break;
      }
    }
    if (body.empty()) return std::nullopt;
    if (braced) {
      if (p >= src_.size() || src_[p] != '}') throw SyntaxError("unclosed '{' in coframe monomial", l, c);
      ++p;
    } else if (p < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[p])) || src_[p] == '_')) {
      return std::nullopt;  // identifier such as e1x
    }
    std::vector<int> idx;
    if (body.find_first_of(".,") != std::string::npos) {
      std::size_t start = 0;
      while (start <= body.size()) {
        const std::size_t end = body.find_first_of(".,", start);
        const std::string part = body.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (part.empty()) throw SyntaxError("empty index in coframe monomial", l, c);
        idx.push_back(std::stoi(part) - 1);
        if (end == std::string::npos) break;
        start = end + 1;
      }
    } else {
      for (char ch : body) idx.push_back(ch - '1');
    }
    for (int i : idx)
      if (i < 0) throw SyntaxError("coframe indices start at 1", l, c);
    while (pos_ < p) advance();
    return idx;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Expression values are either scalars or homogeneous forms. Forms are built
// on the maximal coframe and re-dimensioned once the dimension is known.
struct Value {
  bool is_form = false;
  Scalar scalar;
  KForm form;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(Lexer(text).run()) {}

  LieAlgebra presentation() {
    std::optional<int> dim;
    for (;;) {
      if (is_ident("dim")) {
        next();
        const Token& t = expect(Tok::Number, "dimension");
        const int d = std::stoi(t.text);
        if (d < 1 || d > kMaxDim) throw UnsupportedDimension("dimension " + t.text + " outside [1, 9]");
        dim = d;
        accept(";");
      } else if (is_ident("param")) {
        next();
        do {
          const Token& t = expect(Tok::Ident, "parameter name");
          declare(t.text);
        } while (accept(","));
        accept(";");
      } else {
        break;
      }
    }

    std::vector<std::pair<KForm, Token>> entries;
    if (peek().kind == Tok::Punct && peek().text == "(") {
      next();
      for (;;) {
        const Token start = peek();
        entries.emplace_back(two_form(expression(), start), start);
        if (accept(",")) continue;
        if (accept(")")) break;
        fail("expected ',' or ')' in tuple");
      }
      accept(";");
      if (peek().kind != Tok::End) fail("unexpected text after tuple");
      const int n = static_cast<int>(entries.size());
      if (dim && *dim != n)
        throw DimensionMismatch("tuple has " + std::to_string(n) + " entries but dim is " + std::to_string(*dim));
      if (n > kMaxDim) throw UnsupportedDimension("dimension " + std::to_string(n) + " outside [1, 9]");
      dim = n;
    } else if (peek().kind == Tok::DiffHead) {
      std::map<int, std::pair<KForm, Token>> eqs;
      while (peek().kind == Tok::DiffHead) {
        const Token head = next();
        expect_punct("=");
        const Token start = peek();
        KForm f = two_form(expression(), start);
        if (!eqs.emplace(head.indices[0], std::make_pair(std::move(f), start)).second)
          throw SyntaxError("duplicate equation for de" + std::to_string(head.indices[0] + 1), head.line, head.column);
        accept(";");
      }
      if (peek().kind != Tok::End) fail("expected an equation 'de<k> = ...'");
      if (!dim) {
        int m = 0;
        for (const auto& [k, e] : eqs) m = std::max(m, k + 1);
        m = std::max(m, max_index_ + 1);
        dim = m;
      }
      for (int k = 0; k < *dim; ++k) {
        auto it = eqs.find(k);
        entries.emplace_back(it == eqs.end() ? KForm(kMaxDim, 2) : it->second.first,
                             it == eqs.end() ? peek() : it->second.second);
      }
      if (!eqs.empty() && eqs.rbegin()->first >= *dim)
        throw DimensionMismatch("equation for de" + std::to_string(eqs.rbegin()->first + 1) + " exceeds dim " +
                                std::to_string(*dim));
    } else {
      fail("expected a tuple '(...)' or equations 'de<k> = ...'");
    }

    std::vector<KForm> d;
    for (auto& [f, tok] : entries) d.push_back(redim(f, *dim));
    return LieAlgebra(*dim, std::move(d), params_);
  }

  Value whole_expression() {
    Value v = expression();
    if (peek().kind != Tok::End) fail("unexpected trailing text");
    return v;
  }

  std::vector<Value> whole_tuple() {
    expect_punct("(");
    std::vector<Value> out;
    for (;;) {
      out.push_back(expression());
      if (accept(",")) continue;
      if (accept(")")) break;
      fail("expected ',' or ')' in tuple");
    }
    if (peek().kind != Tok::End) fail("unexpected trailing text");
    return out;
  }

  bool starts_tuple() const { return peek().kind == Tok::Punct && peek().text == "("; }
  int max_index() const { return max_index_; }

  static KForm redim(const KForm& f, int dim) {
    KForm out(dim, f.degree());
    for (const auto& [m, c] : f.terms()) {
      if (m >> dim) throw DimensionMismatch("coframe index exceeds dimension " + std::to_string(dim));
      out.add_term(m, c);
    }
    return out;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is_ident(const char* name) const { return peek().kind == Tok::Ident && peek().text == name; }
  bool is_punct(const char* p) const { return peek().kind == Tok::Punct && peek().text == p; }
  bool accept(const char* p) {
    if (!is_punct(p)) return false;
    next();
    return true;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(msg + (peek().kind == Tok::End ? " (reached end of input)" : ""), peek().line, peek().column);
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what);
    return next();
  }
  void expect_punct(const char* p) {
    if (!accept(p)) fail(std::string("expected '") + p + "'");
  }
  void declare(const std::string& name) {
    if (std::find(params_.begin(), params_.end(), name) == params_.end()) params_.push_back(name);
  }

  KForm two_form(const Value& v, const Token& at) {
    if (!v.is_form) {
      if (v.scalar.is_zero()) return KForm(kMaxDim, 2);
      throw DegreeError(std::to_string(at.line) + ":" + std::to_string(at.column) +
                        ": entry is a nonzero scalar, not a 2-form");
    }
    if (v.form.degree() != 2)
      throw DegreeError(std::to_string(at.line) + ":" + std::to_string(at.column) + ": entry has degree " +
                        std::to_string(v.form.degree()) + ", expected a 2-form");
    return v.form;
  }

  static bool starts_factor(const Token& t) {
    return t.kind == Tok::Number || t.kind == Tok::Ident || t.kind == Tok::Atom ||
           (t.kind == Tok::Punct && t.text == "(");
  }

  Value add(Value a, const Value& b, bool subtract, const Token& at) {
    if (!a.is_form && !b.is_form) {
      a.scalar = subtract ? a.scalar - b.scalar : a.scalar + b.scalar;
      return a;
    }
    if (!b.is_form && b.scalar.is_zero()) return a;
    if (!a.is_form && a.scalar.is_zero()) {
      Value r = b;
      if (subtract) r.form = -r.form;
      return r;
    }
    if (a.is_form != b.is_form || a.form.degree() != b.form.degree())
      throw DegreeError(std::to_string(at.line) + ":" + std::to_string(at.column) + ": adding terms of different degree");
    if (subtract) {
      a.form -= b.form;
    } else {
      a.form += b.form;
    }
    return a;
  }

  Value expression() {
    Value v;
    bool negate = false;
    if (accept("-")) {
      negate = true;
    } else {
      accept("+");
    }
    v = term();
    if (negate) v = scale(v, Scalar(-1));
    for (;;) {
      const Token at = peek();
      if (accept("+")) {
        v = add(v, term(), false, at);
      } else if (accept("-")) {
        v = add(v, term(), true, at);
      } else {
        break;
      }
    }
    return v;
  }

  static Value scale(Value v, const Scalar& s) {
    if (v.is_form) {
      v.form *= ComplexScalar(s);
    } else {
      v.scalar *= s;
    }
    return v;
  }

  Value term() {
    Value v = factor();
    for (;;) {
      const Token at = peek();
      if (accept("*") || (starts_factor(peek()) && !is_punct("*"))) {
        Value r = factor();
        if (v.is_form && r.is_form)
          throw DegreeError(std::to_string(at.line) + ":" + std::to_string(at.column) +
                            ": product of two coframe monomials");
        v = v.is_form ? scale(v, r.scalar) : scale(r, v.scalar);
      } else if (accept("/")) {
        Value r = factor();
        if (r.is_form) throw DegreeError(std::to_string(at.line) + ":" + std::to_string(at.column) + ": division by a form");
        if (r.scalar.is_zero()) throw SyntaxError("division by zero", at.line, at.column);
        v = scale(v, r.scalar.inverse());
      } else {
        return v;
      }
    }
  }

  Value factor() {
    if (accept("-")) return scale(factor(), Scalar(-1));
    if (accept("+")) return factor();
    Value v = primary();
    const Token at = peek();
    if (accept("^")) {
      bool neg = accept("-");
      const Token& e = expect(Tok::Number, "integer exponent");
      if (v.is_form) throw DegreeError(std::to_string(at.line) + ":" + std::to_string(at.column) + ": power of a form");
      int k = std::stoi(e.text);
      if (neg) {
        if (v.scalar.is_zero()) throw SyntaxError("negative power of zero", at.line, at.column);
        k = -k;
      }
      v.scalar = v.scalar.pow(k);
    }
    return v;
  }

  Value primary() {
    const Token& t = peek();
    Value v;
    switch (t.kind) {
      case Tok::Number:
        next();
        v.scalar = Scalar(Rational(t.text));
        return v;
      case Tok::Ident:
        if (t.text == "dim" || t.text == "param") fail("keyword '" + t.text + "' inside an expression");
        next();
        declare(t.text);
        v.scalar = Scalar::param(t.text);
        return v;
      case Tok::Atom: {
        next();
        for (int i : t.indices) {
          if (i >= kMaxDim) throw DimensionMismatch("coframe index " + std::to_string(i + 1) + " exceeds 9");
          max_index_ = std::max(max_index_, i);
        }
        std::set<int> distinct(t.indices.begin(), t.indices.end());
        v.is_form = true;
        v.form = distinct.size() == t.indices.size() ? KForm::monomial(kMaxDim, t.indices)
                                                     : KForm(kMaxDim, static_cast<int>(t.indices.size()));
        return v;
      }
      case Tok::Punct:
        if (t.text == "(") {
          next();
          v = expression();
          expect_punct(")");
          return v;
        }
        break;
      default:
        break;
    }
    fail("expected a number, parameter, coframe monomial or '('");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> params_;
  int max_index_ = -1;
};

}  // namespace

LieAlgebra parse(std::string_view text) { return Parser(text).presentation(); }

std::string render(const LieAlgebra& g) {
  std::string s = "dim " + std::to_string(g.dim()) + "; ";
  if (!g.params().empty()) {
    s += "param ";
    for (std::size_t i = 0; i < g.params().size(); ++i) s += (i ? ", " : "") + g.params()[i];
    s += "; ";
  }
  s += "(";
  for (int k = 0; k < g.dim(); ++k) s += (k ? "," : "") + g.d(k).to_string();
  return s + ")";
}

Scalar parse_scalar(std::string_view text) {
  Value v = Parser(text).whole_expression();
  if (v.is_form) throw DegreeError("expected a scalar, got a form");
  return v.scalar;
}

KForm parse_form(std::string_view text, int dim) {
  Value v = Parser(text).whole_expression();
  if (!v.is_form) {
    if (!v.scalar.is_zero()) {
      KForm f(dim, 0);
      f.add_term(0, v.scalar);
      return f;
    }
    return KForm(dim, 0);
  }
  return Parser::redim(v.form, dim);
}

FrameVector parse_vector(std::string_view text, int dim) {
  Parser p(text);
  if (p.starts_tuple()) {
    auto items = p.whole_tuple();
    if (static_cast<int>(items.size()) != dim)
      throw DimensionMismatch("vector has " + std::to_string(items.size()) + " components, expected " +
                              std::to_string(dim));
    FrameVector v(dim);
    for (int i = 0; i < dim; ++i) {
      if (items[static_cast<std::size_t>(i)].is_form) throw DegreeError("vector component is not a scalar");
      v(i) = items[static_cast<std::size_t>(i)].scalar;
    }
    return v;
  }
  Value v = p.whole_expression();
  if (!v.is_form && v.scalar.is_zero()) return FrameVector::Constant(dim, Scalar(0));
  if (!v.is_form || v.form.degree() != 1) throw DegreeError("expected a combination of frame vectors e_i");
  return Parser::redim(v.form, dim).sharp();
}

std::string render_vector(const FrameVector& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + v(i).to_string();
  return s + ")";
}

}  // namespace geomwb
