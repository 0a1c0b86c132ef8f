#include "geomwb/workbench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "geomwb/errors.hpp"
#include "geomwb/notation.hpp"

namespace geomwb {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw UnknownEntry("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path catalog_dir() { return fs::path(data_dir()) / "catalog"; }

ScalarMatrix diagonal(const std::vector<Scalar>& d) {
  const auto m = static_cast<Eigen::Index>(d.size());
  ScalarMatrix out = ScalarMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) out(i, i) = d[static_cast<std::size_t>(i)];
  return out;
}

ScalarMatrix parse_expected(const nlohmann::json& j, const ParamAssignment& params) {
  auto scalar = [&](const nlohmann::json& s) { return substitute(parse_scalar(s.get<std::string>()), params); };
  if (j.contains("diag")) {
    std::vector<Scalar> d;
    for (const auto& s : j.at("diag")) d.push_back(scalar(s));
    return diagonal(d);
  }
  const auto& rows = j.at("matrix");
  const auto m = static_cast<Eigen::Index>(rows.size());
  ScalarMatrix out(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c) out(r, c) = scalar(rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c)));
  return out;
}

ParamAssignment parse_params(const nlohmann::json& j) {
  ParamAssignment out;
  for (const auto& [k, v] : j.items()) {
    const Scalar s = parse_scalar(v.is_string() ? v.get<std::string>() : v.dump());
    if (!s.is_constant()) throw SyntaxError("parameter value for " + k + " is not a number", 1, 1);
    out[k] = s.constant_value();
  }
  return out;
}

/// The printed formula Q(e_i, e_i) = (-1)^{n+1}, Q(xi, xi) = (-1)^n n.
ScalarMatrix heisenberg_q(int n) {
  std::vector<Scalar> d(static_cast<std::size_t>(2 * n), Scalar(n % 2 ? 1 : -1));
  d.push_back(Scalar(n % 2 ? -n : n));
  return diagonal(d);
}

CatalogEntry synthesized_heisenberg(int n) {
  CatalogEntry e;
  e.name = "heisenberg" + std::to_string(2 * n + 1);
  e.algebra = LieAlgebra::heisenberg(n);
  e.source = render(e.algebra);
  e.n = n;
  e.expected_q = heisenberg_q(n);
  e.provenance = "Heisenberg group with its standard contact structure; expected Q from the general formula.";
  if (n >= 2) {
    CatalogReduction r;
    r.datum.X = frame_basis(2 * n + 1, 2 * n - 2);
    r.datum.t = 1;
    r.datum.dt = KForm(2 * n + 1, 1);
    r.datum.subgroup = true;
    r.expected_b = heisenberg_q(n - 1);
    r.quotient = "heisenberg" + std::to_string(2 * n - 1);
    r.note = "The quotient is the Heisenberg group of dimension two less; B is its Q.";
    e.reduction = std::move(r);
  }
  return e;
}

ordered_json form_residuals(const ConditionReport& r) {
  ordered_json out = ordered_json::array();
  for (const auto& [name, form] : r.residuals) out.push_back({{"name", name}, {"residual", form.to_string()}});
  return out;
}

ordered_json condition_json(const ConditionReport& r) {
  return {{"ok", r.holds}, {"residuals", form_residuals(r)}};
}

ordered_json pattern_json(const QPattern& p) {
  ordered_json out = {{"kind", to_string(p.kind)}};
  if (p.kind != QPatternKind::Generic) {
    out["a"] = p.a.to_string();
    out["b"] = p.b.to_string();
  }
  return out;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const NotHorizontal*>(&e)) return "NotHorizontal";
  if (dynamic_cast<const DegenerateX*>(&e)) return "DegenerateX";
  if (dynamic_cast<const ConditionFails*>(&e)) return "ConditionFails";
  if (dynamic_cast<const UnsupportedDimension*>(&e)) return "UnsupportedDimension";
  if (dynamic_cast<const NotReducibleAlgebraically*>(&e)) return "NotReducibleAlgebraically";
  if (dynamic_cast<const NotASubalgebra*>(&e)) return "NotASubalgebra";
  if (dynamic_cast<const DimensionMismatch*>(&e)) return "DimensionMismatch";
  if (dynamic_cast<const DenominatorVanishes*>(&e)) return "DenominatorVanishes";
  return "Error";
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

KForm parse_one_form(const std::string& text, int dim) {
  const KForm f = parse_form(text, dim);
  if (f.is_zero()) return KForm(dim, 1);
  if (f.degree() != 1) throw DegreeError("expected a 1-form, got degree " + std::to_string(f.degree()));
  return f;
}

ScalarMatrix expected_matrix(const nlohmann::json& j, const ParamAssignment& params) {
  if (j.contains("expected_q")) return parse_expected(j.at("expected_q"), params);
  return parse_expected(j, params);
}

std::string data_dir() {
  if (const char* env = std::getenv("GEOMWB_DATA")) return env;
  return GEOMWB_DATA_DIR;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  if (fs::is_directory(catalog_dir()))
    for (const auto& f : fs::directory_iterator(catalog_dir()))
      if (f.path().extension() == ".json") names.push_back(f.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

CatalogEntry catalog_get(const std::string& requested, const ParamAssignment& params_in) {
  std::string name = requested;
  ParamAssignment params = params_in;
  if (name == "heisenberg") {
    auto it = params.find("n");
    if (it == params.end()) throw UnknownEntry("heisenberg needs the parameter n");
    const Rational k = it->second;
    if (k.get_den() != 1 || k < 1 || k > (kMaxDim - 1) / 2)
      throw UnknownEntry("heisenberg needs an integer n in 1.." + std::to_string((kMaxDim - 1) / 2));
    const int n = static_cast<int>(k.get_num().get_si());
    params.erase(it);
    name = "heisenberg" + std::to_string(2 * n + 1);
    if (!fs::exists(catalog_dir() / (name + ".json"))) {
      if (!params.empty()) throw UnknownEntry("heisenberg has no parameter " + params.begin()->first);
      return synthesized_heisenberg(n);
    }
  }
  const fs::path meta_path = catalog_dir() / (name + ".json");
  if (name.empty() || name.find('/') != std::string::npos || !fs::exists(meta_path))
    throw UnknownEntry("unknown catalog entry '" + requested + "'");

  const nlohmann::json meta = nlohmann::json::parse(read_file(meta_path));
  CatalogEntry e;
  e.name = name;
  e.source = read_file(catalog_dir() / meta.at("presentation").get<std::string>());
  e.algebra = parse(e.source);
  e.n = meta.at("n").get<int>();
  if (meta.contains("params")) e.defaults = parse_params(meta.at("params"));
  e.provenance = meta.value("provenance", "");

  for (const auto& [p, v] : params) {
    (void)v;
    if (std::find(e.algebra.params().begin(), e.algebra.params().end(), p) == e.algebra.params().end())
      throw UnknownEntry("entry '" + name + "' has no parameter " + p);
  }
  if (!params.empty()) {
    e.algebra = substitute(e.algebra, params);
    e.source = render(e.algebra);
  }
  e.expected_q = parse_expected(meta.at("expected_q"), params);

  if (meta.contains("reduction")) {
    const auto& r = meta.at("reduction");
    const int dim = e.algebra.dim();
    CatalogReduction red;
    red.datum.X = parse_vector(r.at("x").get<std::string>(), dim);
    red.datum.t = parse_scalar(r.value("t", "1"));
    red.datum.dt = parse_one_form(r.value("dt", "0"), dim);
    red.datum.subgroup = r.value("subgroup", false);
    red.expected_b = parse_expected(r.at("expected_b"), params);
    red.quotient = r.value("quotient", "");
    red.note = r.value("b_note", r.value("dt_note", ""));
    e.reduction = std::move(red);
  }
  return e;
}

std::string input_digest(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ordered_json matrix_json(const ScalarMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Report run_report(const LieAlgebra& g, const std::string& input_text, const ReportOptions& options) {
  Report rep;
  ordered_json& j = rep.json;
  ordered_json timings = ordered_json::object();
  Stopwatch clock;

  const int n = options.n.value_or((g.dim() - 1) / 2);
  if (g.dim() != 2 * n + 1)
    throw DimensionMismatch("dimension " + std::to_string(g.dim()) + " is not 2n+1 for n = " + std::to_string(n));

  j["schema"] = kReportSchema;
  j["version"] = kToolVersion;
  ordered_json input = {{"digest", input_digest(input_text)}, {"dim", g.dim()}, {"n", n}};
  if (!options.name.empty()) input["name"] = options.name;
  input["params"] = g.params();
  j["input"] = std::move(input);

  const auto residues = jacobi_residues(g);
  ordered_json jr = ordered_json::array();
  for (const auto& [k, form] : residues)
    jr.push_back({{"index", k + 1}, {"residual", form.to_string()}});
  const bool jacobi_ok = residues.empty();
  j["jacobi"] = {{"ok", jacobi_ok}, {"residuals", jr}};
  timings["jacobi"] = clock.lap();
  if (!jacobi_ok) rep.mismatches.push_back("jacobi");

  const SUStructureForms s = standard_forms(n);
  const ConditionReport contact = check_contact(g, s);
  j["contact"] = {{"ok", contact.holds},
                  {"residual", contact.residuals.empty() ? "0" : contact.residuals.front().second.to_string()}};
  j["hypo"] = condition_json(check_hypo(g, s));
  j["contact_hypo"] = condition_json(check_contact_hypo(g, s));
  timings["structures"] = clock.lap();

  std::optional<ScalarMatrix> q;
  if (jacobi_ok) {
    const QResult qr = extract_q(g, n);
    ordered_json qj = {{"status", to_string(qr.status)}};
    if (qr.status == QStatus::NoSolution) {
      qj["failing_row"] = qr.failing_row + 1;
      qj["matrix"] = nullptr;
      qj["pattern"] = nullptr;
    } else {
      qj["matrix"] = matrix_json(qr.q);
      qj["pattern"] = pattern_json(q_pattern(qr.q));
      if (qr.status == QStatus::Ok) q = qr.q;
    }
    j["q"] = std::move(qj);
  } else {
    j["q"] = {{"status", "skipped"}, {"matrix", nullptr}, {"pattern", nullptr}};
  }
  timings["q"] = clock.lap();

  std::optional<ScalarMatrix> b;
  if (options.reduction) {
    const ReductionDatum& d = *options.reduction;
    ordered_json rj;
    rj["x"] = render_vector(d.X);
    rj["t"] = d.t.to_string();
    rj["dt"] = d.dt.to_string();
    try {
      const ReductionCondition cond = check_reduction_condition(s, d);
      ordered_json cj = {{"holds", cond.holds}};
      if (cond.holds) {
        cj["lambda"] = cond.lambda.to_string();
        cj["mu"] = cond.mu.to_string();
      }
      rj["condition"] = std::move(cj);
      rj["level_transverse"] = level_tangent(s, d.X).transverse;
      if (!q) {
        rj["B"] = nullptr;
        rj["error"] = {{"kind", "NoQ"}, {"message", "Q is not available"}};
        rep.mismatches.push_back("reduction");
      } else if (!cond.holds) {
        rj["B"] = nullptr;
        rj["B_pre"] = matrix_json(assemble_b_pre(*q, d, s));
        rep.mismatches.push_back("reduction condition");
      } else {
        b = reduced_b(*q, d, s);
        rj["B"] = matrix_json(*b);
        rj["pattern"] = pattern_json(q_pattern(*b));
      }
      if (d.subgroup && b) {
        const AlgebraicReduction red = algebraic_reduce(g, d);
        const QResult qq = extract_q(red.quotient, n - 1);
        ordered_json aj = {{"quotient", render(red.quotient)}, {"q_status", to_string(qq.status)}};
        const bool agrees = qq.status == QStatus::Ok && qq.q == *b;
        aj["agrees_with_B"] = agrees;
        if (!agrees) rep.mismatches.push_back("algebraic quotient");
        rj["algebraic"] = std::move(aj);
      }
    } catch (const Error& e) {
      rj["B"] = nullptr;
      rj["error"] = {{"kind", error_kind(e)}, {"message", e.what()}};
      rep.mismatches.push_back("reduction");
    }
    j["reduction"] = std::move(rj);
  } else {
    j["reduction"] = nullptr;
  }
  timings["reduction"] = clock.lap();

  ordered_json ex = ordered_json::object();
  if (options.expected_q) {
    const bool match = q && *q == *options.expected_q;
    ex["q"] = {{"expected", matrix_json(*options.expected_q)}, {"match", match}};
    if (!match) rep.mismatches.push_back("expected Q");
  }
  if (options.expected_b) {
    const bool match = b && *b == *options.expected_b;
    ex["B"] = {{"expected", matrix_json(*options.expected_b)}, {"match", match}};
    if (!match) rep.mismatches.push_back("expected B");
  }
  j["expectations"] = std::move(ex);
  j["mismatches"] = rep.mismatches;
  rep.exit_code = rep.mismatches.empty() ? 0 : 2;
  j["exit_code"] = rep.exit_code;
  if (options.timings) j["timings_ms"] = std::move(timings);
  return rep;
}

Report run_catalog_report(const CatalogEntry& entry, bool timings) {
  ReportOptions o;
  o.n = entry.n;
  o.expected_q = entry.expected_q;
  if (entry.reduction) {
    o.reduction = entry.reduction->datum;
    o.expected_b = entry.reduction->expected_b;
  }
  o.timings = timings;
  o.name = entry.name;
  return run_report(entry.algebra, entry.source, o);
}

SuiteResult run_catalog_suite(bool timings) {
  SuiteResult out;
  out.json["schema"] = kReportSchema;
  out.json["version"] = kToolVersion;
  ordered_json entries = ordered_json::array();
  for (const auto& name : catalog_names()) {
    Report r = run_catalog_report(catalog_get(name), timings);
    if (r.exit_code != 0) out.exit_code = r.exit_code;
    entries.push_back(std::move(r.json));
  }
  out.json["entries"] = std::move(entries);
  out.json["exit_code"] = out.exit_code;
  return out;
}

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r_.cases;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }
  PropertyResult result() const { return r_; }

 private:
  PropertyResult r_;
};

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Spinor act_word(const std::vector<int>& gens, const Spinor& psi) {
  Spinor v = psi;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) v = generator_act(*it, v);
  return v;
}

bool jacobi_by_brackets(const LieAlgebra& g) {
  const int m = g.dim();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        const FrameVector x = frame_basis(m, i), y = frame_basis(m, j), z = frame_basis(m, k);
        const FrameVector s =
            g.bracket(g.bracket(x, y), z) + g.bracket(g.bracket(y, z), x) + g.bracket(g.bracket(z, x), y);
        if (!is_zero(s)) return false;
      }
  return true;
}

KForm random_two_form(std::mt19937_64& rng, int dim) {
  KForm f(dim, 2);
  const int terms = uniform(rng, 1, 3);
  for (int t = 0; t < terms; ++t) {
    const int i = uniform(rng, 0, dim - 2);
    const int k = uniform(rng, i + 1, dim - 1);
    const int idx[] = {i, k};
    f += KForm::monomial(dim, idx, Scalar(Rational(uniform(rng, -4, 4), uniform(rng, 1, 2))));
  }
  return f;
}

/// Cayley transform of a random rational skew matrix.
ScalarMatrix random_rotation(std::mt19937_64& rng, int dim) {
  ScalarMatrix a = ScalarMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int k = i + 1; k < dim; ++k)
      if (uniform(rng, 0, 3) == 0) {
        const Scalar v(Rational(uniform(rng, -2, 2), uniform(rng, 1, 3)));
        a(i, k) = v;
        a(k, i) = -v;
      }
  const ScalarMatrix id = ScalarMatrix::Identity(dim, dim);
  return (id - a) * *exact_inverse<Scalar>(id + a);
}

bool proportional(const FrameVector& v, const FrameVector& w) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    for (Eigen::Index k = 0; k < v.size(); ++k)
      if (!(v(i) * w(k) == v(k) * w(i))) return false;
  return true;
}

std::vector<std::pair<std::string, LieAlgebra>> catalog_algebras() {
  std::vector<std::pair<std::string, LieAlgebra>> out;
  for (const auto& name : catalog_names()) out.emplace_back(name, catalog_get(name).algebra);
  return out;
}

PropertyResult clifford_property() {
  Tally t("clifford");
  for (int n = 1; n <= 4; ++n) {
    const int dim = 2 * n + 1;
    for (int k = 0; k < (1 << n); ++k) {
      const Spinor psi = spinor_basis(n, k);
      for (int a = 0; a < dim; ++a)
        for (int b = 0; b < dim; ++b) {
          const Spinor lhs = act_word({a, b}, psi) + act_word({b, a}, psi);
          const Spinor rhs = psi * ComplexScalar(a == b ? -2 : 0);
          t.check(lhs == rhs, "e" + std::to_string(a + 1) + "e" + std::to_string(b + 1) + " at n=" + std::to_string(n));
        }
      Spinor vol = psi;
      for (int a = dim - 1; a >= 0; --a) vol = generator_act(a, vol);
      t.check(vol == psi * ComplexScalar::i_pow(n + 1), "volume element at n=" + std::to_string(n));
    }
  }
  return t.result();
}

PropertyResult jacobi_property(const std::vector<std::pair<std::string, LieAlgebra>>& catalog, std::mt19937_64& rng) {
  Tally t("jacobi_d2");
  for (const auto& [name, g] : catalog) t.check(jacobi_residues(g).empty() == jacobi_by_brackets(g), name);
  int broken = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const LieAlgebra& base = catalog[static_cast<std::size_t>(trial) % catalog.size()].second;
    std::vector<KForm> d = base.differentials();
    d[static_cast<std::size_t>(uniform(rng, 0, base.dim() - 1))] += random_two_form(rng, base.dim());
    const LieAlgebra g(base.dim(), d, base.params());
    const bool by_residue = jacobi_residues(g).empty();
    broken += !by_residue;
    t.check(by_residue == jacobi_by_brackets(g), "perturbation " + std::to_string(trial));
  }
  t.check(broken > 0 && broken < 200, "perturbations exercise both outcomes");
  return t.result();
}

PropertyResult lemma1_property(const std::vector<std::pair<std::string, LieAlgebra>>& catalog) {
  Tally t("nabla_structure_forms");
  for (const auto& [name, g] : catalog) {
    const int n = (g.dim() - 1) / 2;
    const QResult q = extract_q(g, n);
    if (q.status != QStatus::Ok) continue;
    const SUStructureForms s = standard_forms(n);
    const ConnectionData gamma = koszul(g);
    const ComplexScalar sign(n % 2 ? -1 : 1);
    const ComplexScalar i = ComplexScalar::i();
    for (int x = 0; x < g.dim(); ++x) {
      const FrameVector X = frame_basis(g.dim(), x);
      const FrameVector qx = q.q.col(x);
      const std::string where = name + " e" + std::to_string(x + 1);
      t.check(nabla_form(gamma, X, s.alpha) == sign * interior(qx, s.F), where + " alpha");
      t.check(nabla_form(gamma, X, s.F) == sign * wedge(s.alpha, KForm::flat(qx)), where + " F");
      const KForm rhs = -sign * i * wedge(s.alpha, interior(qx, s.Omega)) +
                        sign * i * ComplexScalar(q.q(x, g.dim() - 1)) * s.Omega;
      t.check(nabla_form(gamma, X, s.Omega) == rhs, where + " Omega");
    }
  }
  return t.result();
}

PropertyResult implications_property(const std::vector<std::pair<std::string, LieAlgebra>>& catalog,
                                     std::mt19937_64& rng) {
  Tally t("implications");
  for (const auto& [name, base] : catalog) {
    const int n = (base.dim() - 1) / 2;
    const SUStructureForms s = standard_forms(n);
    std::vector<LieAlgebra> frames = {base};
    if (base.params().empty())
      for (int r = 0; r < 2; ++r) frames.push_back(change_frame(base, random_rotation(rng, base.dim())));
    for (std::size_t f = 0; f < frames.size(); ++f) {
      const LieAlgebra& g = frames[f];
      const std::string where = name + " frame " + std::to_string(f);
      const bool hypo = check_hypo(g, s).holds;
      const bool contact = check_contact(g, s).holds;
      const bool ch = check_contact_hypo(g, s).holds;
      const bool gk = extract_q(g, n).status == QStatus::Ok;
      t.check(!gk || hypo, where + ": generalized Killing but not hypo");
      t.check(!(gk && contact) || ch, where + ": contact generalized Killing but not contact-hypo");
      t.check(!ch || hypo, where + ": contact-hypo but not hypo");
    }
  }
  return t.result();
}

PropertyResult lemma4_property() {
  Tally t("second_fundamental_form");
  for (int n = 2; n <= 4; ++n) {
    const LieAlgebra g = LieAlgebra::heisenberg(n);
    const SUStructureForms s = standard_forms(n);
    const FrameVector x = frame_basis(s.dim(), 2 * n - 2);
    const FrameVector nu = reeb_normal(s, x, 1);
    const ScalarMatrix frame = adapted_frame(s, x, 1);
    const ScalarMatrix q = extract_q(g, n).q;
    const ConnectionData gamma = koszul(g);
    const std::vector<FrameVector> sub = level_tangent(s, x).basis;
    const WeingartenData wd = subgroup_weingarten(g, sub, nu);
    const Scalar sign = n % 2 ? Scalar(-1) : Scalar(1);
    const std::string where = "G" + std::to_string(2 * n + 1);

    for (std::size_t k = 0; k < sub.size(); ++k)
      t.check((sub[k].transpose() * q * x)(0) == sign * s.alpha(wd.images[k]).re(), where + " automatic");
    t.check(weingarten(gamma, nu, x) == s.alpha.sharp() * (sign * (x.transpose() * q * x)(0)), where + " W(X)");
    for (int a : reduced_indices(n)) {
      const FrameVector y = frame.col(a);
      const FrameVector ay = oneill_a(gamma, frame, n, y);
      const KForm lhs = s.alpha * ComplexScalar(sign * (y.transpose() * q * nu)(0)) + KForm::flat(ay) +
                        interior(weingarten(gamma, nu, y), s.F);
      t.check(proportional(lhs.real_part().sharp(), nu) && lhs.imag_part().is_zero(), where + " R nu");
      t.check(is_zero(ay), where + " A vanishes");
    }
  }
  return t.result();
}

PropertyResult lemma3_property() {
  Tally t("reduced_compatibility");
  for (int m = 2; m <= 4; ++m) {
    const Spinor p = sigma0_project(spinor_basis(m, 0), m);
    const std::string where = "n=" + std::to_string(m);
    t.check(!is_zero(p), where + " projection vanishes");
    t.check(reduction_j(m, 2 * m).act(p) == p * ComplexScalar::i_pow(2 * m - 1), where + " Reeb");
    for (int k = 0; k < m - 1; ++k) {
      const CliffordElement pair = reduction_j(m, 2 * k) * reduction_j(m, 2 * k + 1);
      t.check(pair.act(p) == p * -ComplexScalar::i(), where + " pair " + std::to_string(k + 1));
    }
  }
  return t.result();
}

}  // namespace

std::vector<PropertyResult> run_property_suite(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto catalog = catalog_algebras();
  std::vector<PropertyResult> out;
  out.push_back(clifford_property());
  out.push_back(jacobi_property(catalog, rng));
  out.push_back(lemma1_property(catalog));
  out.push_back(implications_property(catalog, rng));
  out.push_back(lemma4_property());
  out.push_back(lemma3_property());
  return out;
}

ordered_json properties_json(const std::vector<PropertyResult>& results) {
  ordered_json out = ordered_json::array();
  for (const auto& r : results) {
    ordered_json j = {{"name", r.name}, {"ok", r.ok()}, {"cases", r.cases}, {"failures", r.failures}};
    if (!r.first_failure.empty()) j["first_failure"] = r.first_failure;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace geomwb
