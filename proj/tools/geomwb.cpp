#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "geomwb/errors.hpp"
#include "geomwb/ideals.hpp"
#include "geomwb/notation.hpp"
#include "geomwb/workbench.hpp"

using namespace geomwb;
using nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kCheckFailed = 2, kResource = 3 };

struct Input {
  LieAlgebra g;
  std::string text;
  std::string name;
  std::optional<CatalogEntry> entry;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnknownEntry("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParamAssignment parse_assignments(const std::vector<std::string>& items) {
  ParamAssignment out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw SyntaxError("expected name=value in '" + item + "'", 1, 1);
    const Scalar v = parse_scalar(item.substr(eq + 1));
    if (!v.is_constant()) throw SyntaxError("value of " + item.substr(0, eq) + " is not a number", 1, 1);
    out[item.substr(0, eq)] = v.constant_value();
  }
  return out;
}

/// A .lap path, or else a catalog name.
Input load_input(const std::string& source, const ParamAssignment& params) {
  Input in;
  if (std::filesystem::is_regular_file(source)) {
    in.text = slurp(source);
    in.g = parse(in.text);
    in.name = std::filesystem::path(source).filename().string();
    if (!params.empty()) {
      for (const auto& [p, v] : params) {
        if (std::find(in.g.params().begin(), in.g.params().end(), p) == in.g.params().end())
          throw UnknownEntry(source + " has no parameter " + p);
      }
      in.g = substitute(in.g, params);
      in.text = render(in.g);
    }
    return in;
  }
  in.entry = catalog_get(source, params);
  in.g = in.entry->algebra;
  in.text = in.entry->source;
  in.name = in.entry->name;
  return in;
}

std::string matrix_text(const ordered_json& m) {
  if (m.is_null()) return "-";
  bool diagonal = true;
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      if (r != c && m[r][c] != "0") diagonal = false;
  std::string out;
  if (diagonal) {
    out = "diag(";
    for (std::size_t r = 0; r < m.size(); ++r) out += (r ? ", " : "") + m[r][r].get<std::string>();
    return out + ")";
  }
  for (std::size_t r = 0; r < m.size(); ++r) {
    out += r ? "\n    [" : "[";
    for (std::size_t c = 0; c < m.size(); ++c) out += (c ? ", " : "") + m[r][c].get<std::string>();
    out += "]";
  }
  return out;
}

std::string verdict(const ordered_json& c) { return c.at("ok").get<bool>() ? "ok" : "no"; }

void print_residuals(std::ostream& os, const ordered_json& c) {
  for (const auto& r : c.at("residuals")) os << "    " << r.at("name").get<std::string>() << " = " << r.at("residual").get<std::string>() << "\n";
}

void print_report(std::ostream& os, const ordered_json& j) {
  const auto& in = j.at("input");
  os << (in.contains("name") ? in.at("name").get<std::string>() : std::string("input")) << " (dim "
     << in.at("dim") << ", n = " << in.at("n") << ", digest " << in.at("digest").get<std::string>() << ")\n";
  const auto& jac = j.at("jacobi");
  os << "  jacobi: " << (jac.at("ok").get<bool>() ? "ok" : "FAILED") << "\n";
  for (const auto& r : jac.at("residuals"))
    os << "    d(de^" << r.at("index") << ") = " << r.at("residual").get<std::string>() << "\n";
  os << "  contact: " << verdict(j.at("contact")) << "\n";
  os << "  hypo: " << verdict(j.at("hypo")) << "\n";
  if (!j.at("hypo").at("ok").get<bool>()) print_residuals(os, j.at("hypo"));
  os << "  contact-hypo: " << verdict(j.at("contact_hypo")) << "\n";
  const auto& q = j.at("q");
  os << "  Q: " << q.at("status").get<std::string>();
  if (!q.at("matrix").is_null()) os << " " << matrix_text(q.at("matrix"));
  if (q.contains("failing_row")) os << " (no solution in direction e_" << q.at("failing_row") << ")";
  os << "\n";
  if (!q.at("pattern").is_null()) {
    const auto& p = q.at("pattern");
    os << "  pattern: " << p.at("kind").get<std::string>();
    if (p.contains("a")) os << " (a = " << p.at("a").get<std::string>() << ", b = " << p.at("b").get<std::string>() << ")";
    os << "\n";
  }
  if (!j.at("reduction").is_null()) {
    const auto& r = j.at("reduction");
    os << "  reduction X = " << r.at("x").get<std::string>() << ", t = " << r.at("t").get<std::string>()
       << ", dt = " << r.at("dt").get<std::string>() << "\n";
    if (r.contains("condition")) os << "    condition: " << (r.at("condition").at("holds").get<bool>() ? "holds" : "fails") << "\n";
    if (r.contains("error")) os << "    error: " << r.at("error").at("kind").get<std::string>() << ": " << r.at("error").at("message").get<std::string>() << "\n";
    os << "    B: " << matrix_text(r.at("B")) << "\n";
    if (r.contains("algebraic"))
      os << "    quotient: " << r.at("algebraic").at("quotient").get<std::string>()
         << (r.at("algebraic").at("agrees_with_B").get<bool>() ? " (its Q equals B)" : " (its Q differs from B)") << "\n";
  }
  for (const auto& [what, e] : j.at("expectations").items())
    os << "  expected " << what << ": " << (e.at("match").get<bool>() ? "match" : "MISMATCH") << "\n";
  if (j.contains("timings_ms"))
    for (const auto& [stage, ms] : j.at("timings_ms").items()) os << "  time " << stage << ": " << ms.get<double>() << " ms\n";
  const auto& mm = j.at("mismatches");
  if (mm.empty()) {
    os << "  result: ok\n";
  } else {
    os << "  result: FAILED (";
    for (std::size_t i = 0; i < mm.size(); ++i) os << (i ? ", " : "") << mm[i].get<std::string>();
    os << ")\n";
  }
}

void emit(const ordered_json& j, bool json, void (*text)(std::ostream&, const ordered_json&)) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    text(std::cout, j);
}

std::string order_name(MonomialOrder o) { return o == MonomialOrder::Lex ? "lex" : "grevlex"; }

ordered_json membership_json(const MembershipReport& r, const MembershipOptions& o) {
  ordered_json claims = ordered_json::array();
  for (const auto& c : r.claims)
    claims.push_back({{"claim", c.claim},
                      {"statement", c.statement},
                      {"strategy", c.strategy},
                      {"holds", c.holds},
                      {"basis_size", c.basis_size},
                      {"pairs_reduced", c.stats.pairs_reduced},
                      {"max_degree", c.stats.max_degree}});
  ordered_json out = {{"schema", kReportSchema}, {"version", kToolVersion}, {"order", order_name(o.order)}, {"claims", claims}};
  if (r.negative_control_run) out["negative_control"] = {{"statement", "B in J + (A, C)"}, {"member", r.negative_control_member}};
  else out["negative_control"] = nullptr;
  out["all_hold"] = r.all_hold();
  return out;
}

void print_membership(std::ostream& os, const ordered_json& j) {
  for (const auto& c : j.at("claims"))
    os << "claim " << c.at("claim") << ": " << c.at("statement").get<std::string>() << " -> "
       << (c.at("holds").get<bool>() ? "holds" : "FAILS") << " [" << c.at("strategy").get<std::string>()
       << ", " << j.at("order").get<std::string>() << ", basis " << c.at("basis_size") << "]\n";
  if (!j.at("negative_control").is_null())
    os << "negative control: " << j.at("negative_control").at("statement").get<std::string>() << " -> "
       << (j.at("negative_control").at("member").get<bool>() ? "member (UNEXPECTED)" : "not a member") << "\n";
}

void print_properties(std::ostream& os, const ordered_json& j) {
  for (const auto& p : j.at("properties")) {
    os << (p.at("ok").get<bool>() ? "ok   " : "FAIL ") << p.at("name").get<std::string>() << " (" << p.at("cases")
       << " cases";
    if (p.at("failures").get<std::size_t>() > 0)
      os << ", " << p.at("failures") << " failed; first: " << p.at("first_failure").get<std::string>();
    os << ")\n";
  }
}

void print_entry(std::ostream& os, const ordered_json& j) {
  os << j.at("name").get<std::string>() << ": " << j.at("provenance").get<std::string>() << "\n";
  os << "  presentation: " << j.at("presentation").get<std::string>() << "\n";
  os << "  n = " << j.at("n") << "\n";
  if (!j.at("defaults").empty()) {
    os << "  suggested parameters:";
    for (const auto& [k, v] : j.at("defaults").items()) os << " " << k << "=" << v.get<std::string>();
    os << "\n";
  }
  os << "  expected Q: " << matrix_text(j.at("expected_q")) << "\n";
  if (!j.at("reduction").is_null()) {
    const auto& r = j.at("reduction");
    os << "  reduction X = " << r.at("x").get<std::string>() << ", t = " << r.at("t").get<std::string>()
       << ", dt = " << r.at("dt").get<std::string>() << (r.at("subgroup").get<bool>() ? ", subgroup" : "") << "\n";
    os << "  expected B: " << matrix_text(r.at("expected_b")) << "\n";
  }
}

ordered_json entry_json(const CatalogEntry& e) {
  ordered_json defaults = ordered_json::object();
  for (const auto& [k, v] : e.defaults) defaults[k] = v.get_str();
  ordered_json j = {{"name", e.name},         {"provenance", e.provenance}, {"presentation", render(e.algebra)},
                    {"n", e.n},               {"defaults", defaults},       {"expected_q", matrix_json(e.expected_q)}};
  if (e.reduction)
    j["reduction"] = {{"x", render_vector(e.reduction->datum.X)},
                      {"t", e.reduction->datum.t.to_string()},
                      {"dt", e.reduction->datum.dt.to_string()},
                      {"subgroup", e.reduction->datum.subgroup},
                      {"expected_b", matrix_json(e.reduction->expected_b)},
                      {"quotient", e.reduction->quotient}};
  else
    j["reduction"] = nullptr;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of spinor, SU(n)-structure, reduction and ideal computations on Lie algebras"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false, timings = false;
  std::uint64_t seed = 20240607;
  std::vector<std::string> param_items;
  app.add_flag("--json", json, "Machine-readable output");
  app.add_flag("--timings", timings, "Include stage timings in reports");
  app.add_option("--seed", seed, "Seed for randomized property suites");

  std::string input;
  std::optional<int> n;
  std::string expect_file, expect_b_file;

  auto* check = app.add_subcommand("check", "Jacobi identity and contact/hypo predicates");
  auto* q = app.add_subcommand("q", "Extract Q from the generalized Killing condition on u_0");
  auto* reduce = app.add_subcommand("reduce", "Contact reduction tensor B");
  for (auto* sub : {check, q, reduce}) {
    sub->add_option("input", input, "A .lap file or a catalog name")->required();
    sub->add_option("--n", n, "Structure rank n (dim = 2n+1)");
    sub->add_option("--param", param_items, "Parameter value, name=value")->delimiter(',');
  }
  q->add_option("--expect", expect_file, "JSON file with the expected Q ({\"diag\": [...]})");

  std::string x_text, t_text = "1", dt_text = "0";
  bool subgroup = false;
  reduce->add_option("--x", x_text, "Horizontal vector X, e.g. \"-e_2\"");
  reduce->add_option("--t", t_text, "t = |X| at the point");
  reduce->add_option("--dt", dt_text, "The 1-form dt at the point");
  reduce->add_flag("--subgroup", subgroup, "The zero level set is a subgroup; also reduce algebraically");
  reduce->add_option("--expect", expect_b_file, "JSON file with the expected B");

  auto* classify = app.add_subcommand("classify", "Ideal-membership claims for the nonexistence lemma");
  std::vector<int> claims;
  bool direct = false;
  std::string order = "grevlex";
  double max_seconds = 900;
  classify->add_option("--claim", claims, "Claim to verify (1, 2 or 3); default all and the negative control")
      ->check(CLI::Range(1, 3));
  classify->add_flag("--direct", direct, "Compute in the full ring instead of substituting first");
  classify->add_option("--order", order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  classify->add_option("--max-seconds", max_seconds, "Time budget per Groebner basis");

  auto* catalog = app.add_subcommand("catalog", "List catalog entries, show one, or verify all");
  std::string entry_name;
  bool verify = false, all = false;
  catalog->add_option("name", entry_name, "Entry name (heisenberg takes --param n=k)");
  catalog->add_option("--param", param_items, "Parameter value, name=value")->delimiter(',');
  catalog->add_flag("--verify", verify, "Run the entry's report against its expectations");
  catalog->add_flag("--all", all, "Verify every entry, reports merged in name order");

  auto* props = app.add_subcommand("props", "Run the property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const ParamAssignment params = parse_assignments(param_items);

    if (check->parsed() || q->parsed() || reduce->parsed()) {
      Input in = load_input(input, params);
      ReportOptions o;
      o.timings = timings;
      o.name = in.name;
      o.n = n;
      if (in.entry) {
        if (!n) o.n = in.entry->n;
        if (!check->parsed()) o.expected_q = in.entry->expected_q;
      }
      if (!expect_file.empty()) o.expected_q = expected_matrix(nlohmann::json::parse(slurp(expect_file)), params);
      if (reduce->parsed()) {
        const int dim = in.g.dim();
        if (!x_text.empty()) {
          ReductionDatum d;
          d.X = parse_vector(x_text, dim);
          d.t = parse_scalar(t_text);
          d.dt = parse_one_form(dt_text, dim);
          d.subgroup = subgroup;
          o.reduction = d;
          o.expected_q.reset();
        } else if (in.entry && in.entry->reduction) {
          o.reduction = in.entry->reduction->datum;
          o.expected_b = in.entry->reduction->expected_b;
        } else {
          std::cerr << "error: reduce needs --x (no catalog datum for " << in.name << ")\n";
          return kUsage;
        }
        if (!expect_b_file.empty()) o.expected_b = expected_matrix(nlohmann::json::parse(slurp(expect_b_file)), params);
      }
      Report r = run_report(in.g, in.text, o);
      int code = r.exit_code;
      if (q->parsed() && r.json.at("q").at("status") != to_string(QStatus::Ok)) code = kCheckFailed;
      emit(r.json, json, print_report);
      return code;
    }

    if (classify->parsed()) {
      MembershipOptions o;
      o.strategy = direct ? MembershipStrategy::Direct : MembershipStrategy::Substitution;
      o.order = order == "lex" ? MonomialOrder::Lex : MonomialOrder::Grevlex;
      o.limits.max_seconds = max_seconds;
      o.claims = claims;
      const MembershipReport r = verify_membership_claims(o);
      emit(membership_json(r, o), json, print_membership);
      return r.all_hold() ? kOk : kCheckFailed;
    }

    if (catalog->parsed()) {
      if (all) {
        const SuiteResult s = run_catalog_suite(timings);
        if (json) {
          std::cout << s.json.dump(2) << "\n";
        } else {
          for (const auto& e : s.json.at("entries")) print_report(std::cout, e);
        }
        return s.exit_code;
      }
      if (entry_name.empty()) {
        const auto names = catalog_names();
        if (json) {
          std::cout << ordered_json(names).dump(2) << "\n";
        } else {
          for (const auto& nm : names) std::cout << nm << "\n";
        }
        return kOk;
      }
      const CatalogEntry e = catalog_get(entry_name, params);
      if (verify) {
        Report r = run_catalog_report(e, timings);
        emit(r.json, json, print_report);
        return r.exit_code;
      }
      emit(entry_json(e), json, print_entry);
      return kOk;
    }

    if (props->parsed()) {
      const auto results = run_property_suite(seed);
      const ordered_json j = {{"schema", kReportSchema}, {"version", kToolVersion}, {"seed", seed},
                              {"properties", properties_json(results)}};
      emit(j, json, print_properties);
      for (const auto& r : results)
        if (!r.ok()) return kCheckFailed;
      return kOk;
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const NotALieAlgebra& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
