#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "geomwb/errors.hpp"
#include "geomwb/ideals.hpp"
#include "geomwb/workbench.hpp"

using namespace geomwb;

namespace {

// Pinned budgets.
constexpr double kQSecondsEach = 10.0;
constexpr double kClaimsSecondsTotal = 300.0;
constexpr std::uint64_t kSeed = 20240607;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// Exact Q against the stored expectation, within the time budget.
Outcome q_matches(const std::vector<std::string>& names) {
  Outcome o{true, ""};
  for (const auto& name : names) {
    const CatalogEntry e = catalog_get(name);
    const auto t0 = std::chrono::steady_clock::now();
    const QResult q = extract_q(e.algebra, e.n);
    const double s = seconds_since(t0);
    const bool ok = q.status == QStatus::Ok && q.q == e.expected_q && s < kQSecondsEach;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    o.detail += (o.detail.empty() ? "" : ", ") + name + (ok ? " " : " MISMATCH ") + buf;
    o.pass = o.pass && ok;
  }
  return o;
}

Outcome criterion_reduction() {
  const CatalogEntry e = catalog_get("su2xH");
  const ScalarMatrix q = extract_q(e.algebra, e.n).q;
  const ScalarMatrix b = reduced_b(q, e.reduction->datum, standard_forms(e.n));
  return {b == e.reduction->expected_b, "su2xH X = -e_2, t = 1, dt = 0"};
}

Outcome criterion_cross_oracle() {
  Outcome o{true, ""};
  for (const char* name : {"heisenberg5", "heisenberg7"}) {
    const CatalogEntry e = catalog_get(name);
    const ReductionDatum& d = e.reduction->datum;
    const AlgebraicReduction red = algebraic_reduce(e.algebra, d);
    const QResult direct = extract_q(red.quotient, e.n - 1);
    const ScalarMatrix b = reduced_b(extract_q(e.algebra, e.n).q, d, standard_forms(e.n));
    const bool ok = direct.status == QStatus::Ok && direct.q == b;
    o.detail += (o.detail.empty() ? "" : ", ") + std::string(name) + (ok ? " agree" : " DISAGREE");
    o.pass = o.pass && ok;
  }
  return o;
}

Outcome criterion_ideals() {
  MembershipOptions opt;
  opt.strategy = MembershipStrategy::Substitution;
  opt.limits.max_seconds = kClaimsSecondsTotal;
  const auto t0 = std::chrono::steady_clock::now();
  const MembershipReport r = verify_membership_claims(opt);
  const double s = seconds_since(t0);
  bool ok = r.claims.size() == 3 && r.negative_control_run && !r.negative_control_member && s < kClaimsSecondsTotal;
  std::string detail;
  for (const auto& c : r.claims) {
    ok = ok && c.holds;
    detail += "(" + std::to_string(c.claim) + ") " + (c.holds ? "true" : "false") + " ";
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "negative control %s, %.2fs", r.negative_control_member ? "member" : "not a member", s);
  return {ok, detail + buf};
}

Outcome criterion_properties() {
  const auto results = run_property_suite(kSeed);
  Outcome o{true, ""};
  for (const auto& r : results) {
    o.pass = o.pass && r.ok();
    o.detail += (o.detail.empty() ? "" : ", ") + r.name + (r.ok() ? " " : " FAILED ") + std::to_string(r.cases);
  }
  return o;
}

std::string full_suite_bytes() {
  const SuiteResult s = run_catalog_suite(false);
  nlohmann::ordered_json j = s.json;
  j["properties"] = properties_json(run_property_suite(kSeed));
  return j.dump(2);
}

Outcome criterion_determinism() {
  const std::string a = full_suite_bytes();
  const std::string b = full_suite_bytes();
  return {a == b && !a.empty(), std::to_string(a.size()) + " bytes, digest " + input_digest(a)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"Q reproduction, solvable examples",
       [] { return q_matches({"abelian", "case4plus", "case4minus", "case5", "case6"}); }},
      {"Q reproduction, Heisenberg and SU(2) x H",
       [] { return q_matches({"heisenberg3", "heisenberg5", "heisenberg7", "su2xH"}); }},
      {"reduced B on SU(2) x H", criterion_reduction},
      {"reduced B equals Q of the algebraic quotient", criterion_cross_oracle},
      {"ideal membership claims", criterion_ideals},
      {"property suites", criterion_properties},
      {"determinism of full-suite JSON", criterion_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].name << ": " << o.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
