#include "doctest.h"
#include "catalog_support.hpp"
#include "geomwb/errors.hpp"
#include "geomwb/workbench.hpp"

using namespace geomwb;

namespace {

Scalar q(int num, int den = 1) { return Scalar(Rational(num, den)); }

const char* kBadJacobi = "dim 3; (0, e23, e12)";

}  // namespace

TEST_CASE("catalog lookup") {
  const auto names = catalog_names();
  CHECK(names.size() == catalog_files().size());
  for (const auto& n : catalog_files()) CHECK(std::find(names.begin(), names.end(), n) != names.end());

  const CatalogEntry h = catalog_get("heisenberg", {{"n", 2}});
  CHECK(h.name == "heisenberg5");
  CHECK(h.expected_q == diag({-1, -1, -1, -1, 2}));

  const CatalogEntry su = catalog_get("su2xH");
  CHECK(su.expected_q == diag({2, 0, 0, 2, 0, 2, 0}));
  REQUIRE(su.reduction);
  CHECK(su.reduction->datum.X == frame_basis(7, 1) * Scalar(-1));
  CHECK(su.reduction->datum.t == Scalar(1));
  CHECK(su.reduction->datum.dt.is_zero());
  CHECK(su.reduction->datum.dt.degree() == 1);
  CHECK_FALSE(su.reduction->datum.subgroup);
  CHECK(su.reduction->expected_b == diag({0, -2, 0, -2, 0}));

  const CatalogEntry c6 = catalog_get("case6");
  CHECK(c6.expected_q == diag({q(13, 16), q(19, 16), q(19, 16), q(13, 16), q(19, 16), q(13, 16), q(-57, 16)}));

  CHECK_THROWS_AS(catalog_get("nope"), UnknownEntry);
  CHECK_THROWS_AS(catalog_get("../catalog/su2xH"), UnknownEntry);
  CHECK_THROWS_AS(catalog_get("heisenberg"), UnknownEntry);
  CHECK_THROWS_AS(catalog_get("heisenberg", {{"n", 5}}), UnknownEntry);
  CHECK_THROWS_AS(catalog_get("su2xH", {{"a", 1}}), UnknownEntry);
}

TEST_CASE("catalog parameters are symbolic unless assigned") {
  const CatalogEntry sym = catalog_get("case4minus");
  CHECK(sym.algebra.params() == std::vector<std::string>{"a"});
  CHECK(sym.defaults.at("a") == 1);
  const Scalar a = Scalar::param("a");
  CHECK(sym.expected_q(0, 0) == Scalar(1) - a * a);

  const CatalogEntry one = catalog_get("case4minus", {{"a", 1}});
  CHECK(one.algebra.params().empty());
  CHECK(one.expected_q == diag({0, 2, 1, 1, 1, 1, -4}));
  CHECK(parse(one.source) == one.algebra);
}

TEST_CASE("every catalog entry reproduces its expectations") {
  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    const Report r = run_catalog_report(catalog_get(name));
    CHECK(r.exit_code == 0);
    CHECK(r.mismatches.empty());
    CHECK(r.json["jacobi"]["ok"] == true);
    CHECK(r.json["expectations"]["q"]["match"] == true);
  }
  const Report g9 = run_catalog_report(catalog_get("heisenberg", {{"n", 4}}));
  CHECK(g9.exit_code == 0);
  CHECK(g9.json["reduction"]["algebraic"]["agrees_with_B"] == true);
}

TEST_CASE("report on an instantiated family and on a heisenberg group") {
  const Report r = run_catalog_report(catalog_get("case4minus", {{"a", 1}}));
  CHECK(r.exit_code == 0);
  CHECK(r.json["q"]["matrix"][0][0] == "0");
  CHECK(r.json["q"]["matrix"][1][1] == "2");
  CHECK(r.json["q"]["matrix"][6][6] == "-4");

  const Report h = run_report(LieAlgebra::heisenberg(3), "heisenberg n=3", {});
  CHECK(h.exit_code == 0);
  CHECK(h.json["contact"]["ok"] == true);
  CHECK(h.json["hypo"]["ok"] == true);
  CHECK(h.json["contact_hypo"]["ok"] == true);
  CHECK(h.json["q"]["pattern"]["kind"] == "alpha_einstein_sasaki");
}

TEST_CASE("Jacobi failure is recorded with exit code 2") {
  const Report r = run_report(parse(kBadJacobi), kBadJacobi);
  CHECK(r.exit_code == 2);
  CHECK(r.json["jacobi"]["ok"] == false);
  REQUIRE(r.json["jacobi"]["residuals"].size() == 1);
  CHECK(r.json["jacobi"]["residuals"][0]["index"] == 3);
  CHECK(r.json["jacobi"]["residuals"][0]["residual"] == "-e123");
  CHECK(r.json["q"]["status"] == "skipped");
}

TEST_CASE("mismatches and reduction errors set the exit code") {
  const CatalogEntry g5 = catalog_get("heisenberg5");
  ReportOptions o;
  o.expected_q = diag({1, 1, 1, 1, -2});
  const Report wrong = run_report(g5.algebra, g5.source, o);
  CHECK(wrong.exit_code == 2);
  CHECK(wrong.json["expectations"]["q"]["match"] == false);

  const CatalogEntry su = catalog_get("su2xH");
  ReportOptions vertical;
  ReductionDatum d = su.reduction->datum;
  d.X = frame_basis(7, 6);
  vertical.reduction = d;
  const Report bad = run_report(su.algebra, su.source, vertical);
  CHECK(bad.exit_code == 2);
  CHECK(bad.json["reduction"]["error"]["kind"] == "NotHorizontal");

  ReportOptions cond;
  d = su.reduction->datum;
  d.dt = KForm::coframe(7, 2);
  cond.reduction = d;
  const Report fails = run_report(su.algebra, su.source, cond);
  CHECK(fails.json["reduction"]["condition"]["holds"] == false);
  CHECK(fails.json["reduction"]["B"].is_null());
  CHECK(fails.exit_code == 2);

  CHECK_THROWS_AS(run_report(g5.algebra, g5.source, ReportOptions{.n = 3}), DimensionMismatch);
}

TEST_CASE("reports are deterministic; timings are opt-in") {
  for (const auto& name : catalog_names()) {
    const CatalogEntry e = catalog_get(name);
    CHECK(run_catalog_report(e).json.dump() == run_catalog_report(e).json.dump());
    CHECK_FALSE(run_catalog_report(e).json.contains("timings_ms"));
  }
  CHECK(run_catalog_report(catalog_get("su2xH"), true).json.contains("timings_ms"));
  CHECK(run_catalog_suite().json.dump() == run_catalog_suite().json.dump());
}

TEST_CASE("input digest is 64-bit FNV-1a") {
  CHECK(input_digest("") == "cbf29ce484222325");
  CHECK(input_digest("a") == "af63dc4c8601ec8c");
  CHECK(input_digest("foobar") == "85944171f73967e8");
}

TEST_CASE("expectation files and one-forms") {
  const nlohmann::json j = nlohmann::json::parse(R"({"diag": ["1-a^2", "2"]})");
  CHECK(expected_matrix(j, {{"a", 2}}) == diag({-3, 2}));
  const nlohmann::json wrapped = nlohmann::json::parse(R"({"expected_q": {"matrix": [["0", "1/2"], ["1/2", "0"]]}})");
  const ScalarMatrix m = expected_matrix(wrapped);
  CHECK(m(0, 1) == q(1, 2));
  CHECK(m(0, 0).is_zero());

  const KForm z = parse_one_form("0", 5);
  CHECK(z.is_zero());
  CHECK(z.degree() == 1);
  CHECK(parse_one_form("2*e3", 5) == KForm::coframe(5, 2) * ComplexScalar(2));
  CHECK_THROWS_AS(parse_one_form("e12", 5), DegreeError);
}

TEST_CASE("property suite") {
  const auto a = run_property_suite(test_seed());
  REQUIRE(a.size() == 6);
  for (const auto& r : a) {
    CAPTURE(r.name);
    CAPTURE(r.first_failure);
    CHECK(r.ok());
  }
  CHECK(properties_json(a).dump() == properties_json(run_property_suite(test_seed())).dump());
}
