#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "geomwb/reduction.hpp"
#include "geomwb/spin.hpp"

namespace geomwb {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kReportSchema = "geomwb-report/1";

struct CatalogReduction {
  ReductionDatum datum;
  ScalarMatrix expected_b;
  /// Catalog name of the algebraic quotient, when the level set is a subgroup.
  std::string quotient;
  std::string note;
};

struct CatalogEntry {
  std::string name;
  /// Presentation text in the notation of the parser.
  std::string source;
  LieAlgebra algebra;
  int n = 0;
  /// Suggested parameter values (not applied unless requested).
  ParamAssignment defaults;
  ScalarMatrix expected_q;
  std::optional<CatalogReduction> reduction;
  std::string provenance;
};

/// Directory holding catalog/*.lap and catalog/*.json: $GEOMWB_DATA, else the
/// build-time default.
std::string data_dir();

/// Sorted entry names.
std::vector<std::string> catalog_names();

/// Loads an entry; "heisenberg" with params {"n": k} resolves to
/// heisenberg{2k+1}. Other params are substituted into the presentation and
/// the expectations. Throws UnknownEntry.
CatalogEntry catalog_get(const std::string& name, const ParamAssignment& params = {});

struct ReportOptions {
  /// Defaults to (dim - 1) / 2.
  std::optional<int> n;
  std::optional<ScalarMatrix> expected_q;
  std::optional<ReductionDatum> reduction;
  std::optional<ScalarMatrix> expected_b;
  /// Adds timings_ms; off by default so reports are byte-stable.
  bool timings = false;
  /// Name recorded in the input section.
  std::string name;
};

struct Report {
  nlohmann::ordered_json json;
  /// 0 ok, 2 when Jacobi fails or an expectation is not met.
  int exit_code = 0;
  std::vector<std::string> mismatches;
};

/// 64-bit FNV-1a digest of the input text, as 16 hex digits.
std::string input_digest(const std::string& text);

Report run_report(const LieAlgebra& g, const std::string& input_text, const ReportOptions& options = {});

/// Report for a catalog entry checked against its stored expectations.
Report run_catalog_report(const CatalogEntry& entry, bool timings = false);

nlohmann::ordered_json matrix_json(const ScalarMatrix& m);

/// {"diag": [...]} or {"matrix": [[...]]} of scalar strings, optionally
/// wrapped as {"expected_q": ...}; params are substituted.
ScalarMatrix expected_matrix(const nlohmann::json& j, const ParamAssignment& params = {});

/// A 1-form; "0" gives the zero 1-form.
KForm parse_one_form(const std::string& text, int dim);

struct SuiteResult {
  /// {"schema", "version", "entries": [report, ...]} in name order.
  nlohmann::ordered_json json;
  int exit_code = 0;
};

/// Every catalog entry against its expectations.
SuiteResult run_catalog_suite(bool timings = false);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

/// Randomized and exhaustive property checks over the catalog.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed);

nlohmann::ordered_json properties_json(const std::vector<PropertyResult>& results);

}  // namespace geomwb
