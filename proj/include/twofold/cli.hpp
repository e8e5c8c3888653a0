#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twofold/numerics.hpp"

namespace twofold::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1.0";

enum ExitCode : int { Pass = 0, CheckFailure = 1, InputError = 2 };

/// Tolerance from TWOFOLD_TOL, or the library default. Throws ParseError.
double default_tol_from_env();

struct Report {
  std::vector<CheckResult> checks;
  Json steps = Json::array();

  bool pass() const;
};

Json to_json(const Report& r);
Json check_json(const CheckResult& c);
Json complex_json(cplx z);
Json row_json(const CVecX& v);
Json matrix_json(const CMatX& m);

/// Exact p/q for rationals with small denominators, 12 significant digits
/// otherwise.
std::string format_real(double x);
std::string format_complex(cplx z);
std::string format_matrix(const CMatX& m);

struct VerifyOptions {
  std::optional<std::string> filter;
  double tol = default_tolerance;
  int samples = 200;
  std::uint64_t seed = 20240601;
};

/// Names accepted by --filter.
const std::vector<std::string>& verify_groups();

/// Runs the identity suite. Throws ParseError for a filter that selects
/// nothing.
Report run_verify(const VerifyOptions& opt);

/// Parses and executes a scenario document. Throws ParseError on malformed
/// input and module errors on semantic failures.
Report run_scenario(const Json& doc, double tol);
Report run_scenario_file(const std::string& path, double tol);

/// Matrices printed by `spectra`. Throws UnknownKind.
std::string spectra(const std::string& kind, double q = 1.0, double E = 1.0);
const std::vector<std::string>& spectra_kinds();

/// Full command-line entry point; returns the process exit code.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace twofold::cli
