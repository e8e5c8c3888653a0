#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "twofold/cli.hpp"

namespace twofold::cli {

namespace {

int report_exit(const Report& rep) { return rep.pass() ? ExitCode::Pass : ExitCode::CheckFailure; }

void print_failures(const Report& rep, std::ostream& err) {
  for (const auto& c : rep.checks)
    if (!c.pass) err << "FAIL " << c.id << " [" << c.equation << "] residual " << c.residual << "\n";
}

}  // namespace

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pseudo-unitary twofold systems: identity verification, scenarios and spectra"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  std::optional<double> tolArg;
  std::string reportPath;
  auto* verify = app.add_subcommand("verify", "Run the identity suite");
  verify->add_option("--filter", vopt.filter, "Run one group only")->check(CLI::IsMember(verify_groups()));
  verify->add_option("--tol", tolArg, "Pass threshold for residuals");
  verify->add_option("--samples", vopt.samples, "Random samples per property")->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed, "Sampler seed");
  verify->add_option("--report", reportPath, "Also write the JSON report here");

  auto* scenario = app.add_subcommand("scenario", "Scenario runner");
  scenario->require_subcommand(1);
  std::string scenarioFile, outFile;
  auto* run = scenario->add_subcommand("run", "Execute a scenario file");
  run->add_option("file", scenarioFile, "Scenario JSON")->required();
  run->add_option("--out", outFile, "Report destination")->required();
  run->add_option("--tol", tolArg, "Pass threshold for residuals");

  std::string kind;
  double q = 1.0, E = 1.0;
  auto* spec = app.add_subcommand("spectra", "Print canonical matrices");
  spec->add_option("kind", kind, "One of: spin polarization charge conjugation energy virtual M G g delta measurement mixed")
      ->required();
  spec->add_option("--q", q, "Charge for 'charge'");
  spec->add_option("--E", E, "Energy for 'energy'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::Pass : ExitCode::InputError;
  }

  try {
    const double tol = tolArg ? *tolArg : default_tol_from_env();
    if (!(tol > 0.0)) throw Error(ErrorKind::ParseError, "--tol must be positive");
    if (*verify) {
      vopt.tol = tol;
      const Report rep = run_verify(vopt);
      int passed = 0;
      for (const auto& c : rep.checks) passed += c.pass ? 1 : 0;
      out << passed << "/" << rep.checks.size() << " checks passed (tol " << tol << ")\n";
      print_failures(rep, err);
      if (!reportPath.empty()) {
        std::ofstream f(reportPath);
        if (!f) throw Error(ErrorKind::ParseError, "cannot write " + reportPath);
        f << to_json(rep).dump(2) << "\n";
      }
      return report_exit(rep);
    }
    if (*scenario) {
      const Report rep = run_scenario_file(scenarioFile, tol);
      std::ofstream f(outFile);
      if (!f) throw Error(ErrorKind::ParseError, "cannot write " + outFile);
      f << to_json(rep).dump(2) << "\n";
      print_failures(rep, err);
      out << "wrote " << outFile << " (" << rep.checks.size() << " checks, " << (rep.pass() ? "pass" : "FAIL")
          << ")\n";
      return report_exit(rep);
    }
    out << spectra(kind, q, E);
    return ExitCode::Pass;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::InputError;
  }
}

}  // namespace twofold::cli
