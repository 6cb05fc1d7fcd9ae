// ism: command-line front end.
//   ism run <config> [--output DIR]
//   ism scan-bifurcation --min A --max B --steps N [--output DIR]
//   ism check-expansion --kind space|line|line_rank --eps-list 0.2,0.1,...
//   ism verify <summary.json>
// Exit codes: 0 success, 1 I/O or usage, 2 config error, 3 numerical failure.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "ism/config.hpp"
#include "ism/csv.hpp"
#include "ism/error.hpp"
#include "ism/meanfield.hpp"
#include "ism/mono/expansion.hpp"
#include "ism/scenario.hpp"
#include "ism/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kIo = 1;
constexpr int kConfig = 2;
constexpr int kNumerical = 3;

int cmd_run(const std::string& path, const std::string& output) {
  auto cfg = ism::load_config(path);
  if (!output.empty()) cfg.output.directory = output;
  const auto report = ism::run_scenario(cfg);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& f : report.files) std::cout << "wrote " << f << "\n";
  if (!report.verdict.empty()) std::cout << "verdict: " << report.verdict << "\n";
  return kOk;
}

int cmd_scan(double lo, double hi, std::size_t steps, const std::string& output) {
  std::filesystem::create_directories(output);
  const auto path = (std::filesystem::path(output) / "bifurcation.csv").string();
  const double crit = ism::write_bifurcation_csv(path, lo, hi, steps);
  std::cout << "wrote " << path << "\n";
  if (std::isnan(crit))
    std::cout << "critical_coupling: not inside [" << lo << ", " << hi << "]\n";
  else
    std::cout << "critical_coupling: " << ism::format_double(crit) << "\n";
  return kOk;
}

int cmd_expansion(const std::string& kind_name, const std::vector<double>& eps) {
  const auto kind = ism::mono::parse_expansion_kind(kind_name);
  if (eps.size() < 2) throw ism::ConfigError("--eps-list needs at least two values");
  const auto rows = ism::mono::expansion_sweep(kind, eps);
  std::cout << "eps,exact,asymptotic,rel_error\n";
  for (const auto& r : rows)
    std::cout << ism::format_double(r.eps) << "," << ism::format_double(r.exact) << ","
              << ism::format_double(r.asymptotic) << "," << ism::format_double(r.rel_error) << "\n";
  const double slope = ism::mono::loglog_slope(rows);
  const double expected = ism::mono::expected_slope(kind);
  const bool ok = std::abs(slope - expected) <= 0.3;
  std::cerr << "slope " << slope << " (expected " << expected << " +- 0.3): " << (ok ? "ok" : "MISMATCH") << "\n";
  return ok ? kOk : kNumerical;
}

int cmd_verify(const std::string& path) {
  const auto report = ism::verify_outputs(path);
  for (const auto& c : report.checks)
    std::cout << (c.ok ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return report.ok() ? kOk : kNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inertial spin model simulations and checks"};
  app.require_subcommand(1);

  std::string config_path, output;
  auto* run = app.add_subcommand("run", "Run a scenario from a config file");
  run->add_option("config", config_path, "Config file")->required();
  run->add_option("--output", output, "Override [output] directory");

  double lo = 0.5, hi = 10.0;
  std::size_t steps = 200;
  std::string scan_out = ".";
  auto* scan = app.add_subcommand("scan-bifurcation", "Tabulate the equilibrium order parameter");
  scan->add_option("--min", lo, "Smallest beta*J")->required();
  scan->add_option("--max", hi, "Largest beta*J")->required();
  scan->add_option("--steps", steps, "Number of couplings")->required();
  scan->add_option("--output", scan_out, "Directory for bifurcation.csv");

  std::string kind;
  std::vector<double> eps;
  auto* expansion = app.add_subcommand("check-expansion", "Error of the zero-range expansions");
  expansion->add_option("--kind", kind, "space, line or line_rank")->required();
  expansion->add_option("--eps-list", eps, "Comma-separated eps values")->required()->delimiter(',');

  std::string summary;
  auto* verify = app.add_subcommand("verify", "Re-check invariants from a run's outputs");
  verify->add_option("summary", summary, "Path to summary.json")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kIo;
  }

  try {
    if (*run) return cmd_run(config_path, output);
    if (*scan) return cmd_scan(lo, hi, steps, scan_out);
    if (*expansion) return cmd_expansion(kind, eps);
    if (*verify) return cmd_verify(summary);
  } catch (const ism::ConfigError& e) {
    if (e.diagnostics().empty()) {
      std::cerr << "config error: " << e.what() << "\n";
    } else {
      for (const auto& d : e.diagnostics())
        std::cerr << "config error" << (d.line ? " (line " + std::to_string(d.line) + ")" : "") << ": " << d.message
                  << "\n";
    }
    return kConfig;
  } catch (const ism::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumerical;
  } catch (const ism::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kIo;
}
