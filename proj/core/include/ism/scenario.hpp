#pragma once

#include <string>
#include <vector>

#include "ism/config.hpp"

namespace ism {

struct RunReport {
  std::string directory;
  std::vector<std::string> files;  // written, in order
  std::string verdict;             // particle models; empty otherwise
  std::vector<std::string> warnings;
};

// Runs one scenario and writes its outputs under c.output.directory (created
// if missing). Throws ConfigError, NumericalError (blow-up, CFL) or Error
// (I/O).
RunReport run_scenario(const ScenarioConfig& c);

// gamma(beta_J) on `steps` equally spaced couplings in [lo, hi] written to
// `path` as beta_J,xi,gamma. Returns the located critical coupling.
double write_bifurcation_csv(const std::string& path, double lo, double hi, std::size_t steps);

}  // namespace ism
