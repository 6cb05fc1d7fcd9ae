#pragma once

#include <string>
#include <vector>

namespace ism {

struct VerifyCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
};

// Re-checks invariants from the files next to summary.json, using the config
// echoed in the summary:
//   particles: |v_i| = v and v_i . s_i = alpha_i at every snapshot, energy
//              recomputed from snapshots matches diagnostics.csv, energy
//              monotone (eta > 0, nu = 0) or conserved (eta = nu = 0) for
//              constant and multiplicative kernels, total
//              spin conserved for symmetric kernels without friction/noise
//   monokinetic_1d: mass conservation and |u| = v per snapshot
//   line_chain: |v| = v and v . s = 0 per snapshot
//   equilibrium_scan: each row solves xi = beta_J h(xi), gamma nondecreasing
//   polar_2d: residual recomputed from the config matches the summary
// Throws Error when a required file is missing or malformed.
VerifyReport verify_outputs(const std::string& summary_path);

}  // namespace ism
