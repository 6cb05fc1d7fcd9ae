#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ism/integrators.hpp"
#include "ism/kernel.hpp"
#include "ism/model.hpp"

namespace ism {

enum class ModelKind { Deterministic, FreeSpace, Stochastic, Monokinetic1D, Polar2D, LineChain, EquilibriumScan };

const char* model_name(ModelKind m);
bool is_particle_model(ModelKind m);

struct KernelConfig {
  KernelSpec::Kind type = KernelSpec::Kind::Constant;
  double c = 1.0;                                    // constant
  std::vector<double> weights;                       // multiplicative, explicit
  double weights_min = 1.0, weights_max = 1.0;       // multiplicative, drawn when weights is empty
  RadialProfile::Kind profile = RadialProfile::Kind::Indicator;  // distance, rank
  double radius = 1.0;                               // indicator, smooth_bump
  std::vector<std::pair<double, double>> table;      // table knots
  double q = 0.0;                                    // distance
  bool include_self = true;                          // distance, rank

  bool uses_profile() const { return type == KernelSpec::Kind::Distance || type == KernelSpec::Kind::Rank; }
  RadialProfile make_profile() const;
  bool operator==(const KernelConfig&) const = default;
};

struct IntegrationConfig {
  double dt = 1e-3;
  double t_end = 0.0;
  std::size_t stride = 100;
  std::optional<std::uint64_t> seed;
  Scheme scheme = Scheme::Strang;
  PositionUpdate position = PositionUpdate::Chord;
  double cfl = 0.5;  // grid models: dt is capped at cfl * admissible dt
  double speed_tol = 1e-10;
  double vs_tol = 1e-8;

  bool operator==(const IntegrationConfig&) const = default;
};

struct InitConfig {
  std::string name;
  std::map<std::string, double> params;

  bool operator==(const InitConfig&) const = default;
};

// Shared by monokinetic_1d (cells, length, rho0), polar_2d (cells per side,
// half_width, core_fraction) and line_chain (cells = chain points, lambda,
// gamma).
struct ContinuumConfig {
  std::size_t cells = 512;
  double length = 1.0;
  double rho0 = 1.0;
  double v = 1.0;
  double j = 1.0;
  double q = 0.0;
  double lambda = 1.0;
  double gamma = 1.0;
  double half_width = 1.0;
  double core_fraction = 0.1;

  bool operator==(const ContinuumConfig&) const = default;
};

struct ScanConfig {
  double beta_J_min = 0.5;
  double beta_J_max = 10.0;
  std::size_t steps = 200;

  bool operator==(const ScanConfig&) const = default;
};

struct OutputConfig {
  std::string directory = "out";
  bool csv = true;
  bool json = true;
  bool snapshots = true;  // per-agent snapshots.csv (can be large)

  bool operator==(const OutputConfig&) const = default;
};

struct ScenarioConfig {
  ModelKind model = ModelKind::Deterministic;
  ModelParams params;
  KernelConfig kernel;
  IntegrationConfig integration;
  InitConfig init;
  ContinuumConfig continuum;
  ScanConfig scan;
  OutputConfig output;

  bool operator==(const ScenarioConfig& o) const;
};

// Parses the key-value format documented in README.md. Collects every
// problem and throws one ConfigError whose diagnostics carry line numbers.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

// Canonical text; parse_config(print_config(c)) == c for any parsed c.
std::string print_config(const ScenarioConfig& c);

// Initializer names valid for a model, and the parameters each accepts.
std::vector<std::string> initializers_for(ModelKind m);
std::vector<std::string> initializer_params(const std::string& name);

}  // namespace ism
