#pragma once

#include <cstddef>
#include <vector>

#include "ism/geometry.hpp"
#include "ism/kernel.hpp"

namespace ism {

struct ModelParams {
  double v_speed = 1.0;  // common speed v
  double J = 0.0;        // coupling
  double eta = 0.0;      // friction
  double nu = 0.0;       // spin diffusion
  std::size_t N = 1;

  // eta / nu; infinite when nu == 0.
  double beta() const;
  void validate() const;
};

struct AgentState {
  Vec3 x;
  Vec3 v;
  Vec3 s;
};

// Constraint tolerances: | |v_i| - v | <= speed_rel * v and
// |v_i . s_i - alpha_i| <= vs_abs * v^2.
struct ConstraintTolerance {
  double speed_rel = 1e-10;
  double vs_abs = 1e-8;
};

struct Ensemble {
  ModelParams params;
  KernelSpec kernel;
  std::vector<AgentState> agents;
  std::vector<double> alpha;      // v_i . s_i captured at construction
  std::vector<double> n_weights;  // optional n_i; empty means "derive from kernel"
  ConstraintTolerance tolerance;

  // Sets params.N from agents and records alpha_i = v_i . s_i.
  static Ensemble make(ModelParams params, KernelSpec kernel, std::vector<AgentState> agents);

  std::size_t size() const { return agents.size(); }
  void capture_alpha();
  // Throws ConfigError on inconsistent sizes or parameters.
  void validate() const;
};

// Per-agent n_i used by the energy functionals and mean_velocity: explicit
// n_weights if set, else the multiplicative kernel's n, else sqrt(c) for a
// constant kernel (so n_i n_j == c), else all ones.
std::vector<double> energy_weights(const Ensemble& e);

// (1/N) sum_j n_j v_j, with n from n_weights or a multiplicative kernel,
// otherwise the plain mean.
Vec3 mean_velocity(const Ensemble& e);

// U = (J / 4 N v^2) sum_ij n_i n_j |v_i - v_j|^2, evaluated in O(N) as
// (J / 2 N v^2) (m sum_i n_i |v_i|^2 - |sum_i n_i v_i|^2), m = sum_i n_i.
double potential_energy(const Ensemble& e);

// Same quantity assuming |v_i| = v: (J/2N) m^2 - (J N / 2 v^2) |w|^2.
double potential_energy_constrained(const Ensemble& e);

// 1/2 sum |sigma_i|^2 + U.
double total_energy(const Ensemble& e);

double kinetic_energy(const Ensemble& e);

Vec3 total_spin(const Ensemble& e);

// sigma_i = s_i - alpha_i v_i / v^2. Throws DomainError on zero velocity.
std::vector<Vec3> sigma_of(const Ensemble& e);

double max_sigma(const Ensemble& e);

struct ConstraintDrift {
  double speed_rel = 0.0;  // max_i | |v_i| - v | / v
  double vs_abs = 0.0;     // max_i | v_i . s_i - alpha_i |
};

ConstraintDrift constraint_drift(const Ensemble& e);

}  // namespace ism
