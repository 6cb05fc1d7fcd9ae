#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "ism/model.hpp"
#include "ism/rng.hpp"

namespace ism {

// Time-stepping schemes. All of them move v by exact rotations about s, so
// |v_i| = v and v_i . s_i = alpha_i hold to rounding error.
//
// Strang: kick(h/2) drift(h) kick(h/2). The kick integrates
//   ds/dt = (J/v^2) v x w_i - eta P_perp s
// exactly with v and x frozen; the drift rotates v about s and moves x.
// Yoshida4: the symmetric triple-jump composition of Strang (4th order).
enum class Scheme { Strang, Yoshida4 };

// Chord: x += dt (v_old + v_new) / 2.  Arc: exact path of the rotation.
enum class PositionUpdate { Chord, Arc };

struct StepOptions {
  Scheme scheme = Scheme::Strang;
  PositionUpdate position = PositionUpdate::Chord;
};

struct StepReport {
  double dt = 0.0;
  double speed_drift_rel = 0.0;  // max_i | |v_i| - v | / v after the step
  double vs_drift_abs = 0.0;     // max_i | v_i . s_i - alpha_i | after the step
  double vs_correction = 0.0;    // max_i size of the stochastic re-projection
  std::size_t kernel_evaluations = 0;
  bool flagged = false;          // drifts exceeded the ensemble tolerance
};

// Full system with positions; any kernel.
StepReport step_deterministic(Ensemble& e, double dt, const StepOptions& opt = {});

// Velocity/spin system without positions. Requires a constant or
// multiplicative kernel; x is left untouched.
StepReport step_free_space(Ensemble& e, double dt, const StepOptions& opt = {});

// Euler-Maruyama noise kick s += (sqrt(2 nu) / v) Omega(v) dB with dB drawn
// from rng at the step's start velocity, followed by one deterministic step
// and re-projection of v . s onto alpha. With nu == 0 the velocity and spin
// arithmetic is identical to step_free_space. Advances rng by one step.
StepReport step_stochastic(Ensemble& e, double dt, RngStream& rng, const StepOptions& opt = {});

enum class Dynamics { Deterministic, FreeSpace, Stochastic };

struct Diagnostics {
  double t = 0.0;
  double E = 0.0;
  double U = 0.0;
  Vec3 w;              // mean_velocity
  double w_norm = 0.0;
  double max_sigma = 0.0;
  Vec3 spin;           // total spin
  double min_abs_cos = 1.0;  // min_i |v_i . w^| / v (1 when w == 0)
  std::size_t n_minus = 0;   // agents with v_i . w < 0
};

Diagnostics diagnose(const Ensemble& e, double t);

struct RunOptions {
  Dynamics dynamics = Dynamics::Deterministic;
  double t_end = 0.0;
  double dt = 1e-3;
  std::size_t stride = 100;  // steps between snapshots
  std::uint64_t seed = 0;
  StepOptions step;
  bool keep_states = false;  // store full agent states at every snapshot
};

struct Trajectory {
  std::vector<Diagnostics> diagnostics;
  std::vector<std::vector<AgentState>> states;  // when keep_states
  std::vector<int> final_signs;                 // sign of v_i . w at the end
  ConstraintDrift max_drift;                    // over snapshots
  double max_vs_correction = 0.0;
  std::size_t steps = 0;
  std::size_t flagged_steps = 0;
  std::size_t kernel_evaluations = 0;
  double dt = 0.0;  // step actually used
};

using Observer = std::function<void(const Ensemble&, const Diagnostics&)>;

// Integrates to t_end with n = ceil(t_end / dt) equal steps of t_end / n
// (so the final snapshot lands on t_end), sampling every `stride` steps and
// at the end. NumericalError messages carry the time of failure.
Trajectory run(Ensemble& e, const RunOptions& opt, const Observer& observer = {});

}  // namespace ism
