#include "ism/integrators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ism/error.hpp"
#include "ism/interactions.hpp"

namespace ism {

namespace {

void check_finite(const Ensemble& e) {
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& a = e.agents[i];
    if (!is_finite(a.x) || !is_finite(a.v) || !is_finite(a.s))
      throw NumericalError("blow-up: non-finite state at agent " + std::to_string(i));
  }
}

// Exact flow over h of ds/dt = (J/v^2) v x w_i - eta P_perp s with v fixed.
void kick(Ensemble& e, const std::vector<Vec3>& w, double h) {
  const double v2 = e.params.v_speed * e.params.v_speed;
  const double eta = e.params.eta;
  const double decay_m1 = std::expm1(-eta * h);
  const double gain = eta > 0.0 ? -decay_m1 / eta : h;
  const double c = e.params.J / v2;
  for (std::size_t i = 0; i < e.size(); ++i) {
    auto& a = e.agents[i];
    const Vec3 tau = c * cross(a.v, w[i]);
    if (decay_m1 != 0.0) {
      const Vec3 perp = a.s - (dot(a.s, a.v) / norm2(a.v)) * a.v;
      a.s += decay_m1 * perp;
    }
    a.s += gain * tau;
  }
}

// v rotates about s for time h; s is constant.
void drift(Ensemble& e, double h, bool move_x, PositionUpdate mode) {
  const double vs = e.params.v_speed;
  for (auto& a : e.agents) {
    Vec3 v1 = rotate_about(a.v, a.s, h);
    v1 *= vs / norm(v1);
    if (move_x) {
      if (mode == PositionUpdate::Arc)
        a.x += rotation_arc(a.v, a.s, h);
      else
        a.x += (0.5 * h) * (a.v + v1);
    }
    a.v = v1;
  }
}

std::size_t strang(Ensemble& e, double h, bool move_x, PositionUpdate mode) {
  std::size_t evals = 0;
  kick(e, interaction_field(e, &evals), 0.5 * h);
  drift(e, h, move_x, mode);
  kick(e, interaction_field(e, &evals), 0.5 * h);
  return evals;
}

std::size_t composed(Ensemble& e, double h, bool move_x, const StepOptions& opt) {
  if (opt.scheme == Scheme::Strang) return strang(e, h, move_x, opt.position);
  const double c1 = 1.0 / (2.0 - std::cbrt(2.0));
  const double c0 = 1.0 - 2.0 * c1;
  std::size_t evals = strang(e, c1 * h, move_x, opt.position);
  evals += strang(e, c0 * h, move_x, opt.position);
  evals += strang(e, c1 * h, move_x, opt.position);
  return evals;
}

void require_dt(double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive and finite");
}

StepReport finish(const Ensemble& e, double dt, std::size_t evals, double correction) {
  check_finite(e);
  StepReport r;
  r.dt = dt;
  r.kernel_evaluations = evals;
  r.vs_correction = correction;
  const auto d = constraint_drift(e);
  r.speed_drift_rel = d.speed_rel;
  r.vs_drift_abs = d.vs_abs;
  const double v2 = e.params.v_speed * e.params.v_speed;
  r.flagged = d.speed_rel > e.tolerance.speed_rel || d.vs_abs > e.tolerance.vs_abs * v2;
  return r;
}

}  // namespace

StepReport step_deterministic(Ensemble& e, double dt, const StepOptions& opt) {
  require_dt(dt);
  const std::size_t evals = composed(e, dt, true, opt);
  return finish(e, dt, evals, 0.0);
}

StepReport step_free_space(Ensemble& e, double dt, const StepOptions& opt) {
  require_dt(dt);
  if (e.kernel.position_dependent())
    throw ConfigError("free-space stepping needs a constant or multiplicative kernel");
  const std::size_t evals = composed(e, dt, false, opt);
  return finish(e, dt, evals, 0.0);
}

StepReport step_stochastic(Ensemble& e, double dt, RngStream& rng, const StepOptions& opt) {
  require_dt(dt);
  const double nu = e.params.nu;
  if (!(nu >= 0.0)) throw ConfigError("nu must be >= 0");
  if (nu > 0.0) {
    const double amp = std::sqrt(2.0 * nu) / e.params.v_speed * std::sqrt(dt);
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& a = e.agents[i];
      a.s += amp * (omega_matrix(a.v) * rng.normal3(i));
    }
  }
  rng.advance();
  const std::size_t evals = composed(e, dt, e.kernel.position_dependent(), opt);
  double correction = 0.0;
  if (nu > 0.0) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      auto& a = e.agents[i];
      const double gap = e.alpha[i] - dot(a.v, a.s);
      a.s += (gap / norm2(a.v)) * a.v;
      correction = std::max(correction, std::abs(gap));
    }
  }
  return finish(e, dt, evals, correction);
}

Diagnostics diagnose(const Ensemble& e, double t) {
  Diagnostics d;
  d.t = t;
  d.U = potential_energy(e);
  d.E = kinetic_energy(e) + d.U;
  d.w = mean_velocity(e);
  d.w_norm = norm(d.w);
  d.max_sigma = max_sigma(e);
  d.spin = total_spin(e);
  if (d.w_norm > 0.0) {
    for (const auto& a : e.agents) {
      const double c = dot(a.v, d.w) / (norm(a.v) * d.w_norm);
      d.min_abs_cos = std::min(d.min_abs_cos, std::abs(c));
      if (c < 0.0) ++d.n_minus;
    }
  }
  return d;
}

Trajectory run(Ensemble& e, const RunOptions& opt, const Observer& observer) {
  if (!(opt.t_end >= 0.0) || !std::isfinite(opt.t_end)) throw ConfigError("t_end must be >= 0");
  require_dt(opt.dt);
  if (opt.stride == 0) throw ConfigError("stride must be >= 1");
  e.validate();

  const std::size_t n =
      opt.t_end == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(opt.t_end / opt.dt - 1e-9));
  const double h = n ? opt.t_end / static_cast<double>(n) : opt.dt;

  Trajectory tr;
  tr.dt = h;
  auto sample = [&](double t) {
    tr.diagnostics.push_back(diagnose(e, t));
    if (opt.keep_states) tr.states.push_back(e.agents);
    const auto d = constraint_drift(e);
    tr.max_drift.speed_rel = std::max(tr.max_drift.speed_rel, d.speed_rel);
    tr.max_drift.vs_abs = std::max(tr.max_drift.vs_abs, d.vs_abs);
    if (observer) observer(e, tr.diagnostics.back());
  };

  sample(0.0);
  RngStream rng(opt.seed);
  for (std::size_t k = 1; k <= n; ++k) {
    StepReport r;
    try {
      switch (opt.dynamics) {
        case Dynamics::Deterministic:
          r = step_deterministic(e, h, opt.step);
          break;
        case Dynamics::FreeSpace:
          r = step_free_space(e, h, opt.step);
          break;
        case Dynamics::Stochastic:
          r = step_stochastic(e, h, rng, opt.step);
          break;
      }
    } catch (const NumericalError& err) {
      throw NumericalError(std::string(err.what()) + " at t = " + std::to_string(static_cast<double>(k) * h));
    }
    ++tr.steps;
    tr.kernel_evaluations += r.kernel_evaluations;
    tr.max_vs_correction = std::max(tr.max_vs_correction, r.vs_correction);
    if (r.flagged) ++tr.flagged_steps;
    if (k % opt.stride == 0 || k == n) sample(static_cast<double>(k) * h);
  }

  const Vec3 w = mean_velocity(e);
  tr.final_signs.resize(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) tr.final_signs[i] = dot(e.agents[i].v, w) < 0.0 ? -1 : 1;
  return tr;
}

}  // namespace ism
