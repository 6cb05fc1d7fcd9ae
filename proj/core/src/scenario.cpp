#include "ism/scenario.hpp"

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <memory>
#include <json.hpp>
#include <numbers>

#include "ism/analysis.hpp"
#include "ism/csv.hpp"
#include "ism/error.hpp"
#include "ism/init.hpp"
#include "ism/meanfield.hpp"

namespace ism {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json vec(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

struct Output {
  fs::path dir;
  RunReport report;

  explicit Output(const ScenarioConfig& c) : dir(c.output.directory) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error("cannot create output directory '" + dir.string() + "': " + ec.message());
    report.directory = dir.string();
  }

  std::string path(const char* name) {
    const auto p = (dir / name).string();
    report.files.push_back(p);
    return p;
  }

  void write_summary(const ScenarioConfig& c, json summary) {
    if (!c.output.json) return;
    summary["model"] = model_name(c.model);
    summary["seed"] = c.integration.seed ? json(*c.integration.seed) : json(nullptr);
    summary["warnings"] = report.warnings;
    summary["config"] = print_config(c);
    std::ofstream f(path("summary.json"), std::ios::binary | std::ios::trunc);
    f << summary.dump(2) << "\n";
    if (!f) throw Error("write failure on summary.json");
  }
};

std::unique_ptr<CsvWriter> snapshot_writer(Output& out, bool enabled) {
  if (!enabled) return nullptr;
  return std::make_unique<CsvWriter>(
      out.path("snapshots.csv"),
      std::vector<std::string>{"t", "agent_id", "x1", "x2", "x3", "v1", "v2", "v3", "s1", "s2", "s3"});
}

void write_agents(CsvWriter& w, double t, const std::vector<Vec3>& x, const std::vector<Vec3>& v,
                  const std::vector<Vec3>& s) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    w << t << i << x[i].x << x[i].y << x[i].z << v[i].x << v[i].y << v[i].z << s[i].x << s[i].y << s[i].z;
    w.end_row();
  }
}

RunReport run_particles(const ScenarioConfig& c) {
  Output out(c);
  Rng rng(c.integration.seed.value_or(0));
  Ensemble e = init_ensemble(c, rng);
  const Ensemble initial = e;

  RunOptions opt;
  opt.dynamics = c.model == ModelKind::Deterministic ? Dynamics::Deterministic
                 : c.model == ModelKind::FreeSpace   ? Dynamics::FreeSpace
                                                     : Dynamics::Stochastic;
  opt.t_end = c.integration.t_end;
  opt.dt = c.integration.dt;
  opt.stride = c.integration.stride;
  opt.seed = c.integration.seed.value_or(0);
  opt.step = {c.integration.scheme, c.integration.position};

  auto snaps = snapshot_writer(out, c.output.csv && c.output.snapshots);
  std::unique_ptr<CsvWriter> diag;
  if (c.output.csv)
    diag = std::make_unique<CsvWriter>(
        out.path("diagnostics.csv"), std::vector<std::string>{"t", "E", "U", "w_norm", "w1", "w2", "w3", "max_sigma",
                                                               "spin1", "spin2", "spin3"});
  std::vector<Vec3> x(e.size()), v(e.size()), s(e.size());
  const Observer observer = [&](const Ensemble& en, const Diagnostics& d) {
    if (diag) {
      *diag << d.t << d.E << d.U << d.w_norm << d.w.x << d.w.y << d.w.z << d.max_sigma << d.spin.x << d.spin.y
            << d.spin.z;
      diag->end_row();
    }
    if (snaps) {
      for (std::size_t i = 0; i < en.size(); ++i) {
        x[i] = en.agents[i].x;
        v[i] = en.agents[i].v;
        s[i] = en.agents[i].s;
      }
      write_agents(*snaps, d.t, x, v, s);
    }
  };

  const Trajectory tr = run(e, opt, observer);
  if (diag) diag->close();
  if (snaps) snaps->close();

  const auto verdict = classify_asymptotic(tr);
  const auto winf = w_infinity(tr);
  const auto weights = energy_weights(initial);
  const auto th = corollary_thresholds(initial.params, weights);
  const double E0 = tr.diagnostics.front().E;
  double max_increase = -INFINITY;
  double spin_drift = 0.0;
  for (std::size_t k = 1; k < tr.diagnostics.size(); ++k) {
    max_increase = std::max(max_increase, tr.diagnostics[k].E - tr.diagnostics[k - 1].E);
    spin_drift = std::max(spin_drift, norm(tr.diagnostics[k].spin - tr.diagnostics.front().spin));
  }
  if (tr.flagged_steps > 0)
    out.report.warnings.push_back(std::to_string(tr.flagged_steps) + " steps exceeded the constraint tolerance");

  json j;
  j["status"] = "ok";
  j["N"] = e.size();
  j["verdict"] = {{"kind", AsymptoticVerdict::kind_name(verdict.kind)},
                  {"plus_count", verdict.plus_set.size()},
                  {"minus_count", verdict.minus_set.size()},
                  {"w_inf_estimate", verdict.w_inf_estimate},
                  {"max_sigma", verdict.max_sigma},
                  {"max_w_norm", verdict.max_w_norm},
                  {"min_abs_cos", verdict.min_abs_cos}};
  j["w_infinity"] = {{"mean", winf.mean}, {"band", winf.band}};
  const bool translation_free = !initial.kernel.position_dependent();
  j["thresholds"] = {{"aligned_bound", th.aligned_bound},
                     {"flocking_bound", th.flocking_bound},
                     {"E0", E0},
                     {"below_aligned", E0 < th.aligned_bound},
                     {"below_flocking", E0 < th.flocking_bound},
                     {"applicable", translation_free && c.model != ModelKind::Stochastic}};
  j["w_squared_lower_bound"] = w_squared_lower_bound(initial);
  j["drifts"] = {{"speed_rel", tr.max_drift.speed_rel},
                 {"vs_abs", tr.max_drift.vs_abs},
                 {"max_vs_correction", tr.max_vs_correction},
                 {"flagged_steps", tr.flagged_steps},
                 {"tolerance", {{"speed_rel", e.tolerance.speed_rel}, {"vs_abs", e.tolerance.vs_abs}}}};
  j["energy"] = {{"E0", E0},
                 {"E_final", tr.diagnostics.back().E},
                 {"max_increase", tr.diagnostics.size() > 1 ? max_increase : 0.0}};
  j["spin"] = {{"initial", vec(tr.diagnostics.front().spin)},
               {"final", vec(tr.diagnostics.back().spin)},
               {"max_drift", spin_drift}};
  j["steps"] = tr.steps;
  j["dt"] = tr.dt;
  j["kernel_evaluations"] = tr.kernel_evaluations;
  if (c.model == ModelKind::Stochastic && e.params.nu > 0.0 && e.params.eta > 0.0 && e.params.J > 0.0) {
    const double beta_J = e.params.J * e.params.beta();
    const auto sol = meanfield::solve_selfconsistency(beta_J);
    j["equilibrium"] = {{"beta_J", beta_J},
                        {"gamma", sol.gamma},
                        {"predicted_w_norm", sol.gamma * e.params.v_speed},
                        {"measured_w_norm", winf.mean}};
  }
  out.report.verdict = AsymptoticVerdict::kind_name(verdict.kind);
  out.write_summary(c, j);
  return out.report;
}

// Phase of the Fourier mode `mode` of u_2.
double mode_phase(const mono::MonokineticField1D& f, int mode) {
  std::complex<double> acc = 0.0;
  const double k = 2.0 * std::numbers::pi * mode / f.length;
  for (std::size_t i = 0; i < f.cells(); ++i)
    acc += f.u[i].y * std::exp(std::complex<double>(0.0, -k * f.cell_center(i)));
  return std::arg(acc);
}

RunReport run_field1d(const ScenarioConfig& c) {
  Output out(c);
  auto f = init_field(c);
  const int mode = static_cast<int>(init_param(c, "k"));
  const double amplitude = init_param(c, "amplitude");
  const double admissible = mono::max_stable_dt(f);
  double dt = std::min(c.integration.dt, c.integration.cfl * admissible);
  if (dt < c.integration.dt)
    out.report.warnings.push_back("dt reduced to " + format_double(dt) + " by the CFL limit");
  const double t_end = c.integration.t_end;
  const auto n = t_end > 0.0 ? static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9)) : std::size_t{0};
  if (n > 0) dt = t_end / static_cast<double>(n);

  std::unique_ptr<CsvWriter> w;
  if (c.output.csv)
    w = std::make_unique<CsvWriter>(out.path("field.csv"),
                                    std::vector<std::string>{"t", "cell", "x", "rho", "u1", "u2", "u3", "sigma1",
                                                             "sigma2", "sigma3"});
  auto snapshot = [&] {
    if (!w) return;
    for (std::size_t i = 0; i < f.cells(); ++i) {
      *w << f.t << i << f.cell_center(i) << f.rho[i] << f.u[i].x << f.u[i].y << f.u[i].z << f.sigma[i].x
         << f.sigma[i].y << f.sigma[i].z;
      w->end_row();
    }
  };

  const double mass0 = mono::total_mass(f);
  const Vec3 rs0 = mono::total_rho_sigma(f);
  double phase = mode_phase(f, mode), unwrapped = 0.0;
  auto track = [&] {
    const double p = mode_phase(f, mode);
    double d = p - phase;
    d -= 2.0 * std::numbers::pi * std::round(d / (2.0 * std::numbers::pi));
    unwrapped += d;
    phase = p;
  };
  snapshot();
  for (std::size_t s = 1; s <= n; ++s) {
    mono::pde_step_1d(f, dt);
    f.t = dt * static_cast<double>(s);
    if (s % c.integration.stride == 0 || s == n) {
      track();
      snapshot();
    }
  }
  if (w) w->close();

  const double k = 2.0 * std::numbers::pi * mode / f.length;
  json j;
  j["status"] = "ok";
  j["cells"] = f.cells();
  j["steps"] = n;
  j["dt"] = dt;
  j["admissible_dt"] = admissible;
  j["mass"] = {{"initial", mass0}, {"final", mono::total_mass(f)}, {"rel_drift", std::abs(mono::total_mass(f) - mass0) / mass0}};
  j["rho_sigma"] = {{"initial", vec(rs0)}, {"final", vec(mono::total_rho_sigma(f))}};
  j["wave"] = {{"mode", mode},
               {"predicted_speed", mono::linear_wave_speed(c.continuum.j, c.continuum.rho0, c.continuum.q)},
               {"measured_speed", amplitude > 0.0 && f.t > 0.0 ? json(-unwrapped / (k * f.t)) : json(nullptr)}};
  out.write_summary(c, j);
  return out.report;
}

RunReport run_polar(const ScenarioConfig& c) {
  Output out(c);
  const auto f = init_polar(c);
  const auto r = mono::polar_residual(f, c.continuum.core_fraction);
  if (c.output.csv) {
    CsvWriter w(out.path("field.csv"), {"t", "cell", "x1", "x2", "rho", "theta", "sigma"});
    for (std::size_t iy = 0; iy < f.n; ++iy)
      for (std::size_t ix = 0; ix < f.n; ++ix) {
        const std::size_t i = iy * f.n + ix;
        w << 0.0 << i << f.x_of(ix) << f.x_of(iy) << f.rho[i] << f.theta[i] << f.sigma[i];
        w.end_row();
      }
    w.close();
  }
  json j;
  j["status"] = "ok";
  j["cells_per_side"] = f.n;
  j["residual"] = {{"rho", r.rho}, {"theta", r.theta}, {"sigma", r.sigma}, {"max", r.max}, {"core_cells", r.cells}};
  out.write_summary(c, j);
  return out.report;
}

RunReport run_chain(const ScenarioConfig& c) {
  Output out(c);
  auto ci = init_chain(c);
  auto& ch = ci.traveling.chain;
  if (!ci.traveling.warning.empty()) out.report.warnings.push_back(ci.traveling.warning);
  double dt = c.integration.dt;
  const double t_end = c.integration.t_end;
  const auto n = t_end > 0.0 ? static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9)) : std::size_t{0};
  if (n > 0) dt = t_end / static_cast<double>(n);

  auto snaps = snapshot_writer(out, c.output.csv && c.output.snapshots);
  double max_dev = mono::chain_deviation(ch, ci.curve, c.continuum.gamma);
  if (snaps) write_agents(*snaps, ch.t, ch.x, ch.v, ch.s);
  for (std::size_t s = 1; s <= n; ++s) {
    mono::line_step(ch, dt);
    ch.t = dt * static_cast<double>(s);
    if (s % c.integration.stride == 0 || s == n) {
      for (const auto& v : ch.v)
        if (!is_finite(v)) throw NumericalError("blow-up: non-finite chain state at t = " + format_double(ch.t));
      max_dev = std::max(max_dev, mono::chain_deviation(ch, ci.curve, c.continuum.gamma));
      if (snaps) write_agents(*snaps, ch.t, ch.x, ch.v, ch.s);
    }
  }
  if (snaps) snaps->close();
  json j;
  j["status"] = "ok";
  j["points"] = ch.size();
  j["steps"] = n;
  j["dt"] = dt;
  j["condition_holds"] = ci.traveling.condition_holds;
  j["period"] = ci.curve.period() / c.continuum.v;
  j["deviation"] = {{"final", mono::chain_deviation(ch, ci.curve, c.continuum.gamma)}, {"max", max_dev}};
  out.write_summary(c, j);
  return out.report;
}

RunReport run_scan(const ScenarioConfig& c) {
  Output out(c);
  const auto& s = c.scan;
  // bifurcation.csv is the scan's product, so it is written even with csv = false.
  const double crit = write_bifurcation_csv(out.path("bifurcation.csv"), s.beta_J_min, s.beta_J_max, s.steps);
  json j;
  j["status"] = "ok";
  j["critical_coupling"] = std::isnan(crit) ? json(nullptr) : json(crit);
  j["series_oracle"] = 1.0 / meanfield::h_prime(0.0);
  out.write_summary(c, j);
  return out.report;
}

}  // namespace

double write_bifurcation_csv(const std::string& path, double lo, double hi, std::size_t steps) {
  if (!(hi > lo) || lo < 0.0 || steps < 2) throw ConfigError("bifurcation scan needs 0 <= min < max and steps >= 2");
  CsvWriter w(path, {"beta_J", "xi", "gamma"});
  double last_off = NAN, first_on = NAN;
  for (std::size_t i = 0; i < steps; ++i) {
    const double b = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
    const auto sol = meanfield::solve_selfconsistency(b);
    if (sol.xi > 0.0 && std::isnan(first_on)) first_on = b;
    if (sol.xi == 0.0 && std::isnan(first_on)) last_off = b;
    w << b << sol.xi << sol.gamma;
    w.end_row();
  }
  w.close();
  // Onset refined between the last zero row and the first nonzero row.
  if (std::isnan(last_off) || std::isnan(first_on)) return NAN;
  return meanfield::critical_coupling(last_off, first_on);
}

RunReport run_scenario(const ScenarioConfig& c) {
  switch (c.model) {
    case ModelKind::Deterministic:
    case ModelKind::FreeSpace:
    case ModelKind::Stochastic:
      return run_particles(c);
    case ModelKind::Monokinetic1D:
      return run_field1d(c);
    case ModelKind::Polar2D:
      return run_polar(c);
    case ModelKind::LineChain:
      return run_chain(c);
    case ModelKind::EquilibriumScan:
      return run_scan(c);
  }
  throw ConfigError("unknown model");
}

}  // namespace ism
