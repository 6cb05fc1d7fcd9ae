#include "ism/init.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ism/error.hpp"
#include "ism/meanfield.hpp"

namespace ism {

namespace {

Vec3 tangential_gaussian(const Vec3& v, double sd, Rng& rng) {
  const Vec3 g = rng.normal3();
  const Vec3 u = v / norm(v);
  return sd * (g - dot(g, u) * u);
}

Vec3 perturbed(const Vec3& axis, double delta, double v, Rng& rng) {
  const Vec3 d = axis + delta * rng.normal3();
  return v * (d / norm(d));
}

Ensemble finish(const ModelParams& p, const KernelSpec& k, std::vector<AgentState> agents) {
  Ensemble e = Ensemble::make(p, k, std::move(agents));
  for (auto& a : e.alpha) a = 0.0;
  return e;
}

Vec3 in_box(double box, Rng& rng) { return {box * rng.uniform(), box * rng.uniform(), box * rng.uniform()}; }

}  // namespace

Ensemble uniform_sphere(const ModelParams& p, const KernelSpec& k, double box, double spin_scale, Rng& rng) {
  std::vector<AgentState> agents(p.N);
  for (auto& a : agents) {
    a.x = in_box(box, rng);
    a.v = p.v_speed * rng.unit_vector();
    a.s = tangential_gaussian(a.v, spin_scale, rng);
  }
  return finish(p, k, std::move(agents));
}

Ensemble aligned_perturbed(const ModelParams& p, const KernelSpec& k, double delta, double box, Rng& rng) {
  std::vector<AgentState> agents(p.N);
  for (auto& a : agents) {
    a.x = in_box(box, rng);
    a.v = perturbed({0.0, 0.0, 1.0}, delta, p.v_speed, rng);
    a.s = tangential_gaussian(a.v, delta, rng);
  }
  return finish(p, k, std::move(agents));
}

Ensemble two_groups(const ModelParams& p, const KernelSpec& k, double fraction, double delta, double box, Rng& rng) {
  const auto n_plus = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(p.N)));
  std::vector<AgentState> agents(p.N);
  for (std::size_t i = 0; i < p.N; ++i) {
    auto& a = agents[i];
    a.x = in_box(box, rng);
    a.v = perturbed({0.0, 0.0, i < n_plus ? 1.0 : -1.0}, delta, p.v_speed, rng);
    a.s = tangential_gaussian(a.v, delta, rng);
  }
  return finish(p, k, std::move(agents));
}

Ensemble equilibrium(const ModelParams& p, const KernelSpec& k, double beta_J, Rng& rng) {
  if (!(p.J > 0.0)) throw ConfigError("equilibrium initializer needs J > 0");
  const auto sol = meanfield::solve_selfconsistency(beta_J);
  Ensemble e = meanfield::sample_equilibrium(sol, beta_J / p.J, p, p.N, rng);
  return finish(p, k, std::move(e.agents));
}

mono::MonokineticField1D uniform_field_perturbed(const ContinuumConfig& c, int mode, double amplitude) {
  auto f = mono::MonokineticField1D::uniform(c.cells, c.length, c.rho0, {0.0, 0.0, 1.0}, c.j, c.q, c.v);
  const double speed = mono::linear_wave_speed(c.j, c.rho0, c.q);
  const double k = 2.0 * std::numbers::pi * mode / c.length;
  for (std::size_t i = 0; i < f.cells(); ++i) {
    const double x = f.cell_center(i);
    const Vec3 u{0.0, amplitude * std::sin(k * x), c.v};
    f.u[i] = c.v * (u / norm(u));
    f.sigma[i] = {amplitude * speed * k * std::cos(k * x) / c.v, 0.0, 0.0};
  }
  return f;
}

mono::PolarField2D rotating_ring(const ContinuumConfig& c, double radius, double width) {
  auto g = [=](double r) {
    const double t = (r - radius) / width;
    return std::abs(t) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - t * t)) : 0.0;
  };
  try {
    return mono::polar_rotating_state(g, c.cells, c.half_width, c.v, c.j, c.q);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("rotating_ring: ") + e.what() + " (increase radius or cells)");
  }
}

ChainInit circle_chain(const ContinuumConfig& c, double R) {
  ChainInit out{mono::ArcCurve::circle(R), {}};
  out.traveling = mono::traveling_curve(out.curve, c.gamma, 0.0, c.cells, c.lambda, c.j, c.q, c.v);
  return out;
}

ChainInit helix_chain(const ContinuumConfig& c, double kappa, double tau) {
  ChainInit out{mono::ArcCurve::helix_from_frenet(kappa, tau), {}};
  out.traveling = mono::traveling_curve(out.curve, c.gamma, 0.0, c.cells, c.lambda, c.j, c.q, c.v);
  return out;
}

double init_param(const ScenarioConfig& c, const char* key) {
  if (auto it = c.init.params.find(key); it != c.init.params.end()) return it->second;
  const std::string k = key;
  if (k == "box") return 1.0;
  if (k == "spin_scale") return 1.0;
  if (k == "delta") return 0.0;
  if (k == "fraction") return 0.5;
  if (k == "beta_J") return c.params.nu > 0.0 ? c.params.J * c.params.eta / c.params.nu : 0.0;
  if (k == "k") return 1.0;
  if (k == "amplitude") return 1e-3;
  if (k == "radius") return 0.5;
  if (k == "width") return 0.3;
  if (k == "R") return 1.0;
  if (k == "kappa") return 0.8;
  if (k == "tau") return 0.4;
  throw ConfigError("unknown initializer parameter '" + k + "'");
}

KernelSpec make_kernel(const ScenarioConfig& c, Rng& rng) {
  const auto& k = c.kernel;
  switch (k.type) {
    case KernelSpec::Kind::Constant:
      return KernelSpec::constant(k.c);
    case KernelSpec::Kind::Multiplicative: {
      std::vector<double> n = k.weights;
      if (n.empty()) {
        n.resize(c.params.N);
        for (auto& x : n) x = rng.uniform(k.weights_min, k.weights_max);
      }
      return KernelSpec::multiplicative(std::move(n));
    }
    case KernelSpec::Kind::Distance:
      return KernelSpec::distance(k.make_profile(), k.q, k.include_self);
    case KernelSpec::Kind::Rank:
      return KernelSpec::rank(k.make_profile(), k.include_self);
  }
  throw ConfigError("unknown kernel type");
}

Ensemble init_ensemble(const ScenarioConfig& c, Rng& rng) {
  const KernelSpec k = make_kernel(c, rng);
  const auto& n = c.init.name;
  const auto p = [&](const char* key) { return init_param(c, key); };
  Ensemble e;
  if (n == "uniform_sphere")
    e = uniform_sphere(c.params, k, p("box"), p("spin_scale"), rng);
  else if (n == "aligned_perturbed")
    e = aligned_perturbed(c.params, k, p("delta"), p("box"), rng);
  else if (n == "two_groups")
    e = two_groups(c.params, k, p("fraction"), p("delta"), p("box"), rng);
  else if (n == "equilibrium")
    e = equilibrium(c.params, k, p("beta_J"), rng);
  else
    throw ConfigError("initializer '" + n + "' does not produce agents");
  e.tolerance = {c.integration.speed_tol, c.integration.vs_tol};
  return e;
}

mono::MonokineticField1D init_field(const ScenarioConfig& c) {
  if (c.init.name != "uniform_field_perturbed")
    throw ConfigError("initializer '" + c.init.name + "' does not produce a 1D field");
  return uniform_field_perturbed(c.continuum, static_cast<int>(init_param(c, "k")), init_param(c, "amplitude"));
}

mono::PolarField2D init_polar(const ScenarioConfig& c) {
  if (c.init.name != "rotating_ring") throw ConfigError("initializer '" + c.init.name + "' does not produce a 2D field");
  return rotating_ring(c.continuum, init_param(c, "radius"), init_param(c, "width"));
}

ChainInit init_chain(const ScenarioConfig& c) {
  if (c.init.name == "circle_chain") return circle_chain(c.continuum, init_param(c, "R"));
  if (c.init.name == "helix_chain") return helix_chain(c.continuum, init_param(c, "kappa"), init_param(c, "tau"));
  throw ConfigError("initializer '" + c.init.name + "' does not produce a chain");
}

}  // namespace ism
