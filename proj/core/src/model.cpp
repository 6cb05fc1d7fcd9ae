#include "ism/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ism/error.hpp"

namespace ism {

double ModelParams::beta() const {
  return nu > 0.0 ? eta / nu : std::numeric_limits<double>::infinity();
}

void ModelParams::validate() const {
  if (!(v_speed > 0.0) || !std::isfinite(v_speed)) throw ConfigError("v must be positive");
  if (!(J >= 0.0) || !std::isfinite(J)) throw ConfigError("J must be >= 0");
  if (!(eta >= 0.0) || !std::isfinite(eta)) throw ConfigError("eta must be >= 0");
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw ConfigError("nu must be >= 0");
  if (N < 1) throw ConfigError("N must be >= 1");
}

Ensemble Ensemble::make(ModelParams params, KernelSpec kernel, std::vector<AgentState> agents) {
  Ensemble e;
  params.N = agents.size();
  e.params = params;
  e.kernel = std::move(kernel);
  e.agents = std::move(agents);
  e.capture_alpha();
  e.validate();
  return e;
}

void Ensemble::capture_alpha() {
  alpha.resize(agents.size());
  for (std::size_t i = 0; i < agents.size(); ++i) alpha[i] = dot(agents[i].v, agents[i].s);
}

void Ensemble::validate() const {
  params.validate();
  kernel.validate();
  if (agents.size() != params.N)
    throw ConfigError("ensemble holds " + std::to_string(agents.size()) + " agents but N = " +
                      std::to_string(params.N));
  if (alpha.size() != agents.size()) throw ConfigError("alpha size does not match N");
  if (!n_weights.empty()) {
    if (n_weights.size() != agents.size()) throw ConfigError("n_weights size does not match N");
    for (double n : n_weights)
      if (!(n > 0.0)) throw ConfigError("n_weights must be positive");
  }
  if (kernel.kind == KernelSpec::Kind::Multiplicative && kernel.n.size() != agents.size())
    throw ConfigError("multiplicative kernel has " + std::to_string(kernel.n.size()) +
                      " weights for N = " + std::to_string(agents.size()));
}

std::vector<double> energy_weights(const Ensemble& e) {
  if (!e.n_weights.empty()) return e.n_weights;
  if (e.kernel.kind == KernelSpec::Kind::Multiplicative) return e.kernel.n;
  const double w = e.kernel.kind == KernelSpec::Kind::Constant ? std::sqrt(e.kernel.c) : 1.0;
  return std::vector<double>(e.size(), w);
}

Vec3 mean_velocity(const Ensemble& e) {
  const std::size_t n = e.size();
  const std::vector<double>* w = nullptr;
  if (!e.n_weights.empty())
    w = &e.n_weights;
  else if (e.kernel.kind == KernelSpec::Kind::Multiplicative)
    w = &e.kernel.n;
  Vec3 sum;
  for (std::size_t j = 0; j < n; ++j) sum += (w ? (*w)[j] : 1.0) * e.agents[j].v;
  return sum / static_cast<double>(n);
}

double potential_energy(const Ensemble& e) {
  const auto n = energy_weights(e);
  const double N = static_cast<double>(e.size());
  const double v2 = e.params.v_speed * e.params.v_speed;
  double m = 0.0, a = 0.0;
  Vec3 p;
  for (std::size_t i = 0; i < e.size(); ++i) {
    m += n[i];
    a += n[i] * norm2(e.agents[i].v);
    p += n[i] * e.agents[i].v;
  }
  // Clamp the rounding-level negative values that occur at exact alignment.
  return std::max(0.0, e.params.J / (2.0 * N * v2) * (m * a - norm2(p)));
}

double potential_energy_constrained(const Ensemble& e) {
  const auto n = energy_weights(e);
  const double N = static_cast<double>(e.size());
  const double v2 = e.params.v_speed * e.params.v_speed;
  double m = 0.0;
  Vec3 p;
  for (std::size_t i = 0; i < e.size(); ++i) {
    m += n[i];
    p += n[i] * e.agents[i].v;
  }
  const Vec3 w = p / N;
  return e.params.J / (2.0 * N) * m * m - e.params.J * N / (2.0 * v2) * norm2(w);
}

double kinetic_energy(const Ensemble& e) {
  double k = 0.0;
  for (const Vec3& s : sigma_of(e)) k += norm2(s);
  return 0.5 * k;
}

double total_energy(const Ensemble& e) { return kinetic_energy(e) + potential_energy(e); }

Vec3 total_spin(const Ensemble& e) {
  Vec3 s;
  for (const auto& a : e.agents) s += a.s;
  return s;
}

std::vector<Vec3> sigma_of(const Ensemble& e) {
  const double v2 = e.params.v_speed * e.params.v_speed;
  std::vector<Vec3> out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& a = e.agents[i];
    if (!(norm2(a.v) > 0.0))
      throw DomainError("sigma_of: zero velocity at agent " + std::to_string(i));
    const double al = i < e.alpha.size() ? e.alpha[i] : dot(a.v, a.s);
    out[i] = a.s - (al / v2) * a.v;
  }
  return out;
}

double max_sigma(const Ensemble& e) {
  double m = 0.0;
  for (const Vec3& s : sigma_of(e)) m = std::max(m, norm(s));
  return m;
}

ConstraintDrift constraint_drift(const Ensemble& e) {
  ConstraintDrift d;
  const double v = e.params.v_speed;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const auto& a = e.agents[i];
    d.speed_rel = std::max(d.speed_rel, std::abs(norm(a.v) - v) / v);
    d.vs_abs = std::max(d.vs_abs, std::abs(dot(a.v, a.s) - e.alpha[i]));
  }
  return d;
}

}  // namespace ism
