#include "ism/mono/field1d.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ism/error.hpp"

namespace ism::mono {

MonokineticField1D MonokineticField1D::uniform(std::size_t cells, double length, double rho0, Vec3 u0, double j,
                                               double q, double v) {
  if (cells < 3) throw ConfigError("monokinetic grid needs at least 3 cells");
  if (!(norm(u0) > 0.0)) throw ConfigError("monokinetic: base velocity must be nonzero");
  MonokineticField1D f;
  f.length = length;
  f.j = j;
  f.q = q;
  f.v = v;
  f.rho.assign(cells, rho0);
  f.u.assign(cells, (v / norm(u0)) * u0);
  f.sigma.assign(cells, Vec3{});
  f.validate();
  return f;
}

void MonokineticField1D::validate() const {
  const std::size_t m = rho.size();
  if (m < 3) throw ConfigError("monokinetic grid needs at least 3 cells");
  if (u.size() != m || sigma.size() != m) throw ConfigError("monokinetic: field sizes differ");
  if (!(length > 0.0)) throw ConfigError("monokinetic: length must be positive");
  if (!(v > 0.0)) throw ConfigError("monokinetic: v must be positive");
  if (!(j >= 0.0)) throw ConfigError("monokinetic: j must be >= 0");
  for (std::size_t i = 0; i < m; ++i) {
    if (!(rho[i] >= 0.0)) throw ConfigError("monokinetic: negative density at cell " + std::to_string(i));
    if (std::abs(norm(u[i]) - v) > 1e-10 * v)
      throw ConfigError("monokinetic: |u| != v at cell " + std::to_string(i));
  }
}

double linear_wave_speed(double j, double rho, double q) { return std::sqrt(j * std::pow(rho, 1.0 - q)); }

namespace {

double floor_value(const MonokineticField1D& f) {
  double mean = 0.0;
  for (double r : f.rho) mean += r;
  mean /= static_cast<double>(f.rho.size());
  return f.floor_fraction * mean;
}

}  // namespace

FieldRates pde_rhs_1d(const MonokineticField1D& f) {
  const std::size_t m = f.cells();
  const double h = f.dx();
  const double i2h = 1.0 / (2.0 * h), ih2 = 1.0 / (h * h);
  const double rf = floor_value(f);
  const double c = f.j / (f.v * f.v);
  FieldRates r;
  r.rho.resize(m);
  r.u.resize(m);
  r.sigma.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t ip = (i + 1) % m, im = (i + m - 1) % m;
    const double a = f.u[i].x;  // advection speed along x1
    r.rho[i] = -(f.rho[ip] * f.u[ip].x - f.rho[im] * f.u[im].x) * i2h;
    r.u[i] = -a * ((f.u[ip] - f.u[im]) * i2h) + cross(f.sigma[i], f.u[i]);
    const Vec3 lap = (f.rho[ip] * f.u[ip] - 2.0 * f.rho[i] * f.u[i] + f.rho[im] * f.u[im]) * ih2;
    const double coupling = f.q == 0.0 ? c : c / std::pow(std::max(f.rho[i], rf), f.q);
    r.sigma[i] = -a * ((f.sigma[ip] - f.sigma[im]) * i2h) + coupling * cross(f.u[i], lap);
  }
  return r;
}

double max_stable_dt(const MonokineticField1D& f, double cfl) {
  const double rf = floor_value(f);
  double cmax = 0.0;
  for (double r : f.rho) cmax = std::max(cmax, linear_wave_speed(f.j, std::max(r, rf), f.q));
  return cfl * f.dx() / (f.v + cmax);
}

void pde_step_1d(MonokineticField1D& f, double dt, double cfl) {
  const double admissible = max_stable_dt(f, cfl);
  if (!(dt > 0.0) || dt > admissible * (1.0 + 1e-12)) {
    std::ostringstream os;
    os.precision(17);
    os << "CFL violation: dt = " << dt << " exceeds admissible dt = " << admissible;
    throw NumericalError(os.str());
  }
  const std::size_t m = f.cells();
  auto renormalize = [&](MonokineticField1D& g) {
    for (auto& u : g.u) u *= g.v / norm(u);
  };
  auto axpy = [&](const MonokineticField1D& base, const FieldRates& k, double s) {
    MonokineticField1D g = base;
    for (std::size_t i = 0; i < m; ++i) {
      g.rho[i] += s * k.rho[i];
      g.u[i] += s * k.u[i];
      g.sigma[i] += s * k.sigma[i];
    }
    renormalize(g);
    return g;
  };
  const FieldRates k1 = pde_rhs_1d(f);
  const FieldRates k2 = pde_rhs_1d(axpy(f, k1, 0.5 * dt));
  const FieldRates k3 = pde_rhs_1d(axpy(f, k2, 0.5 * dt));
  const FieldRates k4 = pde_rhs_1d(axpy(f, k3, dt));
  const double w = dt / 6.0;
  for (std::size_t i = 0; i < m; ++i) {
    f.rho[i] += w * (k1.rho[i] + 2.0 * k2.rho[i] + 2.0 * k3.rho[i] + k4.rho[i]);
    f.u[i] += w * (k1.u[i] + 2.0 * k2.u[i] + 2.0 * k3.u[i] + k4.u[i]);
    f.sigma[i] += w * (k1.sigma[i] + 2.0 * k2.sigma[i] + 2.0 * k3.sigma[i] + k4.sigma[i]);
  }
  renormalize(f);
  f.t += dt;
  for (std::size_t i = 0; i < m; ++i)
    if (!std::isfinite(f.rho[i]) || !is_finite(f.u[i]) || !is_finite(f.sigma[i]))
      throw NumericalError("blow-up in monokinetic field at cell " + std::to_string(i) +
                           ", t = " + std::to_string(f.t));
}

double total_mass(const MonokineticField1D& f) {
  double s = 0.0;
  for (double r : f.rho) s += r;
  return s * f.dx();
}

Vec3 total_rho_sigma(const MonokineticField1D& f) {
  Vec3 s;
  for (std::size_t i = 0; i < f.cells(); ++i) s += f.rho[i] * f.sigma[i];
  return s * f.dx();
}

}  // namespace ism::mono
