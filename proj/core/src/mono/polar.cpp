#include "ism/mono/polar.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ism/error.hpp"

namespace ism::mono {

PolarField2D polar_rotating_state(const std::function<double(double)>& g, std::size_t n, double half_width,
                                  double v, double j, double q) {
  if (n < 4) throw DomainError("polar grid needs at least 4 cells per side");
  PolarField2D f;
  f.n = n;
  f.half_width = half_width;
  f.v = v;
  f.j = j;
  f.q = q;
  f.rho.resize(n * n);
  f.theta.resize(n * n);
  f.sigma.resize(n * n);
  const double reach = 2.0 * f.h();
  for (std::size_t iy = 0; iy < n; ++iy)
    for (std::size_t ix = 0; ix < n; ++ix) {
      const double x = f.x_of(ix), y = f.x_of(iy);
      const double r = std::hypot(x, y);
      const double gr = g(r);
      if (gr != 0.0 && r <= reach)
        throw DomainError("polar_rotating_state: density support reaches the origin");
      const std::size_t k = iy * n + ix;
      f.rho[k] = gr;
      f.theta[k] = std::atan2(y, x);
      f.sigma[k] = v / r;
    }
  return f;
}

namespace {

double wrap(double a) {
  const double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a, two_pi);
  if (a > std::numbers::pi) a -= two_pi;
  if (a <= -std::numbers::pi) a += two_pi;
  return a;
}

}  // namespace

PolarResidual polar_residual(const PolarField2D& f, double core_fraction) {
  PolarResidual out;
  const std::size_t n = f.n;
  const double h = f.h();
  double rmax = 0.0;
  for (double r : f.rho) rmax = std::max(rmax, r);
  if (rmax <= 0.0) return out;
  const double cut = core_fraction * rmax;

  auto id = [n](std::size_t ix, std::size_t iy) { return iy * n + ix; };
  auto Ux = [](double th) { return -std::sin(th); };
  auto Uy = [](double th) { return std::cos(th); };

  for (std::size_t iy = 0; iy < n; ++iy)
    for (std::size_t ix = 0; ix < n; ++ix) {
      const std::size_t k = id(ix, iy);
      if (f.rho[k] < cut) continue;
      const std::size_t xp = id((ix + 1) % n, iy), xm = id((ix + n - 1) % n, iy);
      const std::size_t yp = id(ix, (iy + 1) % n), ym = id(ix, (iy + n - 1) % n);

      const double div_rhoU = (f.rho[xp] * Ux(f.theta[xp]) - f.rho[xm] * Ux(f.theta[xm])) / (2 * h) +
                              (f.rho[yp] * Uy(f.theta[yp]) - f.rho[ym] * Uy(f.theta[ym])) / (2 * h);
      const double thx = wrap(f.theta[xp] - f.theta[xm]) / (2 * h);
      const double thy = wrap(f.theta[yp] - f.theta[ym]) / (2 * h);
      const double sgx = (f.sigma[xp] - f.sigma[xm]) / (2 * h);
      const double sgy = (f.sigma[yp] - f.sigma[ym]) / (2 * h);
      const double ux = Ux(f.theta[k]), uy = Uy(f.theta[k]);

      // Face fluxes rho_face^2 * d theta / dn with the face density averaged.
      auto flux = [&](std::size_t a, std::size_t b) {
        const double rf = 0.5 * (f.rho[a] + f.rho[b]);
        return rf * rf * wrap(f.theta[b] - f.theta[a]) / h;
      };
      const double div_flux = (flux(k, xp) - flux(xm, k) + flux(k, yp) - flux(ym, k)) / h;

      const double d_rho = -f.v * div_rhoU;
      const double d_theta = -f.v * (ux * thx + uy * thy) + f.sigma[k];
      const double d_sigma =
          -f.v * (ux * sgx + uy * sgy) + f.j / std::pow(f.rho[k], 1.0 + f.q) * div_flux;

      out.rho = std::max(out.rho, std::abs(d_rho));
      out.theta = std::max(out.theta, std::abs(d_theta));
      out.sigma = std::max(out.sigma, std::abs(d_sigma));
      ++out.cells;
    }
  out.max = std::max({out.rho, out.theta, out.sigma});
  return out;
}

}  // namespace ism::mono
