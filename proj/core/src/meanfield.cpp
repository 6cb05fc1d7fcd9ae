#include "ism/meanfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ism/error.hpp"

namespace ism::meanfield {

namespace {

// Taylor coefficients of h and h' in powers of x^2 (from the Bernoulli
// numbers, 2^(2n) B_2n / (2n)!). Used below x = 1, where coth x - 1/x loses
// digits to cancellation; the series converges like (x / pi)^(2n).
constexpr double kHSeries[] = {
    0.33333333333333331,     -0.022222222222222223,   0.0021164021164021165,   -0.00021164021164021165,
    2.1377799155576935e-05,  -2.1644042808063972e-06, 2.1925947851873778e-07,  -2.2214608789979678e-08,
    2.2507846516808994e-09,  -2.2805151204592183e-10, 2.3106432599002624e-11,  -2.3411706819824882e-12,
    2.3721017400233653e-13,  -2.4034415333307705e-14, 2.4351954029183367e-15,  -2.4673688045172075e-16,
    2.499967277122081e-17,   -2.5329964357406349e-18, 2.5664619702826288e-19};
constexpr double kHPrimeSeries[] = {
    0.33333333333333331,     -0.066666666666666666,   0.010582010582010581,    -0.0014814814814814814,
    0.00019240019240019239,  -2.3808447088870371e-05, 2.8503732207435913e-06,  -3.3321913184969521e-07,
    3.8263339078575285e-08,  -4.3329787288725148e-09, 4.8523508457905512e-10,  -5.3846925685597234e-11,
    5.9302543500584138e-12,  -6.4892921399930807e-13, 7.0620666684631768e-14,  -7.6488432940033437e-15,
    8.2498920145028672e-16,  -8.8654875250922214e-17, 9.4959092900457267e-18};

template <std::size_t K>
double even_series(const double (&c)[K], double x2) {
  double acc = 0.0;
  for (std::size_t k = K; k-- > 0;) acc = acc * x2 + c[k];
  return acc;
}

}  // namespace

double h(double x) {
  if (!(x >= 0.0)) throw DomainError("h: argument must be >= 0");
  if (x < 1.0) return x * even_series(kHSeries, x * x);
  if (x > 20.0) return 1.0 + 2.0 / std::expm1(2.0 * x) - 1.0 / x;
  return 1.0 / std::tanh(x) - 1.0 / x;
}

double h_prime(double x) {
  if (!(x >= 0.0)) throw DomainError("h_prime: argument must be >= 0");
  if (x < 1.0) return even_series(kHPrimeSeries, x * x);
  const double sh = std::sinh(x);
  return 1.0 / (x * x) - 1.0 / (sh * sh);
}

namespace {

// f(xi) = beta_J h(xi) - xi; positive roots are sign changes of f.
double f(double beta_J, double xi) { return beta_J * h(xi) - xi; }

double bisect(double beta_J, double a, double b) {
  double fa = f(beta_J, a);
  for (int it = 0; it < 200 && (b - a) > 1e-12 * b; ++it) {
    const double m = 0.5 * (a + b);
    const double fm = f(beta_J, m);
    if (fm == 0.0) return m;
    if ((fm > 0.0) == (fa > 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<double> positive_roots(double beta_J) {
  if (!(beta_J >= 0.0)) throw DomainError("beta_J must be >= 0");
  std::vector<double> roots;
  if (beta_J == 0.0) return roots;
  // h < 1, so every root lies below beta_J. Scan [1e-8, beta_J + 1] on a log grid.
  const int n = 4000;
  const double lo = 1e-8, hi = beta_J + 1.0;
  const double r = std::pow(hi / lo, 1.0 / n);
  double a = lo, fa = f(beta_J, a);
  for (int k = 1; k <= n; ++k) {
    const double b = lo * std::pow(r, k);
    const double fb = f(beta_J, b);
    if (fa == 0.0) roots.push_back(a);
    else if ((fa > 0.0) != (fb > 0.0) && fb != 0.0) roots.push_back(bisect(beta_J, a, b));
    a = b;
    fa = fb;
  }
  return roots;
}

EquilibriumSolution solve_selfconsistency(double beta_J, Vec3 direction) {
  EquilibriumSolution s;
  s.beta_J = beta_J;
  const double dn = norm(direction);
  if (!(dn > 0.0)) throw DomainError("solve_selfconsistency: zero direction");
  s.direction = direction / dn;
  const auto roots = positive_roots(beta_J);
  if (!roots.empty()) {
    s.xi = roots.back();
    s.gamma = s.xi / beta_J;
  }
  return s;
}

double critical_coupling(double lo, double hi, double tol) {
  auto on = [](double bj) { return solve_selfconsistency(bj).xi > 0.0; };
  if (on(lo) || !on(hi)) throw NumericalError("critical_coupling: onset not bracketed");
  while (hi - lo > tol) {
    const double m = 0.5 * (lo + hi);
    (on(m) ? hi : lo) = m;
  }
  return 0.5 * (lo + hi);
}

Vec3 selfconsistency_residual(const Vec3& w, double beta_J, double v_speed) {
  const double wn = norm(w);
  if (wn == 0.0) return {};
  return w - (v_speed * h(beta_J * wn / v_speed) / wn) * w;
}

double sample_vmf_cos(double kappa, double u) {
  if (kappa < 1e-12) return 2.0 * u - 1.0;
  // Inverse of the CDF (e^{kappa c} - e^{-kappa}) / (e^{kappa} - e^{-kappa}).
  const double c = 1.0 + std::log1p(u * std::expm1(-2.0 * kappa)) / kappa;
  return std::clamp(c, -1.0, 1.0);
}

Ensemble sample_equilibrium(const EquilibriumSolution& sol, double beta, const ModelParams& params,
                            std::size_t N, Rng& rng) {
  if (!(beta > 0.0)) throw DomainError("sample_equilibrium: beta must be positive");
  if (N == 0) throw DomainError("sample_equilibrium: N must be >= 1");
  const Vec3 e3 = sol.direction / norm(sol.direction);
  const Vec3 e1 = any_orthogonal(e3);
  const Vec3 e2 = cross(e3, e1);
  const double v = params.v_speed;
  const double sd = 1.0 / std::sqrt(beta);

  std::vector<AgentState> agents(N);
  for (auto& a : agents) {
    const double c = sample_vmf_cos(sol.xi, rng.uniform());
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    const Vec3 u = (s * std::cos(phi)) * e1 + (s * std::sin(phi)) * e2 + c * e3;
    a.v = v * (u / norm(u));
    const Vec3 t1 = any_orthogonal(a.v);
    const Vec3 t2 = cross(a.v / norm(a.v), t1);
    a.s = (sd * rng.normal()) * t1 + (sd * rng.normal()) * t2;
  }
  ModelParams p = params;
  p.N = N;
  Ensemble out = Ensemble::make(p, KernelSpec::constant(1.0), std::move(agents));
  // Exact tangency: alpha_i = 0 by construction.
  for (auto& al : out.alpha) al = 0.0;
  return out;
}

double free_energy_product(double kappa, double beta, double J, double v_speed) {
  if (!(beta > 0.0) || !(v_speed > 0.0)) throw DomainError("free_energy_product: beta, v must be positive");
  if (!(kappa >= 0.0)) throw DomainError("free_energy_product: kappa must be >= 0");
  const double L = h(kappa);
  // log(kappa / sinh kappa), stable at both ends.
  double log_k_over_sinh;
  if (kappa < 1e-4)
    log_k_over_sinh = -kappa * kappa / 6.0;
  else if (kappa > 20.0)
    log_k_over_sinh = std::log(2.0 * kappa) - kappa - std::log1p(-std::exp(-2.0 * kappa));
  else
    log_k_over_sinh = std::log(kappa / std::sinh(kappa));
  const double velocity_entropy = log_k_over_sinh - std::log(4.0 * std::numbers::pi * v_speed * v_speed) + kappa * L;
  const double spin_entropy = std::log(beta / (2.0 * std::numbers::pi)) - 1.0;
  const double spin_energy = 1.0;  // (beta/2) <|s|^2> with <|s|^2> = 2/beta
  const double bj = beta * J;
  return velocity_entropy + spin_entropy + spin_energy - 0.5 * bj * L * L + 0.5 * bj;
}

}  // namespace ism::meanfield
