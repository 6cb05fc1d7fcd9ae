#pragma once

#include <cstddef>

#include "ism/config.hpp"
#include "ism/model.hpp"
#include "ism/mono/field1d.hpp"
#include "ism/mono/line.hpp"
#include "ism/mono/polar.hpp"
#include "ism/rng.hpp"

namespace ism {

// Agent initializers. Positions are uniform in [0, box]^3; spins are
// tangential (alpha_i = 0).

// v uniform on the sphere of radius v, s tangential Gaussian with standard
// deviation spin_scale per tangent direction.
Ensemble uniform_sphere(const ModelParams& p, const KernelSpec& k, double box, double spin_scale, Rng& rng);

// v = v (e3 + delta g) / |e3 + delta g|, s = delta P_perp(g'), g, g' standard
// normal. delta = 0 gives all v_i = v e3 and s_i = 0.
Ensemble aligned_perturbed(const ModelParams& p, const KernelSpec& k, double delta, double box, Rng& rng);

// The first round(fraction N) agents perturbed around +e3, the rest around -e3.
Ensemble two_groups(const ModelParams& p, const KernelSpec& k, double fraction, double delta, double box, Rng& rng);

// Product equilibrium at coupling beta_J (beta = beta_J / J); positions zero.
Ensemble equilibrium(const ModelParams& p, const KernelSpec& k, double beta_J, Rng& rng);

// Uniform density rho0 and flow v e3, with the transverse travelling wave
//   u_2 = amplitude sin(kx), sigma_1 = amplitude c k cos(kx) / v,
// k = 2 pi mode / L and c the linear wave speed; |u| renormalized to v.
mono::MonokineticField1D uniform_field_perturbed(const ContinuumConfig& c, int mode, double amplitude);

// Rotating state with rho = bump(|r - radius| / width).
mono::PolarField2D rotating_ring(const ContinuumConfig& c, double radius, double width);

struct ChainInit {
  mono::ArcCurve curve;
  mono::TravelingChain traveling;
};

ChainInit circle_chain(const ContinuumConfig& c, double R);
ChainInit helix_chain(const ContinuumConfig& c, double kappa, double tau);

// Kernel from the config; multiplicative weights are drawn from rng when the
// config gives only a range.
KernelSpec make_kernel(const ScenarioConfig& c, Rng& rng);

// Dispatch on c.init.name with documented defaults for missing parameters.
// Throws ConfigError for an initializer that does not match the model.
Ensemble init_ensemble(const ScenarioConfig& c, Rng& rng);
mono::MonokineticField1D init_field(const ScenarioConfig& c);
mono::PolarField2D init_polar(const ScenarioConfig& c);
ChainInit init_chain(const ScenarioConfig& c);

// Initializer parameter with its default.
double init_param(const ScenarioConfig& c, const char* key);

}  // namespace ism
