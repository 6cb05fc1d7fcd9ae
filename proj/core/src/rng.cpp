#include "ism/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ism {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

namespace {

double to_open_unit(std::uint64_t bits) {
  // 53 random bits mapped to the open interval (0, 1).
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

void box_muller(double u1, double u2, double& z0, double& z1) {
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  z0 = r * std::cos(a);
  z1 = r * std::sin(a);
}

}  // namespace

double Rng::uniform() { return to_open_unit(eng_()); }

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double z0, z1;
  const double u1 = uniform();
  const double u2 = uniform();
  box_muller(u1, u2, z0, z1);
  spare_ = z1;
  has_spare_ = true;
  return z0;
}

Vec3 Rng::unit_vector() {
  const double z = uniform(-1.0, 1.0);
  const double phi = uniform(0.0, 2.0 * std::numbers::pi);
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

Vec3 RngStream::normal3(std::uint64_t agent) const {
  const std::uint64_t key = splitmix64(splitmix64(seed_ ^ splitmix64(agent)) + step_);
  double u[4];
  for (int k = 0; k < 4; ++k) u[k] = to_open_unit(splitmix64(key + static_cast<std::uint64_t>(k) * 0xD1B54A32D192ED03ULL));
  double a, b, c, d;
  box_muller(u[0], u[1], a, b);
  box_muller(u[2], u[3], c, d);
  (void)d;
  return {a, b, c};
}

}  // namespace ism
