#pragma once

#include <cstdint>
#include <random>

#include "ism/geometry.hpp"

namespace ism {

std::uint64_t splitmix64(std::uint64_t x);

// Sequential generator for initial data. Built on mt19937_64 (whose output
// sequence is fixed by the standard) with explicit uniform/normal transforms,
// so draws are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // Uniform on (0, 1).
  double uniform();
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double normal();
  Vec3 normal3() { return {normal(), normal(), normal()}; }
  // Uniform on the unit sphere.
  Vec3 unit_vector();
  std::uint64_t next_u64() { return eng_(); }

 private:
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Counter-based Brownian increments: the draw for (agent, step) is a pure
// function of (seed, agent, step), so results are independent of the order
// and thread in which agents are processed.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t step() const { return step_; }
  void advance() { ++step_; }

  // Three independent standard normals for this agent at the current step.
  Vec3 normal3(std::uint64_t agent) const;

 private:
  std::uint64_t seed_;
  std::uint64_t step_ = 0;
};

}  // namespace ism
