#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ism/model.hpp"
#include "ism/rng.hpp"

namespace ism::support {

// Random cloud in [0, box]^3 with unit-speed-scaled velocities and tangential
// spins of the given scale.
Ensemble random_ensemble(std::size_t N, const KernelSpec& k, double box, double spin_scale, std::uint64_t seed,
                         double v = 1.0, double J = 1.0);

// Points on an integer lattice (many equal distances), jittered velocities.
Ensemble lattice_ensemble(std::size_t side, const KernelSpec& k, std::uint64_t seed);

// Fresh empty directory under the system temp dir.
std::string temp_dir(const std::string& tag);

std::string read_file(const std::string& path);

}  // namespace ism::support
