#include "ism/spatial_index.hpp"

#include <algorithm>
#include <cmath>

#include "ism/error.hpp"

namespace ism {

std::size_t SpatialIndex::KeyHash::operator()(const Key& k) const {
  std::uint64_t h = static_cast<std::uint64_t>(k.i) * 0x9E3779B97F4A7C15ULL;
  h ^= static_cast<std::uint64_t>(k.j) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
  h ^= static_cast<std::uint64_t>(k.k) * 0x165667B19E3779F9ULL + (h << 6) + (h >> 2);
  return static_cast<std::size_t>(h);
}

SpatialIndex::SpatialIndex(const std::vector<Vec3>& points, double cell_size)
    : points_(points), cell_(cell_size) {
  if (!(cell_size > 0.0) || !std::isfinite(cell_size))
    throw DomainError("SpatialIndex: cell size must be positive");
  cells_.reserve(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (!is_finite(points[j])) throw NumericalError("SpatialIndex: non-finite position");
    cells_[key_of(points[j])].push_back(j);  // ascending within each cell
  }
}

SpatialIndex::Key SpatialIndex::key_of(const Vec3& x) const {
  return {static_cast<std::int64_t>(std::floor(x.x / cell_)),
          static_cast<std::int64_t>(std::floor(x.y / cell_)),
          static_cast<std::int64_t>(std::floor(x.z / cell_))};
}

std::vector<std::size_t> SpatialIndex::query(const Vec3& x, double radius) const {
  std::vector<std::size_t> out;
  query(x, radius, out);
  return out;
}

void SpatialIndex::query(const Vec3& x, double radius, std::vector<std::size_t>& out) const {
  if (radius > cell_) throw DomainError("SpatialIndex::query: radius exceeds cell size");
  out.clear();
  const Key c = key_of(x);
  for (std::int64_t di = -1; di <= 1; ++di)
    for (std::int64_t dj = -1; dj <= 1; ++dj)
      for (std::int64_t dk = -1; dk <= 1; ++dk) {
        auto it = cells_.find({c.i + di, c.j + dj, c.k + dk});
        if (it == cells_.end()) continue;
        for (std::size_t j : it->second)
          if (distance(points_[j], x) < radius) out.push_back(j);
      }
  std::sort(out.begin(), out.end());
}

}  // namespace ism
