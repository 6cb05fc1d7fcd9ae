#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ism/geometry.hpp"

namespace ism {

// Uniform cell hash over open space. With cell size >= R, every point within
// distance R of a query lies in the 27 cells around the query's cell.
class SpatialIndex {
 public:
  SpatialIndex(const std::vector<Vec3>& points, double cell_size);

  // Indices j (ascending) with |points[j] - x| < radius. radius must not
  // exceed cell_size().
  std::vector<std::size_t> query(const Vec3& x, double radius) const;
  void query(const Vec3& x, double radius, std::vector<std::size_t>& out) const;

  double cell_size() const { return cell_; }

 private:
  struct Key {
    std::int64_t i, j, k;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const;
  };

  Key key_of(const Vec3& x) const;

  const std::vector<Vec3>& points_;
  double cell_;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> cells_;
};

}  // namespace ism
