#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tramp/geometry.hpp"

namespace tramp {

inline constexpr std::size_t kLebedevNodeCount = 974;

namespace detail {
extern const std::array<std::array<double, 3>, kLebedevNodeCount> kLebedev974;
}

struct Neighbor {
  std::uint32_t node = 0;
  double distance = 0.0;  // angular, radians
};

// Direction dictionary on the unit sphere with K-nearest-node lists.
// Each list starts with the node itself (distance 0) and is sorted by
// angular distance, ties by node index.
class SphericalGrid {
 public:
  SphericalGrid(std::vector<Vec3> nodes, std::size_t neighbor_count);

  // 974-node Lebedev set, shared immutable instance per neighbor count.
  static const SphericalGrid& lebedev974(std::size_t neighbor_count = 50);

  std::size_t size() const { return nodes_.size(); }
  std::size_t neighbor_count() const { return k_; }
  const Vec3& node(std::size_t i) const { return nodes_[i]; }
  const Direction& direction(std::size_t i) const { return directions_[i]; }
  const std::vector<Vec3>& nodes() const { return nodes_; }
  std::span<const Neighbor> neighbors(std::size_t i) const;

  // Nearest node by angular distance; greedy descent over neighbor lists from
  // a coarse lookup seed. Lower index wins exact ties.
  std::uint32_t nearest(const Vec3& direction) const;
  // Exhaustive scan over all nodes.
  std::uint32_t nearest_exhaustive(const Vec3& direction) const;

 private:
  std::uint32_t seed_node(const Vec3& unit) const;

  std::vector<Vec3> nodes_;
  std::vector<Direction> directions_;
  std::size_t k_;
  std::vector<Neighbor> neighbors_;  // size() * k_
  std::size_t lut_az_ = 0;
  std::size_t lut_el_ = 0;
  std::vector<std::uint32_t> lut_;
};

}  // namespace tramp
