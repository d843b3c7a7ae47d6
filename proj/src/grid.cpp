#include "tramp/grid.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "tramp/errors.hpp"

namespace tramp {

namespace {

// Exact-tie aware comparison on cosine similarity.
bool closer(double dot_a, std::uint32_t a, double dot_b, std::uint32_t b) {
  return dot_a > dot_b || (dot_a == dot_b && a < b);
}

}  // namespace

SphericalGrid::SphericalGrid(std::vector<Vec3> nodes, std::size_t neighbor_count)
    : nodes_(std::move(nodes)), k_(neighbor_count) {
  if (nodes_.empty()) throw ConfigError("grid has no nodes");
  if (k_ == 0 || k_ > nodes_.size()) {
    throw ConfigError("neighbor count must lie in [1, " + std::to_string(nodes_.size()) + "]");
  }
  for (auto& n : nodes_) n = normalized(n);
  directions_.reserve(nodes_.size());
  for (const auto& n : nodes_) directions_.push_back(to_direction(n));

  const std::size_t count = nodes_.size();
  neighbors_.resize(count * k_);
  std::vector<Neighbor> all(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      all[j] = {static_cast<std::uint32_t>(j), i == j ? 0.0 : angle_between(nodes_[i], nodes_[j])};
    }
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k_), all.end(),
                      [](const Neighbor& a, const Neighbor& b) {
                        return a.distance < b.distance || (a.distance == b.distance && a.node < b.node);
                      });
    std::copy_n(all.begin(), k_, neighbors_.begin() + static_cast<std::ptrdiff_t>(i * k_));
  }

  lut_el_ = 64;
  lut_az_ = 128;
  lut_.resize(lut_el_ * lut_az_);
  for (std::size_t e = 0; e < lut_el_; ++e) {
    const double el = -std::numbers::pi / 2 + (static_cast<double>(e) + 0.5) * std::numbers::pi / lut_el_;
    for (std::size_t a = 0; a < lut_az_; ++a) {
      const double az = -std::numbers::pi + (static_cast<double>(a) + 0.5) * 2.0 * std::numbers::pi / lut_az_;
      lut_[e * lut_az_ + a] = nearest_exhaustive(to_cartesian({az, el}));
    }
  }
}

const SphericalGrid& SphericalGrid::lebedev974(std::size_t neighbor_count) {
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<SphericalGrid>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[neighbor_count];
  if (!slot) {
    std::vector<Vec3> nodes;
    nodes.reserve(kLebedevNodeCount);
    for (const auto& n : detail::kLebedev974) nodes.push_back({n[0], n[1], n[2]});
    slot = std::make_unique<SphericalGrid>(std::move(nodes), neighbor_count);
  }
  return *slot;
}

std::span<const Neighbor> SphericalGrid::neighbors(std::size_t i) const {
  return {neighbors_.data() + i * k_, k_};
}

std::uint32_t SphericalGrid::nearest_exhaustive(const Vec3& direction) const {
  std::uint32_t best = 0;
  double best_dot = dot(nodes_[0], direction);
  for (std::uint32_t i = 1; i < nodes_.size(); ++i) {
    const double d = dot(nodes_[i], direction);
    if (closer(d, i, best_dot, best)) {
      best = i;
      best_dot = d;
    }
  }
  return best;
}

std::uint32_t SphericalGrid::seed_node(const Vec3& unit) const {
  const Direction d = to_direction(unit);
  auto e = static_cast<std::ptrdiff_t>((d.elevation + std::numbers::pi / 2) / std::numbers::pi * lut_el_);
  auto a = static_cast<std::ptrdiff_t>((d.azimuth + std::numbers::pi) / (2.0 * std::numbers::pi) * lut_az_);
  e = std::clamp<std::ptrdiff_t>(e, 0, static_cast<std::ptrdiff_t>(lut_el_) - 1);
  a = std::clamp<std::ptrdiff_t>(a, 0, static_cast<std::ptrdiff_t>(lut_az_) - 1);
  return lut_[static_cast<std::size_t>(e) * lut_az_ + static_cast<std::size_t>(a)];
}

std::uint32_t SphericalGrid::nearest(const Vec3& direction) const {
  const Vec3 unit = normalized(direction);
  std::uint32_t current = seed_node(unit);
  double current_dot = dot(nodes_[current], unit);
  for (;;) {
    std::uint32_t best = current;
    double best_dot = current_dot;
    for (const auto& nb : neighbors(current)) {
      const double d = dot(nodes_[nb.node], unit);
      if (closer(d, nb.node, best_dot, best)) {
        best = nb.node;
        best_dot = d;
      }
    }
    if (best == current) return current;
    current = best;
    current_dot = best_dot;
  }
}

}  // namespace tramp
