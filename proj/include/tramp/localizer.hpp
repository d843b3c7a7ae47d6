#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tramp/frontend.hpp"
#include "tramp/grid.hpp"
#include "tramp/vad.hpp"

namespace tramp {

struct LocalizerConfig {
  double window_seconds = 1.0;   // histogram memory
  double select_threshold = 0.3; // on the min-max normalized histogram
  double filter_variance = 0.2;  // rad^2
  std::size_t filter_support = 50;
  std::size_t max_observations = 4;

  void validate() const;
};

// Re(W* [X, Y, Z]).
Vec3 pseudointensity(const FoaBin& bin);

// (|X|^2 + |Y|^2 + |Z|^2) / |W|^2, absent when |W|^2 <= kPowerFloor.
std::optional<double> plane_wave_ratio(const FoaBin& bin);

// Histogram weight of one bin: max(gamma, 0) / (1 + |C - R|)^2.
double bin_weight(double gamma, double ratio, double encoding_constant);

// Sliding-window DOA histogram over the grid nodes. The aggregate is re-summed
// from the per-frame ring on every push, so it always equals the ring sum.
class SphericalHistogram {
 public:
  SphericalHistogram(const SphericalGrid& grid, std::size_t window_frames);

  // Adds one frame. vad.gamma_bins must align with frame.bins.
  void accumulate(const FoaSpectrum& frame, const VadFrame& vad, double encoding_constant);

  // Adds a precomputed frame contribution list (node, weight).
  void push(std::vector<std::pair<std::uint32_t, double>> contributions);

  const std::vector<double>& values() const { return aggregate_; }
  std::vector<double> normalized() const;  // min-max to [0, 1]; all zero if degenerate
  std::size_t window_frames() const { return window_; }
  std::size_t frames_held() const { return ring_.size(); }
  const SphericalGrid& grid() const { return *grid_; }

 private:
  const SphericalGrid* grid_;
  std::size_t window_;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> ring_;
  std::size_t next_ = 0;
  std::vector<double> aggregate_;
};

struct Observation {
  Direction direction;
  std::uint32_t node = 0;
  double score = 0.0;  // prior probability of not being a false alarm, [0, 1]
};

// Peak picking on histogram values: normalize, threshold, smooth with a
// unit-peak Gaussian over each node's neighbor list (restricted to selected
// nodes), keep strict local maxima, return at most max_observations ranked by
// smoothed response. Scores are the response clamped to [0, 1].
std::vector<Observation> pick_observations(const std::vector<double>& values, const SphericalGrid& grid,
                                           const LocalizerConfig& config = {});

}  // namespace tramp
