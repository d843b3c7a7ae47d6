#include "tramp/localizer.hpp"

#include <algorithm>
#include <cmath>

#include "tramp/errors.hpp"

namespace tramp {

void LocalizerConfig::validate() const {
  if (!(window_seconds > 0.0)) throw ConfigError("localizer.window must be positive");
  if (!(select_threshold >= 0.0 && select_threshold < 1.0)) {
    throw ConfigError("localizer.threshold must lie in [0, 1)");
  }
  if (!(filter_variance > 0.0)) throw ConfigError("localizer.filter_variance must be positive");
  if (filter_support == 0 || filter_support > kLebedevNodeCount) {
    throw ConfigError("localizer.filter_support must lie in [1, 974]");
  }
  if (max_observations == 0) throw ConfigError("localizer.max_observations must be >= 1");
}

Vec3 pseudointensity(const FoaBin& bin) {
  const Complex wc = std::conj(bin.w);
  return {(wc * bin.x).real(), (wc * bin.y).real(), (wc * bin.z).real()};
}

std::optional<double> plane_wave_ratio(const FoaBin& bin) {
  const double w2 = std::norm(bin.w);
  if (w2 <= kPowerFloor) return std::nullopt;
  return (std::norm(bin.x) + std::norm(bin.y) + std::norm(bin.z)) / w2;
}

double bin_weight(double gamma, double ratio, double encoding_constant) {
  const double d = 1.0 + std::abs(encoding_constant - ratio);
  return std::max(gamma, 0.0) / (d * d);
}

SphericalHistogram::SphericalHistogram(const SphericalGrid& grid, std::size_t window_frames)
    : grid_(&grid), window_(window_frames), aggregate_(grid.size(), 0.0) {
  if (window_ == 0) throw ConfigError("histogram window must hold at least one frame");
  ring_.reserve(window_);
}

void SphericalHistogram::accumulate(const FoaSpectrum& frame, const VadFrame& vad, double encoding_constant) {
  if (vad.gamma_bins.size() != frame.bins.size()) {
    throw ConfigError("VAD frame and spectrum have different bin counts");
  }
  std::vector<std::pair<std::uint32_t, double>> contributions;
  for (std::size_t k = 0; k < frame.bins.size(); ++k) {
    const FoaBin& bin = frame.bins[k];
    const auto ratio = plane_wave_ratio(bin);
    if (!ratio) continue;
    const double weight = bin_weight(vad.gamma_bins[k], *ratio, encoding_constant);
    if (weight <= 0.0) continue;
    const Vec3 intensity = pseudointensity(bin);
    if (squared_norm(intensity) == 0.0) continue;
    contributions.emplace_back(grid_->nearest(intensity), weight);
  }
  push(std::move(contributions));
}

void SphericalHistogram::push(std::vector<std::pair<std::uint32_t, double>> contributions) {
  if (ring_.size() < window_) {
    ring_.push_back(std::move(contributions));
  } else {
    ring_[next_] = std::move(contributions);
  }
  next_ = (next_ + 1) % window_;
  std::fill(aggregate_.begin(), aggregate_.end(), 0.0);
  for (const auto& frame : ring_) {
    for (const auto& [node, weight] : frame) aggregate_[node] += weight;
  }
}

std::vector<double> SphericalHistogram::normalized() const {
  std::vector<double> out(aggregate_.size(), 0.0);
  const auto [lo, hi] = std::minmax_element(aggregate_.begin(), aggregate_.end());
  if (*hi <= *lo) return out;
  const double span = *hi - *lo;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = (aggregate_[i] - *lo) / span;
  return out;
}

std::vector<Observation> pick_observations(const std::vector<double>& values, const SphericalGrid& grid,
                                           const LocalizerConfig& config) {
  config.validate();
  if (values.size() != grid.size()) throw ConfigError("histogram size does not match grid");
  if (config.filter_support > grid.neighbor_count()) {
    throw ConfigError("grid neighbor lists shorter than the filter support");
  }
  std::vector<Observation> out;
  if (values.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double span = *hi_it - lo;
  if (!(span > 0.0)) return out;

  const std::size_t n = values.size();
  std::vector<double> level(n);
  std::vector<char> selected(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    level[i] = (values[i] - lo) / span;
    selected[i] = level[i] > config.select_threshold;
  }

  // Gaussian smoothing over selected neighbors; the kernel peaks at 1 on the
  // node itself, so the score grows with the mass of the peak.
  std::vector<double> filtered(n, 0.0);
  const double two_var = 2.0 * config.filter_variance;
  for (std::size_t i = 0; i < n; ++i) {
    if (!selected[i]) continue;
    for (const auto& nb : grid.neighbors(i).first(config.filter_support)) {
      if (selected[nb.node]) filtered[i] += std::exp(-nb.distance * nb.distance / two_var) * level[nb.node];
    }
  }

  std::vector<std::size_t> peaks;
  for (std::size_t i = 0; i < n; ++i) {
    if (!selected[i]) continue;
    bool peak = true;
    for (const auto& nb : grid.neighbors(i).first(config.filter_support)) {
      const std::size_t j = nb.node;
      if (j == i || !selected[j]) continue;
      if (filtered[j] > filtered[i] || (filtered[j] == filtered[i] && j < i)) {
        peak = false;
        break;
      }
    }
    if (peak) peaks.push_back(i);
  }
  // Ranked on the unclamped response so saturated peaks keep their order.
  std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return filtered[a] > filtered[b]; });
  for (std::size_t i : peaks) {
    out.push_back({grid.direction(i), static_cast<std::uint32_t>(i), std::clamp(filtered[i], 0.0, 1.0)});
  }
  if (out.size() > config.max_observations) out.resize(config.max_observations);
  return out;
}

}  // namespace tramp
