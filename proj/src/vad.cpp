#include "tramp/vad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <complex>

#include "tramp/errors.hpp"

namespace tramp {

NoiseState::NoiseState(std::size_t bins, std::size_t window_frames, const VadConfig& config)
    : config_(config),
      window_(std::max<std::size_t>(window_frames, 1)),
      smoothed_(bins, 0.0),
      noise_(bins, kPowerFloor),
      history_(window_ * bins, 0.0) {
  if (!(config.smoothing >= 0.0 && config.smoothing < 1.0)) throw ConfigError("vad.smoothing must lie in [0, 1)");
  if (!(config.bias_compensation > 0.0)) throw ConfigError("vad.bias_compensation must be positive");
}

NoiseState NoiseState::for_hop(std::size_t bins, double hop_seconds, const VadConfig& config) {
  if (!(hop_seconds > 0.0)) throw ConfigError("hop duration must be positive");
  const auto frames = static_cast<std::size_t>(std::lround(config.min_window / hop_seconds));
  return NoiseState(bins, frames, config);
}

void NoiseState::update(std::span<const Complex> w_bins) {
  const std::size_t bins = noise_.size();
  if (w_bins.size() != bins) {
    throw ConfigError("noise tracker expects " + std::to_string(bins) + " bins, got " +
                      std::to_string(w_bins.size()));
  }
  // Running mean until the recursion's memory is reached; only then does the
  // smoothed power enter the minimum history, so a lone early periodogram
  // cannot pin the minimum low for a whole window.
  const double n = static_cast<double>(frames_);
  const double a = std::min(config_.smoothing, n / (n + 1.0));
  for (std::size_t k = 0; k < bins; ++k) {
    smoothed_[k] = a * smoothed_[k] + (1.0 - a) * std::norm(w_bins[k]);
  }
  ++frames_;
  if (frames_ < warmup_frames()) {
    for (std::size_t k = 0; k < bins; ++k) noise_[k] = std::max(smoothed_[k], kPowerFloor);
    return;
  }
  const std::size_t pushed = frames_ - warmup_frames();
  std::copy(smoothed_.begin(), smoothed_.end(), history_.begin() + (pushed % window_) * bins);
  const std::size_t filled = std::min(pushed + 1, window_);

  for (std::size_t k = 0; k < bins; ++k) {
    double minimum = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < filled; ++s) minimum = std::min(minimum, history_[s * bins + k]);
    noise_[k] = std::max(std::min(smoothed_[k], config_.bias_compensation * minimum), kPowerFloor);
  }
}

std::size_t NoiseState::warmup_frames() const {
  const double a = config_.smoothing;
  return 1 + static_cast<std::size_t>(std::ceil(a / (1.0 - a) - 1e-9));
}

VadFrame frame_vad(const NoiseState& state, std::span<const Complex> w_bins, double threshold_db,
                   std::size_t frame_index) {
  VadFrame out;
  out.frame_index = frame_index;
  if (w_bins.size() != state.bin_count()) {
    throw ConfigError("VAD expects " + std::to_string(state.bin_count()) + " bins, got " +
                      std::to_string(w_bins.size()));
  }
  out.gamma_bins.resize(w_bins.size());
  double sum = 0.0;
  for (std::size_t k = 0; k < w_bins.size(); ++k) {
    const double g = std::norm(w_bins[k]) / std::max(state.noise_power()[k], kPowerFloor) - 1.0;
    out.gamma_bins[k] = std::max(g, -1.0);
    sum += std::max(g, 0.0);
  }
  // Uniform bins: the band-normalized integral reduces to the mean over bins.
  out.gamma_frame = w_bins.empty() ? 0.0 : sum / static_cast<double>(w_bins.size());
  out.active = !w_bins.empty() && 10.0 * std::log10(out.gamma_frame + kPowerFloor) >= threshold_db;
  return out;
}

std::vector<Complex> w_channel(const FoaSpectrum& frame) {
  std::vector<Complex> w;
  w.reserve(frame.bins.size());
  for (const auto& b : frame.bins) w.push_back(b.w);
  return w;
}

}  // namespace tramp
