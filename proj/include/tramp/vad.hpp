#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tramp/frontend.hpp"

namespace tramp {

inline constexpr double kPowerFloor = 1e-12;

struct VadConfig {
  double threshold_db = 7.0;
  double smoothing = 0.8;         // periodogram recursion coefficient
  double min_window = 1.5;        // seconds spanned by the minimum tracker
  double bias_compensation = 1.5;
  // When set, the tracker only advances on active frames and inactive frames
  // report the held estimates.
  bool gate_tracker = true;
};

// Per-bin noise power tracker on the W channel: recursively smoothed
// periodogram, sliding minimum over a fixed window, bias-compensated, and the
// estimate is the smaller of the smoothed periodogram and compensated minimum.
class NoiseState {
 public:
  NoiseState(std::size_t bins, std::size_t window_frames, const VadConfig& config = {});

  // Window length from hop duration.
  static NoiseState for_hop(std::size_t bins, double hop_seconds, const VadConfig& config = {});

  void update(std::span<const Complex> w_bins);

  std::size_t bin_count() const { return noise_.size(); }
  std::size_t window_frames() const { return window_; }
  // Frames processed before the minimum history starts to fill.
  std::size_t warmup_frames() const;
  const std::vector<double>& noise_power() const { return noise_; }
  const std::vector<double>& smoothed_power() const { return smoothed_; }
  bool initialized() const { return frames_ > 0; }

 private:
  VadConfig config_;
  std::size_t window_;
  std::size_t frames_ = 0;
  std::vector<double> smoothed_;
  std::vector<double> noise_;
  std::vector<double> history_;  // window_ x bins ring of smoothed power
};

struct VadFrame {
  std::size_t frame_index = 0;
  std::vector<double> gamma_bins;  // a-posteriori SNR, >= -1
  double gamma_frame = 0.0;
  bool active = false;
};

// Band-averaged floored a-posteriori SNR, compared against threshold_db.
VadFrame frame_vad(const NoiseState& state, std::span<const Complex> w_bins, double threshold_db = 7.0,
                   std::size_t frame_index = 0);

// Helper extracting the W column of a spectrum.
std::vector<Complex> w_channel(const FoaSpectrum& frame);

}  // namespace tramp
