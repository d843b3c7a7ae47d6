#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "tramp/audio.hpp"

namespace tramp {

using Complex = std::complex<double>;

enum class WindowType { hann, rectangular };
enum class ChannelOrder { wxyz, ambix };

struct FrontendConfig {
  double frame_len = 0.04;  // seconds
  double overlap = 0.5;
  double f_lo = 400.0;
  double f_hi = 7000.0;
  WindowType window = WindowType::hann;
  ChannelOrder channel_order = ChannelOrder::wxyz;
  // Plane-wave ratio (|X|^2+|Y|^2+|Z|^2)/|W|^2 of the encoding; 3 for N3D.
  double encoding_constant = 3.0;

  std::size_t frame_samples(int sample_rate) const;
  std::size_t hop_samples(int sample_rate) const;
  double hop_seconds(int sample_rate) const;

  // Throws ConfigError on out-of-range fields.
  void validate(int sample_rate) const;
};

struct FoaBin {
  double frequency = 0.0;
  Complex w, x, y, z;
};

struct FoaSpectrum {
  std::size_t frame_index = 0;
  double time = 0.0;  // frame center, seconds
  std::vector<FoaBin> bins;
};

// Forward real DFT of one frame, bins 0..N/2. Backed by FFTW.
class RealFft {
 public:
  explicit RealFft(std::size_t size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;
  RealFft(RealFft&&) noexcept;
  RealFft& operator=(RealFft&&) noexcept;

  std::size_t size() const { return size_; }
  void forward(std::span<const double> input, std::span<Complex> output);
  std::vector<Complex> forward(std::span<const double> input);

 private:
  struct Plan;
  std::size_t size_;
  std::unique_ptr<Plan> plan_;
};

std::vector<double> make_window(WindowType type, std::size_t n);

// Streaming STFT over FOA audio. Samples are pushed in arbitrary block sizes;
// each completed frame is returned in order. Memory is one frame per channel.
class StftStream {
 public:
  StftStream(const FrontendConfig& config, int sample_rate);

  // channels: four FOA channels in the configured input order, equal length.
  std::vector<FoaSpectrum> push(std::span<const std::vector<double>> channels);

  std::size_t frame_samples() const { return frame_; }
  std::size_t hop_samples() const { return hop_; }
  int sample_rate() const { return sample_rate_; }
  // Frequencies of the retained bins.
  const std::vector<double>& bin_frequencies() const { return freqs_; }

 private:
  FoaSpectrum transform_current();

  FrontendConfig config_;
  int sample_rate_;
  std::size_t frame_;
  std::size_t hop_;
  std::size_t first_bin_ = 0;
  std::vector<double> freqs_;
  std::vector<double> window_;
  std::array<std::vector<double>, 4> pending_;  // W, X, Y, Z
  std::size_t frames_emitted_ = 0;
  RealFft fft_;
  std::vector<double> scratch_;
  std::array<std::vector<Complex>, 4> spectra_;
};

// Whole-buffer STFT; trailing partial frame dropped.
std::vector<FoaSpectrum> stft(const AudioBuffer& buffer, const FrontendConfig& config);

}  // namespace tramp
