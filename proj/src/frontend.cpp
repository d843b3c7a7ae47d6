#include "tramp/frontend.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <mutex>
#include <numbers>

#include "tramp/errors.hpp"

namespace tramp {

std::size_t FrontendConfig::frame_samples(int sample_rate) const {
  return static_cast<std::size_t>(std::lround(frame_len * sample_rate));
}

std::size_t FrontendConfig::hop_samples(int sample_rate) const {
  const auto hop = static_cast<std::size_t>(std::lround(frame_len * (1.0 - overlap) * sample_rate));
  return std::max<std::size_t>(hop, 1);
}

double FrontendConfig::hop_seconds(int sample_rate) const {
  return static_cast<double>(hop_samples(sample_rate)) / sample_rate;
}

void FrontendConfig::validate(int sample_rate) const {
  if (sample_rate <= 0) throw ConfigError("sample rate must be positive");
  if (!(frame_len > 0.0)) throw ConfigError("frontend.frame_len must be positive");
  if (!(overlap >= 0.0 && overlap < 1.0)) throw ConfigError("frontend.overlap must lie in [0, 1)");
  if (!(f_lo > 0.0 && f_lo < f_hi)) throw ConfigError("frontend band requires 0 < f_lo < f_hi");
  if (f_hi > sample_rate / 2.0) {
    throw ConfigError("frontend.f_hi " + std::to_string(f_hi) + " Hz exceeds Nyquist for " +
                      std::to_string(sample_rate) + " Hz");
  }
  if (!(encoding_constant > 0.0)) throw ConfigError("frontend.encoding_constant must be positive");
  if (frame_samples(sample_rate) < 16) throw ConfigError("frame shorter than 16 samples");
}

// ---- FFT -------------------------------------------------------------------

namespace {
// The FFTW planner is not thread-safe; execution with distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

struct RealFft::Plan {
  double* in = nullptr;
  fftw_complex* out = nullptr;
  fftw_plan plan = nullptr;

  explicit Plan(std::size_t n) {
    in = fftw_alloc_real(n);
    out = fftw_alloc_complex(n / 2 + 1);
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in, out, FFTW_ESTIMATE);
  }
  ~Plan() {
    {
      std::lock_guard lock(planner_mutex());
      fftw_destroy_plan(plan);
    }
    fftw_free(in);
    fftw_free(out);
  }
};

RealFft::RealFft(std::size_t size) : size_(size), plan_(std::make_unique<Plan>(size)) {
  if (size == 0) throw ConfigError("FFT size must be positive");
}
RealFft::~RealFft() = default;
RealFft::RealFft(RealFft&&) noexcept = default;
RealFft& RealFft::operator=(RealFft&&) noexcept = default;

void RealFft::forward(std::span<const double> input, std::span<Complex> output) {
  if (input.size() != size_ || output.size() != size_ / 2 + 1) throw ConfigError("FFT buffer size mismatch");
  std::copy(input.begin(), input.end(), plan_->in);
  fftw_execute(plan_->plan);
  for (std::size_t k = 0; k < output.size(); ++k) output[k] = {plan_->out[k][0], plan_->out[k][1]};
}

std::vector<Complex> RealFft::forward(std::span<const double> input) {
  std::vector<Complex> out(size_ / 2 + 1);
  forward(input, out);
  return out;
}

std::vector<double> make_window(WindowType type, std::size_t n) {
  std::vector<double> w(n, 1.0);
  if (type == WindowType::hann) {
    // Periodic Hann: overlap-adds to a constant at 50% overlap.
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n));
    }
  }
  return w;
}

// ---- STFT ------------------------------------------------------------------

StftStream::StftStream(const FrontendConfig& config, int sample_rate)
    : config_(config),
      sample_rate_(sample_rate),
      frame_(config.frame_samples(sample_rate)),
      hop_(config.hop_samples(sample_rate)),
      fft_((config.validate(sample_rate), config.frame_samples(sample_rate))) {
  const double df = static_cast<double>(sample_rate) / static_cast<double>(frame_);
  const auto lo = static_cast<std::size_t>(std::ceil(config.f_lo / df - 1e-9));
  const auto hi = std::min(static_cast<std::size_t>(std::floor(config.f_hi / df + 1e-9)), frame_ / 2);
  first_bin_ = lo;
  for (std::size_t k = lo; k <= hi; ++k) freqs_.push_back(static_cast<double>(k) * df);
  window_ = make_window(config.window, frame_);
  scratch_.resize(frame_);
  for (auto& s : spectra_) s.resize(frame_ / 2 + 1);
  for (auto& p : pending_) p.reserve(frame_ + hop_);
}

std::vector<FoaSpectrum> StftStream::push(std::span<const std::vector<double>> channels) {
  if (channels.size() != 4) {
    throw ConfigError("STFT expects 4 FOA channels, got " + std::to_string(channels.size()));
  }
  // Internal order is W, X, Y, Z; AmbiX delivers W, Y, Z, X.
  static constexpr std::array<std::size_t, 4> kWxyz{0, 1, 2, 3};
  static constexpr std::array<std::size_t, 4> kAmbix{0, 3, 1, 2};
  const auto& source = config_.channel_order == ChannelOrder::ambix ? kAmbix : kWxyz;
  const std::size_t n = channels[0].size();
  for (const auto& ch : channels) {
    if (ch.size() != n) throw ConfigError("FOA channels differ in length");
  }

  std::vector<FoaSpectrum> frames;
  std::size_t consumed = 0;
  while (consumed < n) {
    const std::size_t take = std::min(n - consumed, frame_ - pending_[0].size());
    for (std::size_t c = 0; c < 4; ++c) {
      const auto& src = channels[source[c]];
      pending_[c].insert(pending_[c].end(), src.begin() + static_cast<std::ptrdiff_t>(consumed),
                         src.begin() + static_cast<std::ptrdiff_t>(consumed + take));
    }
    consumed += take;
    if (pending_[0].size() == frame_) {
      frames.push_back(transform_current());
      for (auto& p : pending_) {
        const std::size_t drop = std::min(hop_, p.size());
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(drop));
      }
    }
  }
  return frames;
}

FoaSpectrum StftStream::transform_current() {
  for (std::size_t c = 0; c < 4; ++c) {
    for (std::size_t i = 0; i < frame_; ++i) scratch_[i] = pending_[c][i] * window_[i];
    fft_.forward(scratch_, spectra_[c]);
  }
  FoaSpectrum spec;
  spec.frame_index = frames_emitted_;
  spec.time = (static_cast<double>(frames_emitted_ * hop_) + static_cast<double>(frame_) / 2.0) / sample_rate_;
  spec.bins.reserve(freqs_.size());
  for (std::size_t i = 0; i < freqs_.size(); ++i) {
    const std::size_t k = first_bin_ + i;
    spec.bins.push_back({freqs_[i], spectra_[0][k], spectra_[1][k], spectra_[2][k], spectra_[3][k]});
  }
  ++frames_emitted_;
  return spec;
}

std::vector<FoaSpectrum> stft(const AudioBuffer& buffer, const FrontendConfig& config) {
  buffer.validate();
  if (buffer.channel_count() != 4) {
    throw ConfigError("STFT expects 4 FOA channels, got " + std::to_string(buffer.channel_count()));
  }
  StftStream stream(config, buffer.sample_rate);
  return stream.push(buffer.channels);
}

}  // namespace tramp
