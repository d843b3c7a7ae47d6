#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "support.hpp"
#include "tramp/errors.hpp"
#include "tramp/vad.hpp"

using namespace tramp;

namespace {

constexpr std::size_t kBins = 64;
constexpr std::size_t kWindow = 75;

// Complex Gaussian bins with E|w|^2 = variance.
std::vector<Complex> noise_bins(std::mt19937_64& gen, double variance, std::size_t bins = kBins) {
  std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
  std::vector<Complex> out(bins);
  for (auto& b : out) b = {n(gen), n(gen)};
  return out;
}

std::vector<Complex> scaled(const std::vector<Complex>& bins, double power_gain) {
  std::vector<Complex> out = bins;
  for (auto& b : out) b *= std::sqrt(power_gain);
  return out;
}

// Bins whose power is exactly `power` per bin.
std::vector<Complex> bins_with_power(const std::vector<double>& power) {
  std::vector<Complex> out(power.size());
  for (std::size_t k = 0; k < power.size(); ++k) out[k] = {std::sqrt(power[k]), 0.0};
  return out;
}

}  // namespace

TEST_CASE("noise estimate converges near the true power of white noise") {
  auto gen = test::rng(1);
  const double variance = 0.25;
  NoiseState state(kBins, kWindow);
  for (int t = 0; t < 100; ++t) state.update(noise_bins(gen, variance));
  // Minimum statistics with a fixed bias factor land near the true power on
  // average; single bins scatter more widely.
  double mean = 0.0;
  for (double v : state.noise_power()) {
    CHECK(v >= 0.25 * variance);
    CHECK(v <= 2.0 * variance);
    mean += v;
  }
  mean /= static_cast<double>(state.noise_power().size());
  CHECK(mean >= 0.5 * variance);
  CHECK(mean <= 1.5 * variance);
}

TEST_CASE("noise estimate of silence decays to the floor") {
  auto gen = test::rng(2);
  NoiseState state(kBins, kWindow);
  for (int t = 0; t < 20; ++t) state.update(noise_bins(gen, 1.0));
  const std::vector<Complex> zeros(kBins);
  for (int t = 0; t < 300; ++t) state.update(zeros);
  for (double v : state.noise_power()) CHECK(v == kPowerFloor);
}

TEST_CASE("a short +20 dB burst barely moves the noise estimate") {
  auto gen = test::rng(3);
  NoiseState state(kBins, kWindow);
  for (int t = 0; t < 150; ++t) state.update(noise_bins(gen, 1.0));
  const std::vector<double> before = state.noise_power();
  for (int t = 0; t < 5; ++t) {
    state.update(noise_bins(gen, 100.0));
    for (std::size_t k = 0; k < kBins; ++k) {
      CHECK(10.0 * std::log10(state.noise_power()[k] / before[k]) < 3.0);
    }
  }
}

TEST_CASE("noise estimate never exceeds the smoothed periodogram and respects the floor") {
  auto gen = test::rng(4);
  NoiseState state(kBins, kWindow);
  std::uniform_real_distribution<double> level(-6.0, 2.0);
  for (int t = 0; t < 400; ++t) {
    state.update(noise_bins(gen, std::pow(10.0, level(gen))));
    for (std::size_t k = 0; k < kBins; ++k) {
      CHECK(state.noise_power()[k] >= kPowerFloor);
      CHECK(state.noise_power()[k] <= std::max(state.smoothed_power()[k], kPowerFloor));
    }
  }
}

TEST_CASE("noise tracker window derives from the hop") {
  const NoiseState s = NoiseState::for_hop(10, 0.02);
  CHECK(s.window_frames() == 75);
  CHECK(s.warmup_frames() == 5);
  CHECK_THROWS_AS(s.for_hop(10, 0.0), ConfigError);
  NoiseState t(10, 5);
  CHECK_THROWS_AS(t.update(std::vector<Complex>(9)), ConfigError);
}

TEST_CASE("first frame initializes the estimate to its periodogram") {
  NoiseState state(3, kWindow);
  CHECK(!state.initialized());
  state.update(bins_with_power({1.0, 4.0, 0.0}));
  CHECK(state.initialized());
  CHECK(state.noise_power()[0] == doctest::Approx(1.0));
  CHECK(state.noise_power()[1] == doctest::Approx(4.0));
  CHECK(state.noise_power()[2] == kPowerFloor);
}

TEST_CASE("frame at the noise floor is inactive with zero SNR") {
  NoiseState state(kBins, kWindow);
  std::vector<double> power(kBins);
  for (std::size_t k = 0; k < kBins; ++k) power[k] = 0.1 + 0.01 * static_cast<double>(k);
  state.update(bins_with_power(power));
  const auto& noise = state.noise_power();
  const VadFrame f = frame_vad(state, bins_with_power(noise));
  for (double g : f.gamma_bins) CHECK(g == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f.gamma_frame == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(!f.active);
}

TEST_CASE("eleven times the noise power gives 10 dB and an active frame") {
  NoiseState state(kBins, kWindow);
  auto gen = test::rng(5);
  for (int t = 0; t < 30; ++t) state.update(noise_bins(gen, 1.0));
  std::vector<double> power = state.noise_power();
  for (auto& p : power) p *= 11.0;
  const VadFrame f = frame_vad(state, bins_with_power(power), 7.0, 42);
  for (double g : f.gamma_bins) CHECK(g == doctest::Approx(10.0));
  CHECK(f.gamma_frame == doctest::Approx(10.0));
  CHECK(f.active);
  CHECK(f.frame_index == 42);
}

TEST_CASE("empty bin list is inactive") {
  NoiseState state(0, kWindow);
  state.update({});
  const VadFrame f = frame_vad(state, {});
  CHECK(f.gamma_frame == 0.0);
  CHECK(!f.active);
}

TEST_CASE("per-bin SNR is floored at -1 and the frame SNR is non-negative") {
  auto gen = test::rng(6);
  NoiseState state(kBins, kWindow);
  for (int t = 0; t < 50; ++t) {
    const auto bins = noise_bins(gen, 1.0);
    state.update(bins);
    const auto f = frame_vad(state, noise_bins(gen, 0.01));
    for (double g : f.gamma_bins) CHECK(g >= -1.0);
    CHECK(f.gamma_frame >= 0.0);
  }
  const VadFrame silent = frame_vad(state, std::vector<Complex>(kBins));
  for (double g : silent.gamma_bins) CHECK(g == doctest::Approx(-1.0));
  CHECK(silent.gamma_frame == 0.0);
}

TEST_CASE("decision matches the threshold definition") {
  auto gen = test::rng(7);
  NoiseState state(kBins, kWindow);
  for (int t = 0; t < 40; ++t) state.update(noise_bins(gen, 1.0));
  for (int t = 0; t < 200; ++t) {
    const double gain = std::pow(10.0, std::uniform_real_distribution<double>(-1.0, 2.0)(gen));
    const auto f = frame_vad(state, noise_bins(gen, gain));
    CHECK(f.active == (10.0 * std::log10(f.gamma_frame + kPowerFloor) >= 7.0));
  }
}

TEST_CASE("decision is monotone in input scale with a frozen noise state") {
  auto gen = test::rng(8);
  NoiseState state(kBins, kWindow);
  for (int t = 0; t < 40; ++t) state.update(noise_bins(gen, 1.0));
  for (int trial = 0; trial < 100; ++trial) {
    const auto bins = noise_bins(gen, std::uniform_real_distribution<double>(0.5, 12.0)(gen));
    bool was_active = false;
    for (double c : {1.0, 1.1, 1.5, 2.0, 4.0, 10.0, 100.0}) {
      const bool active = frame_vad(state, scaled(bins, c)).active;
      if (was_active) CHECK(active);
      was_active = active;
    }
  }
}

TEST_CASE("stationary noise rarely triggers the detector") {
  auto gen = test::rng(9);
  const std::size_t bins = 267;  // 400-7000 Hz at 25 Hz spacing
  NoiseState state = NoiseState::for_hop(bins, 0.02);
  int active = 0;
  const int frames = 3000;
  for (int t = 0; t < frames; ++t) {
    const auto w = noise_bins(gen, 1e-3, bins);
    state.update(w);
    active += frame_vad(state, w).active;
  }
  CHECK(static_cast<double>(active) / frames < 0.05);
}

TEST_CASE("speech-level frames after noise are detected") {
  auto gen = test::rng(10);
  NoiseState state(kBins, kWindow);
  for (int t = 0; t < 100; ++t) {
    const auto w = noise_bins(gen, 1.0);
    state.update(w);
  }
  const auto loud = noise_bins(gen, 100.0);
  state.update(loud);
  CHECK(frame_vad(state, loud).active);
}

TEST_CASE("invalid VAD settings are rejected") {
  VadConfig cfg;
  cfg.smoothing = 1.0;
  CHECK_THROWS_AS(NoiseState(4, 4, cfg), ConfigError);
  cfg = {};
  cfg.bias_compensation = 0.0;
  CHECK_THROWS_AS(NoiseState(4, 4, cfg), ConfigError);
}
