#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tramp/audio.hpp"
#include "tramp/frontend.hpp"
#include "tramp/geometry.hpp"

namespace tramp {

enum class SignalType { white_noise, speech_like_modulated_noise, sine_sweep };
enum class NoiseType { none, white, diffuse_iso };

struct TrajectoryPoint {
  double time = 0.0;  // seconds
  Direction direction;
};

struct SceneSource {
  std::string label;
  SignalType signal = SignalType::speech_like_modulated_noise;
  double level_db = -20.0;  // RMS of the pressure signal, dB re full scale
  std::vector<TrajectoryPoint> trajectory;         // a single point is a static source
  std::vector<std::pair<double, double>> on_off;   // [start, stop) seconds; empty = always on
  std::optional<std::uint64_t> seed;
  std::optional<double> modulation_phase;  // radians; drawn from the seed when unset

  Direction direction_at(double t) const;
  bool active_at(double t) const;
};

struct SceneSpec {
  double duration = 1.0;
  int sample_rate = 24000;
  std::vector<SceneSource> sources;
  NoiseType noise = NoiseType::none;
  double snr_db = 20.0;
  double encoding_constant = 3.0;
  std::uint64_t seed = 0;

  void validate() const;
  // JSON schema documented in the README; angles in degrees.
  static SceneSpec parse_json(const std::string& text);
  static SceneSpec load(const std::string& path);
};

struct TruthRecord {
  double time = 0.0;
  std::string label;
  Direction direction;
};

// Ground truth sampled at the hop grid a pipeline with `frontend` would use
// on `frames` samples at `sample_rate`.
std::vector<TruthRecord> ground_truth(const SceneSpec& spec, const FrontendConfig& frontend, std::size_t frames);

struct Scene {
  AudioBuffer audio;  // W, X, Y, Z
  std::vector<TruthRecord> truth;
};

Scene synthesize(const SceneSpec& spec, const FrontendConfig& frontend = {});

// 64 quasi-uniform directions (spherical Fibonacci set).
std::vector<Vec3> fibonacci_directions(std::size_t n = 64);

void write_truth_csv(const std::string& path, const std::vector<TruthRecord>& truth);
std::vector<TruthRecord> read_truth_csv(const std::string& path);

void write_scene(const std::string& wav_path, const std::string& truth_path, const Scene& scene);

}  // namespace tramp
