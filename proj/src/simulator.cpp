#include "tramp/simulator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>

#include "tramp/errors.hpp"

namespace tramp {

namespace {

constexpr double kModulationRate = 4.0;  // Hz
constexpr double kModulationDepth = 0.8;

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(base), static_cast<std::uint32_t>(base >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[1]) << 32) | out[0];
}

SignalType parse_signal(const std::string& s) {
  if (s == "white_noise") return SignalType::white_noise;
  if (s == "speech_like_modulated_noise" || s == "speech_like") return SignalType::speech_like_modulated_noise;
  if (s == "sine_sweep") return SignalType::sine_sweep;
  throw ConfigError("unknown source signal '" + s + "'");
}

NoiseType parse_noise(const std::string& s) {
  if (s == "none") return NoiseType::none;
  if (s == "white") return NoiseType::white;
  if (s == "diffuse_iso") return NoiseType::diffuse_iso;
  throw ConfigError("unknown noise type '" + s + "'");
}

// Pressure signal generator for one source; samples drawn in time order.
class SignalGenerator {
 public:
  SignalGenerator(const SceneSource& source, std::uint64_t seed, int sample_rate, double duration)
      : type_(source.signal), rng_(seed), sample_rate_(sample_rate), duration_(duration) {
    gain_ = std::pow(10.0, source.level_db / 20.0);
    std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
    phase_ = phase(rng_);
    if (source.modulation_phase) phase_ = *source.modulation_phase;
    if (type_ == SignalType::speech_like_modulated_noise) {
      // Mean power of (1 + m sin)^2 is 1 + m^2/2.
      gain_ /= std::sqrt(1.0 + kModulationDepth * kModulationDepth / 2.0);
    } else if (type_ == SignalType::sine_sweep) {
      gain_ *= std::sqrt(2.0);
      f0_ = 100.0;
      f1_ = std::min(8000.0, 0.45 * sample_rate);
    }
  }

  double next(std::size_t i) {
    const double t = static_cast<double>(i) / sample_rate_;
    switch (type_) {
      case SignalType::white_noise: return gain_ * normal_(rng_);
      case SignalType::speech_like_modulated_noise:
        return gain_ * normal_(rng_) *
               (1.0 + kModulationDepth * std::sin(2.0 * std::numbers::pi * kModulationRate * t + phase_));
      case SignalType::sine_sweep: {
        const double span = std::max(duration_, 1e-9);
        const double arg = 2.0 * std::numbers::pi * (f0_ * t + 0.5 * (f1_ - f0_) * t * t / span);
        return gain_ * std::sin(arg + phase_);
      }
    }
    return 0.0;
  }

 private:
  SignalType type_;
  std::mt19937_64 rng_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  int sample_rate_;
  double duration_;
  double gain_ = 1.0;
  double phase_ = 0.0;
  double f0_ = 0.0, f1_ = 0.0;
};

}  // namespace

Direction SceneSource::direction_at(double t) const {
  if (trajectory.size() == 1 || t <= trajectory.front().time) return trajectory.front().direction;
  if (t >= trajectory.back().time) return trajectory.back().direction;
  const auto it = std::upper_bound(trajectory.begin(), trajectory.end(), t,
                                   [](double v, const TrajectoryPoint& p) { return v < p.time; });
  const auto& b = *it;
  const auto& a = *(it - 1);
  const double u = (t - a.time) / (b.time - a.time);
  return {a.direction.azimuth + u * (b.direction.azimuth - a.direction.azimuth),
          a.direction.elevation + u * (b.direction.elevation - a.direction.elevation)};
}

bool SceneSource::active_at(double t) const {
  if (on_off.empty()) return true;
  return std::any_of(on_off.begin(), on_off.end(), [t](const auto& iv) { return t >= iv.first && t < iv.second; });
}

void SceneSpec::validate() const {
  if (!(duration >= 0.0) || !std::isfinite(duration)) throw ConfigError("scene duration must be non-negative");
  if (sample_rate <= 0) throw ConfigError("scene sample_rate must be positive");
  if (!(encoding_constant > 0.0)) throw ConfigError("scene encoding_constant must be positive");
  if (noise != NoiseType::none && !std::isfinite(snr_db)) throw ConfigError("scene snr_db must be finite");
  for (const auto& s : sources) {
    const std::string who = "source '" + s.label + "': ";
    if (!std::isfinite(s.level_db)) throw ConfigError(who + "level_db must be finite");
    if (s.trajectory.empty()) throw ConfigError(who + "trajectory is empty");
    for (std::size_t i = 1; i < s.trajectory.size(); ++i) {
      if (!(s.trajectory[i].time > s.trajectory[i - 1].time)) {
        throw ConfigError(who + "trajectory timestamps must be strictly increasing");
      }
    }
    if (s.trajectory.size() > 1 && (s.trajectory.front().time > 0.0 || s.trajectory.back().time < duration)) {
      throw ConfigError(who + "trajectory must span [0, duration]");
    }
    for (const auto& p : s.trajectory) {
      if (!std::isfinite(p.direction.azimuth) || !std::isfinite(p.direction.elevation) ||
          std::abs(p.direction.elevation) > std::numbers::pi / 2 + 1e-12) {
        throw ConfigError(who + "invalid trajectory direction");
      }
    }
    for (const auto& [start, stop] : s.on_off) {
      if (!(stop > start)) throw ConfigError(who + "on_off interval must have stop > start");
    }
  }
}

SceneSpec SceneSpec::parse_json(const std::string& text) {
  using nlohmann::json;
  SceneSpec spec;
  try {
    const json j = json::parse(text);
    spec.duration = j.at("duration").get<double>();
    spec.sample_rate = j.value("sample_rate", 24000);
    spec.encoding_constant = j.value("encoding_constant", 3.0);
    spec.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("noise")) {
      const json& n = j.at("noise");
      spec.noise = parse_noise(n.value("type", std::string("none")));
      spec.snr_db = n.value("snr_db", 20.0);
    }
    std::size_t index = 0;
    for (const json& s : j.value("sources", json::array())) {
      SceneSource src;
      src.label = s.value("label", "s" + std::to_string(index));
      src.signal = parse_signal(s.value("signal", std::string("speech_like_modulated_noise")));
      src.level_db = s.value("level_db", -20.0);
      for (const json& p : s.at("trajectory")) {
        if (!p.is_array() || p.size() != 3) throw ConfigError("trajectory points are [time, azimuth_deg, elevation_deg]");
        src.trajectory.push_back({p[0].get<double>(), {deg2rad(p[1].get<double>()), deg2rad(p[2].get<double>())}});
      }
      for (const json& iv : s.value("on_off", json::array())) {
        if (!iv.is_array() || iv.size() != 2) throw ConfigError("on_off intervals are [start, stop]");
        src.on_off.emplace_back(iv[0].get<double>(), iv[1].get<double>());
      }
      if (s.contains("seed")) src.seed = s.at("seed").get<std::uint64_t>();
      if (s.contains("modulation_phase_deg")) src.modulation_phase = deg2rad(s.at("modulation_phase_deg").get<double>());
      spec.sources.push_back(std::move(src));
      ++index;
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("scene spec: ") + e.what());
  }
  spec.validate();
  return spec;
}

SceneSpec SceneSpec::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scene spec '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_json(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::vector<Vec3> fibonacci_directions(std::size_t n) {
  std::vector<Vec3> out;
  out.reserve(n);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t k = 0; k < n; ++k) {
    const double z = 1.0 - (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(n);
    const double r = std::sqrt(1.0 - z * z);
    const double a = golden * static_cast<double>(k);
    out.push_back({r * std::cos(a), r * std::sin(a), z});
  }
  return out;
}

std::vector<TruthRecord> ground_truth(const SceneSpec& spec, const FrontendConfig& frontend, std::size_t frames) {
  const std::size_t frame = frontend.frame_samples(spec.sample_rate);
  const std::size_t hop = frontend.hop_samples(spec.sample_rate);
  std::vector<TruthRecord> truth;
  if (frame == 0 || frames < frame) return truth;
  const std::size_t hops = (frames - frame) / hop + 1;
  for (std::size_t i = 0; i < hops; ++i) {
    const double t = (static_cast<double>(i * hop) + static_cast<double>(frame) / 2.0) / spec.sample_rate;
    for (const auto& s : spec.sources) {
      if (!s.active_at(t)) continue;
      const Direction d = s.direction_at(t);
      truth.push_back({t, s.label, {wrap_angle(d.azimuth), d.elevation}});
    }
  }
  return truth;
}

Scene synthesize(const SceneSpec& spec, const FrontendConfig& frontend) {
  spec.validate();
  const auto n = static_cast<std::size_t>(std::llround(spec.duration * spec.sample_rate));
  Scene scene;
  scene.audio = AudioBuffer::zeros(spec.sample_rate, 4, n);
  auto& ch = scene.audio.channels;
  const double g = std::sqrt(spec.encoding_constant);

  for (std::size_t index = 0; index < spec.sources.size(); ++index) {
    const SceneSource& src = spec.sources[index];
    const std::uint64_t seed = src.seed.value_or(derive_seed(spec.seed, index + 1));
    SignalGenerator gen(src, seed, spec.sample_rate, spec.duration);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / spec.sample_rate;
      const double p = gen.next(i);
      if (!src.active_at(t)) continue;
      const Direction d = src.direction_at(t);
      const double ce = std::cos(d.elevation);
      ch[0][i] += p;
      ch[1][i] += g * p * std::cos(d.azimuth) * ce;
      ch[2][i] += g * p * std::sin(d.azimuth) * ce;
      ch[3][i] += g * p * std::sin(d.elevation);
    }
  }

  if (spec.noise != NoiseType::none && n > 0) {
    double signal_power = 0.0;
    for (double w : ch[0]) signal_power += w * w;
    signal_power /= static_cast<double>(n);
    // Without sources the SNR is taken against a full-scale reference.
    if (signal_power == 0.0) signal_power = 1.0;
    const double noise_power = signal_power * std::pow(10.0, -spec.snr_db / 10.0);
    std::mt19937_64 rng(derive_seed(spec.seed, 0));
    std::normal_distribution<double> normal(0.0, 1.0);
    if (spec.noise == NoiseType::white) {
      const double sigma = std::sqrt(noise_power);
      for (std::size_t i = 0; i < n; ++i) {
        for (auto& c : ch) c[i] += sigma * normal(rng);
      }
    } else {
      const auto dirs = fibonacci_directions(64);
      const double sigma = std::sqrt(noise_power / static_cast<double>(dirs.size()));
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& d : dirs) {
          const double v = sigma * normal(rng);
          ch[0][i] += v;
          ch[1][i] += g * v * d.x;
          ch[2][i] += g * v * d.y;
          ch[3][i] += g * v * d.z;
        }
      }
    }
  }

  scene.truth = ground_truth(spec, frontend, n);
  return scene;
}

void write_truth_csv(const std::string& path, const std::vector<TruthRecord>& truth) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << "time,source_label,azimuth_deg,elevation_deg\n";
  char line[256];
  for (const auto& r : truth) {
    std::snprintf(line, sizeof line, "%.6f,%s,%.6f,%.6f\n", r.time, r.label.c_str(), rad2deg(r.direction.azimuth),
                  rad2deg(r.direction.elevation));
    out << line;
  }
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<TruthRecord> read_truth_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open ground truth '" + path + "'");
  std::vector<TruthRecord> truth;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line_no == 1) continue;
    std::stringstream ss(line);
    std::string time, label, az, el;
    if (!std::getline(ss, time, ',') || !std::getline(ss, label, ',') || !std::getline(ss, az, ',') ||
        !std::getline(ss, el, ',')) {
      throw IoError(path + ":" + std::to_string(line_no) + ": expected 4 columns");
    }
    try {
      truth.push_back({std::stod(time), label, {deg2rad(std::stod(az)), deg2rad(std::stod(el))}});
    } catch (const std::exception&) {
      throw IoError(path + ":" + std::to_string(line_no) + ": malformed number");
    }
  }
  return truth;
}

void write_scene(const std::string& wav_path, const std::string& truth_path, const Scene& scene) {
  write_wav(wav_path, scene.audio);
  write_truth_csv(truth_path, scene.truth);
}

}  // namespace tramp
