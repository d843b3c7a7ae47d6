#include "tramp/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "tramp/errors.hpp"

namespace tramp {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double out = 0.0;
  try {
    out = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != v.size() || !std::isfinite(out)) throw ConfigError(key + ": expected a number, got '" + v + "'");
  return out;
}

std::size_t to_count(const std::string& key, const std::string& v) {
  const double d = to_double(key, v);
  if (d < 0 || d != std::floor(d)) throw ConfigError(key + ": expected a non-negative integer, got '" + v + "'");
  return static_cast<std::size_t>(d);
}

// Shortest representation that round-trips.
std::string format(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

struct Key {
  std::function<void(PipelineConfig&, const std::string&)> set;
  std::function<std::string(const PipelineConfig&)> get;
};

const std::map<std::string, Key>& keys() {
  static const std::map<std::string, Key> table = [] {
    std::map<std::string, Key> t;
    auto num = [&t](const std::string& name, auto getter) {
      t[name] = {[getter, name](PipelineConfig& c, const std::string& v) { getter(c) = to_double(name, v); },
                 [getter](const PipelineConfig& c) { return format(getter(const_cast<PipelineConfig&>(c))); }};
    };
    auto count = [&t](const std::string& name, auto getter) {
      t[name] = {[getter, name](PipelineConfig& c, const std::string& v) { getter(c) = to_count(name, v); },
                 [getter](const PipelineConfig& c) {
                   return std::to_string(getter(const_cast<PipelineConfig&>(c)));
                 }};
    };

    num("frontend.frame_len", [](PipelineConfig& c) -> double& { return c.frontend.frame_len; });
    num("frontend.overlap", [](PipelineConfig& c) -> double& { return c.frontend.overlap; });
    num("frontend.f_lo", [](PipelineConfig& c) -> double& { return c.frontend.f_lo; });
    num("frontend.f_hi", [](PipelineConfig& c) -> double& { return c.frontend.f_hi; });
    num("frontend.encoding_constant", [](PipelineConfig& c) -> double& { return c.frontend.encoding_constant; });
    t["frontend.window"] = {
        [](PipelineConfig& c, const std::string& v) {
          if (v == "hann") c.frontend.window = WindowType::hann;
          else if (v == "rectangular") c.frontend.window = WindowType::rectangular;
          else throw ConfigError("frontend.window: expected hann or rectangular, got '" + v + "'");
        },
        [](const PipelineConfig& c) { return std::string(c.frontend.window == WindowType::hann ? "hann" : "rectangular"); }};
    t["frontend.channel_order"] = {
        [](PipelineConfig& c, const std::string& v) {
          if (v == "wxyz") c.frontend.channel_order = ChannelOrder::wxyz;
          else if (v == "ambix") c.frontend.channel_order = ChannelOrder::ambix;
          else throw ConfigError("frontend.channel_order: expected wxyz or ambix, got '" + v + "'");
        },
        [](const PipelineConfig& c) { return std::string(c.frontend.channel_order == ChannelOrder::wxyz ? "wxyz" : "ambix"); }};

    num("vad.threshold_db", [](PipelineConfig& c) -> double& { return c.vad.threshold_db; });
    num("vad.smoothing", [](PipelineConfig& c) -> double& { return c.vad.smoothing; });
    num("vad.min_window", [](PipelineConfig& c) -> double& { return c.vad.min_window; });
    num("vad.bias_compensation", [](PipelineConfig& c) -> double& { return c.vad.bias_compensation; });
    t["vad.gate_tracker"] = {
        [](PipelineConfig& c, const std::string& v) {
          if (v == "true" || v == "1") c.vad.gate_tracker = true;
          else if (v == "false" || v == "0") c.vad.gate_tracker = false;
          else throw ConfigError("vad.gate_tracker: expected true or false, got '" + v + "'");
        },
        [](const PipelineConfig& c) { return std::string(c.vad.gate_tracker ? "true" : "false"); }};

    num("localizer.window", [](PipelineConfig& c) -> double& { return c.localizer.window_seconds; });
    num("localizer.threshold", [](PipelineConfig& c) -> double& { return c.localizer.select_threshold; });
    num("localizer.filter_variance", [](PipelineConfig& c) -> double& { return c.localizer.filter_variance; });
    count("localizer.filter_support", [](PipelineConfig& c) -> std::size_t& { return c.localizer.filter_support; });
    count("localizer.max_observations", [](PipelineConfig& c) -> std::size_t& { return c.localizer.max_observations; });

    num("tracker.damping", [](PipelineConfig& c) -> double& { return c.tracker.damping; });
    num("tracker.excitation", [](PipelineConfig& c) -> double& { return c.tracker.excitation; });
    num("tracker.radius", [](PipelineConfig& c) -> double& { return c.tracker.radius; });
    count("tracker.particles", [](PipelineConfig& c) -> std::size_t& { return c.tracker.particles; });
    count("tracker.max_sources", [](PipelineConfig& c) -> std::size_t& { return c.tracker.max_sources; });
    num("tracker.enable_threshold", [](PipelineConfig& c) -> double& { return c.tracker.enable_threshold; });
    num("tracker.new_source_threshold", [](PipelineConfig& c) -> double& { return c.tracker.new_source_threshold; });
    num("tracker.hangover", [](PipelineConfig& c) -> double& { return c.tracker.hangover; });
    num("tracker.deletion_delay", [](PipelineConfig& c) -> double& { return c.tracker.deletion_delay; });
    num("tracker.merge_angle_deg", [](PipelineConfig& c) -> double& { return c.tracker.merge_angle_deg; });
    num("tracker.merge_factor", [](PipelineConfig& c) -> double& { return c.tracker.merge_factor; });
    num("tracker.resample_fraction", [](PipelineConfig& c) -> double& { return c.tracker.resample_fraction; });
    num("tracker.likelihood_variance", [](PipelineConfig& c) -> double& { return c.tracker.likelihood_variance; });
    num("tracker.velocity_factor", [](PipelineConfig& c) -> double& { return c.tracker.velocity_factor; });
    num("tracker.false_alarm_density", [](PipelineConfig& c) -> double& { return c.tracker.false_alarm_density; });
    num("tracker.new_source_density", [](PipelineConfig& c) -> double& { return c.tracker.new_source_density; });
    num("tracker.false_alarm_prior", [](PipelineConfig& c) -> double& { return c.tracker.false_alarm_prior; });
    num("tracker.new_source_prior", [](PipelineConfig& c) -> double& { return c.tracker.new_source_prior; });
    num("tracker.existence_factor", [](PipelineConfig& c) -> double& { return c.tracker.existence_factor; });
    num("tracker.activity_smoothing", [](PipelineConfig& c) -> double& { return c.tracker.activity_smoothing; });
    num("tracker.activity_offset", [](PipelineConfig& c) -> double& { return c.tracker.activity_offset; });
    num("tracker.activity_floor", [](PipelineConfig& c) -> double& { return c.tracker.activity_floor; });
    num("tracker.initial_activity", [](PipelineConfig& c) -> double& { return c.tracker.initial_activity; });

    t["seed"] = {[](PipelineConfig& c, const std::string& v) { c.seed = to_count("seed", v); },
                 [](const PipelineConfig& c) { return std::to_string(c.seed); }};
    return t;
  }();
  return table;
}

}  // namespace

void PipelineConfig::apply(const std::string& key, const std::string& value) {
  const auto it = keys().find(key);
  if (it == keys().end()) throw ConfigError("unknown configuration key '" + key + "'");
  it->second.set(*this, value);
}

PipelineConfig PipelineConfig::parse(const std::string& text) {
  PipelineConfig config;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    try {
      config.apply(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return config;
}

PipelineConfig PipelineConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string PipelineConfig::to_text() const {
  std::string out;
  for (const auto& [name, key] : keys()) out += name + " = " + key.get(*this) + "\n";
  return out;
}

void PipelineConfig::finalize(int sample_rate) {
  frontend.validate(sample_rate);
  localizer.validate();
  tracker.hop = frontend.hop_seconds(sample_rate);
  tracker.max_observations = localizer.max_observations;
  tracker.validate();
  if (!(vad.min_window > 0.0)) throw ConfigError("vad.min_window must be positive");
  if (!std::isfinite(vad.threshold_db)) throw ConfigError("vad.threshold_db must be finite");
  if (histogram_frames(sample_rate) == 0) throw ConfigError("localizer.window shorter than half a hop");
}

std::size_t PipelineConfig::histogram_frames(int sample_rate) const {
  return static_cast<std::size_t>(std::lround(localizer.window_seconds / frontend.hop_seconds(sample_rate)));
}

}  // namespace tramp
