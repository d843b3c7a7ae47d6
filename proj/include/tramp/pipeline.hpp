#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tramp/config.hpp"
#include "tramp/localizer.hpp"
#include "tramp/tracker.hpp"
#include "tramp/vad.hpp"

namespace tramp {

struct FrameDiagnostics {
  const FoaSpectrum& spectrum;
  const VadFrame& vad;
  const SphericalHistogram& histogram;
  const std::vector<Observation>& observations;
  const Tracker& tracker;
};

// Streaming hop loop: STFT, noise tracking and VAD, histogram, then peak
// picking and a tracker step on active frames. Inactive frames report the
// held estimates unless vad.gate_tracker is off. One TrackFrame per STFT frame.
class Pipeline {
 public:
  Pipeline(PipelineConfig config, int sample_rate);

  // Four FOA channels in the configured input order, any block length.
  std::vector<TrackFrame> push(std::span<const std::vector<double>> foa);

  std::function<void(const FrameDiagnostics&)> on_frame;

  const PipelineConfig& config() const { return config_; }
  const Tracker& tracker() const { return tracker_; }
  std::size_t frames_processed() const { return frames_; }
  double hop_seconds() const { return config_.tracker.hop; }

 private:
  TrackFrame process(const FoaSpectrum& spectrum);

  PipelineConfig config_;
  StftStream stft_;
  NoiseState noise_;
  SphericalHistogram histogram_;
  Tracker tracker_;
  std::size_t frames_ = 0;
};

// {"t": seconds, "sources": [{"id", "azimuth_deg", "elevation_deg", "activity"}]}
std::string track_frame_json(const TrackFrame& frame);
TrackFrame parse_track_frame_json(const std::string& line);
std::vector<TrackFrame> read_tracks_jsonl(const std::string& path);

struct TrackOptions {
  std::optional<std::string> matrix_path;    // raw input encoded to FOA first
  std::optional<std::string> histogram_csv;  // per-frame normalized histogram dump
  std::optional<std::string> particles_csv;  // per-frame particle clouds
  bool histogram_active_only = false;
};

struct TrackSummary {
  std::size_t frames = 0;
  std::size_t max_visible = 0;
};

// Streams a WAV file through the pipeline, writing JSON Lines to `output`
// (skipped when empty).
TrackSummary run_track(const std::string& input, const PipelineConfig& config, const std::string& output,
                       const TrackOptions& options = {});

}  // namespace tramp
