#pragma once

#include <cstdint>
#include <string>

#include "tramp/frontend.hpp"
#include "tramp/localizer.hpp"
#include "tramp/tracker.hpp"
#include "tramp/vad.hpp"

namespace tramp {

struct PipelineConfig {
  FrontendConfig frontend;
  VadConfig vad;
  LocalizerConfig localizer;
  TrackerConfig tracker;
  std::uint64_t seed = 0;

  // Flat "section.key = value" text; '#' starts a comment. Unknown keys and
  // malformed values throw ConfigError.
  static PipelineConfig parse(const std::string& text);
  static PipelineConfig load(const std::string& path);
  void apply(const std::string& key, const std::string& value);
  std::string to_text() const;

  // Derives the tracker hop from the frontend and checks every section.
  void finalize(int sample_rate);
  // Histogram window in frames: round(window / hop).
  std::size_t histogram_frames(int sample_rate) const;
};

}  // namespace tramp
