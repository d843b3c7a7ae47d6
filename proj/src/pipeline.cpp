#include "tramp/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <memory>

#include "tramp/audio.hpp"
#include "tramp/errors.hpp"

namespace tramp {

Pipeline::Pipeline(PipelineConfig config, int sample_rate)
    : config_((config.finalize(sample_rate), std::move(config))),
      stft_(config_.frontend, sample_rate),
      noise_(NoiseState::for_hop(stft_.bin_frequencies().size(), config_.tracker.hop, config_.vad)),
      histogram_(SphericalGrid::lebedev974(config_.localizer.filter_support), config_.histogram_frames(sample_rate)),
      tracker_(config_.tracker, config_.seed) {}

std::vector<TrackFrame> Pipeline::push(std::span<const std::vector<double>> foa) {
  std::vector<TrackFrame> out;
  for (const auto& spectrum : stft_.push(foa)) out.push_back(process(spectrum));
  return out;
}

TrackFrame Pipeline::process(const FoaSpectrum& spectrum) {
  const std::vector<Complex> w = w_channel(spectrum);
  noise_.update(w);
  const VadFrame vad = frame_vad(noise_, w, config_.vad.threshold_db, spectrum.frame_index);
  histogram_.accumulate(spectrum, vad, config_.frontend.encoding_constant);
  std::vector<Observation> observations;
  if (vad.active) observations = pick_observations(histogram_.values(), histogram_.grid(), config_.localizer);
  TrackFrame frame = vad.active || !config_.vad.gate_tracker ? tracker_.step(observations, spectrum.time)
                                                             : tracker_.snapshot(spectrum.time);
  ++frames_;
  if (on_frame) on_frame(FrameDiagnostics{spectrum, vad, histogram_, observations, tracker_});
  return frame;
}

std::string track_frame_json(const TrackFrame& frame) {
  nlohmann::ordered_json j;
  j["t"] = frame.time;
  j["sources"] = nlohmann::ordered_json::array();
  for (const auto& s : frame.sources) {
    nlohmann::ordered_json e;
    e["id"] = s.id;
    e["azimuth_deg"] = rad2deg(s.direction.azimuth);
    e["elevation_deg"] = rad2deg(s.direction.elevation);
    e["activity"] = s.activity;
    j["sources"].push_back(std::move(e));
  }
  return j.dump();
}

TrackFrame parse_track_frame_json(const std::string& line) {
  TrackFrame frame;
  try {
    const auto j = nlohmann::json::parse(line);
    frame.time = j.at("t").get<double>();
    for (const auto& e : j.at("sources")) {
      frame.sources.push_back({e.at("id").get<int>(),
                               {deg2rad(e.at("azimuth_deg").get<double>()), deg2rad(e.at("elevation_deg").get<double>())},
                               e.value("activity", 0.0)});
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed track record: ") + e.what());
  }
  return frame;
}

std::vector<TrackFrame> read_tracks_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open tracks '" + path + "'");
  std::vector<TrackFrame> frames;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      frames.push_back(parse_track_frame_json(line));
    } catch (const IoError& e) {
      throw IoError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return frames;
}

TrackSummary run_track(const std::string& input, const PipelineConfig& config, const std::string& output,
                       const TrackOptions& options) {
  WavReader reader(input);
  const WavInfo info = reader.info();
  std::optional<EncodingMatrix> matrix;
  if (options.matrix_path) {
    matrix = EncodingMatrix::load(*options.matrix_path);
    if (matrix->cols() != static_cast<std::size_t>(info.channels)) {
      throw ConfigError("encoding matrix has " + std::to_string(matrix->cols()) + " columns but '" + input + "' has " +
                        std::to_string(info.channels) + " channels");
    }
  } else if (info.channels != 4) {
    throw ConfigError("'" + input + "' has " + std::to_string(info.channels) +
                      " channels; FOA input needs 4 (or pass an encoding matrix)");
  }

  Pipeline pipeline(config, info.sample_rate);

  std::ofstream out;
  if (!output.empty()) {
    out.open(output);
    if (!out) throw IoError("cannot open '" + output + "' for writing");
  }
  std::unique_ptr<std::ofstream> hist_out, particle_out;
  if (options.histogram_csv) {
    hist_out = std::make_unique<std::ofstream>(*options.histogram_csv);
    if (!*hist_out) throw IoError("cannot open '" + *options.histogram_csv + "' for writing");
    *hist_out << "frame_index,time,node_index,theta,phi,value\n";
  }
  if (options.particles_csv) {
    particle_out = std::make_unique<std::ofstream>(*options.particles_csv);
    if (!*particle_out) throw IoError("cannot open '" + *options.particles_csv + "' for writing");
    *particle_out << "frame_index,time,source_id,particle,x,y,z,weight\n";
  }
  if (hist_out || particle_out) {
    pipeline.on_frame = [&](const FrameDiagnostics& d) {
      char line[256];
      if (hist_out && (!options.histogram_active_only || d.vad.active)) {
        const auto values = d.histogram.normalized();
        const auto& grid = d.histogram.grid();
        for (std::size_t i = 0; i < values.size(); ++i) {
          std::snprintf(line, sizeof line, "%zu,%.6f,%zu,%.9f,%.9f,%.9g\n", d.spectrum.frame_index, d.spectrum.time, i,
                        grid.direction(i).azimuth, grid.direction(i).elevation, values[i]);
          *hist_out << line;
        }
      }
      if (particle_out) {
        for (const auto& s : d.tracker.sources()) {
          for (std::size_t p = 0; p < s.particles.size(); ++p) {
            const auto& pt = s.particles[p];
            std::snprintf(line, sizeof line, "%zu,%.6f,%d,%zu,%.9f,%.9f,%.9f,%.9g\n", d.spectrum.frame_index,
                          d.spectrum.time, s.id, p, pt.position.x, pt.position.y, pt.position.z, pt.weight);
            *particle_out << line;
          }
        }
      }
    };
  }

  TrackSummary summary;
  std::vector<std::vector<double>> block;
  constexpr std::size_t kBlockFrames = 4096;
  for (;;) {
    for (auto& ch : block) ch.clear();
    if (reader.read(kBlockFrames, block) == 0) break;
    std::vector<TrackFrame> frames;
    if (matrix) {
      AudioBuffer raw;
      raw.sample_rate = info.sample_rate;
      raw.channels = std::move(block);
      AudioBuffer foa = encode_foa(raw, *matrix);
      block = std::move(raw.channels);
      frames = pipeline.push(foa.channels);
    } else {
      frames = pipeline.push(block);
    }
    for (const auto& f : frames) {
      if (out.is_open()) out << track_frame_json(f) << '\n';
      summary.max_visible = std::max(summary.max_visible, f.sources.size());
    }
  }
  summary.frames = pipeline.frames_processed();
  if (!out.is_open()) return summary;
  out.flush();
  if (!out) throw IoError("write failed for '" + output + "'");
  return summary;
}

}  // namespace tramp
