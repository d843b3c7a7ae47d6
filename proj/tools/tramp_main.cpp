// tramp: FOA sound-source localization and particle-filter tracking.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "tramp/config.hpp"
#include "tramp/errors.hpp"
#include "tramp/evaluator.hpp"
#include "tramp/pipeline.hpp"
#include "tramp/simulator.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kConfig = 3 };

struct PipelineFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_sources;
  std::optional<std::size_t> max_observations;
  bool ambix = false;

  void add(CLI::App* app, bool tracking) {
    app->add_option("--config", config_path, "Pipeline configuration file (key = value)");
    app->add_flag("--ambix", ambix, "Input channel order is AmbiX (W, Y, Z, X)");
    if (!tracking) return;
    app->add_option("--seed", seed, "Tracker random seed");
    app->add_option("--max-sources", max_sources, "Maximum simultaneously tracked sources")->check(CLI::PositiveNumber);
    app->add_option("--max-observations", max_observations, "Maximum observations per frame")
        ->check(CLI::PositiveNumber);
  }

  tramp::PipelineConfig build() const {
    tramp::PipelineConfig config = config_path.empty() ? tramp::PipelineConfig{} : tramp::PipelineConfig::load(config_path);
    if (seed) config.seed = *seed;
    if (max_sources) config.tracker.max_sources = *max_sources;
    if (max_observations) config.localizer.max_observations = *max_observations;
    if (ambix) config.frontend.channel_order = tramp::ChannelOrder::ambix;
    return config;
  }
};

std::string fmt_opt(const std::optional<double>& v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", *v);
  return buf;
}

nlohmann::ordered_json opt_json(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

int run_eval(const std::vector<std::string>& tracks, const std::vector<std::string>& truths, const std::string& output) {
  if (tracks.size() != truths.size()) {
    std::cerr << "eval: --tracks and --truth must be given the same number of times\n";
    return kUsage;
  }
  std::vector<tramp::EvalReport> reports;
  nlohmann::ordered_json j;
  j["recordings"] = nlohmann::ordered_json::array();
  std::printf("%-32s %10s %10s %6s\n", "recording", "az_err", "el_err", "pairs");
  for (std::size_t i = 0; i < tracks.size(); ++i) {
    const auto frames = tramp::read_tracks_jsonl(tracks[i]);
    const auto truth = tramp::read_truth_csv(truths[i]);
    reports.push_back(tramp::evaluate(frames, truth));
    const auto& r = reports.back();
    nlohmann::ordered_json rec;
    rec["tracks"] = tracks[i];
    rec["truth"] = truths[i];
    rec["azimuth_error_deg"] = opt_json(r.azimuth_error_deg);
    rec["elevation_error_deg"] = opt_json(r.elevation_error_deg);
    rec["empty_assignment"] = r.pairs.empty();
    rec["pairs"] = nlohmann::ordered_json::array();
    for (const auto& p : r.pairs) {
      rec["pairs"].push_back({{"truth_label", p.truth_label},
                              {"track_id", p.track_id},
                              {"azimuth_error_deg", p.azimuth_error_deg},
                              {"elevation_error_deg", p.elevation_error_deg},
                              {"overlap_hops", p.overlap_hops},
                              {"overlap_seconds", p.overlap_seconds}});
    }
    j["recordings"].push_back(std::move(rec));
    std::printf("%-32s %10s %10s %6zu\n", tracks[i].c_str(), fmt_opt(r.azimuth_error_deg).c_str(),
                fmt_opt(r.elevation_error_deg).c_str(), r.pairs.size());
    for (const auto& p : r.pairs) {
      std::printf("  truth %-10s -> track %-4d az %7.2f el %7.2f overlap %.2f s\n", p.truth_label.c_str(), p.track_id,
                  p.azimuth_error_deg, p.elevation_error_deg, p.overlap_seconds);
    }
  }
  const auto summary = tramp::summarize(reports);
  j["task"] = {{"recordings", summary.recordings},
               {"azimuth_mean_deg", opt_json(summary.azimuth_mean)},
               {"azimuth_std_deg", opt_json(summary.azimuth_std)},
               {"elevation_mean_deg", opt_json(summary.elevation_mean)},
               {"elevation_std_deg", opt_json(summary.elevation_std)}};
  std::printf("task: azimuth %s +/- %s deg, elevation %s +/- %s deg over %zu recording(s)\n",
              fmt_opt(summary.azimuth_mean).c_str(), fmt_opt(summary.azimuth_std).c_str(),
              fmt_opt(summary.elevation_mean).c_str(), fmt_opt(summary.elevation_std).c_str(), summary.recordings);
  if (!output.empty()) {
    std::ofstream out(output);
    if (!out) throw tramp::IoError("cannot open '" + output + "' for writing");
    out << j.dump(2) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FOA sound-source localization and particle-filter tracking"};
  app.require_subcommand(1);

  auto* track = app.add_subcommand("track", "Localize and track sources in an FOA WAV file");
  std::string track_input, track_output, matrix_path, debug_histogram, debug_particles;
  PipelineFlags track_flags;
  track->add_option("input", track_input, "FOA (or raw, with --matrix) WAV file")->required();
  track->add_option("-o,--output", track_output, "Output JSON Lines file")->required();
  track->add_option("--matrix", matrix_path, "Encoding matrix file for raw multichannel input");
  track->add_option("--debug-histogram", debug_histogram, "Write per-frame normalized histograms as CSV");
  track->add_option("--debug-particles", debug_particles, "Write per-frame particle clouds as CSV");
  track_flags.add(track, true);

  auto* simulate = app.add_subcommand("simulate", "Synthesize an FOA scene with ground truth");
  std::string scene_path, sim_output, sim_truth, sim_config;
  std::optional<std::uint64_t> sim_seed;
  simulate->add_option("scene", scene_path, "Scene specification (JSON)")->required();
  simulate->add_option("-o,--output", sim_output, "Output WAV file")->required();
  simulate->add_option("--truth", sim_truth, "Output ground-truth CSV")->required();
  simulate->add_option("--config", sim_config, "Pipeline configuration defining the hop grid");
  simulate->add_option("--seed", sim_seed, "Override the scene seed");

  auto* eval = app.add_subcommand("eval", "Score tracks against ground truth");
  std::vector<std::string> eval_tracks, eval_truth;
  std::string eval_output;
  eval->add_option("--tracks", eval_tracks, "Track JSON Lines file (repeat per recording)")->required();
  eval->add_option("--truth", eval_truth, "Ground-truth CSV (repeat per recording)")->required();
  eval->add_option("-o,--output", eval_output, "Write the report as JSON");

  auto* dump = app.add_subcommand("dump-histogram", "Write per-frame normalized DOA histograms as CSV");
  std::string dump_input, dump_output, dump_matrix;
  bool dump_active_only = false;
  PipelineFlags dump_flags;
  dump->add_option("input", dump_input, "FOA WAV file")->required();
  dump->add_option("-o,--output", dump_output, "Output CSV")->required();
  dump->add_option("--matrix", dump_matrix, "Encoding matrix file for raw multichannel input");
  dump->add_flag("--active-only", dump_active_only, "Only frames where the VAD fires");
  dump_flags.add(dump, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*track) {
      tramp::TrackOptions options;
      if (!matrix_path.empty()) options.matrix_path = matrix_path;
      if (!debug_histogram.empty()) options.histogram_csv = debug_histogram;
      if (!debug_particles.empty()) options.particles_csv = debug_particles;
      tramp::run_track(track_input, track_flags.build(), track_output, options);
    } else if (*simulate) {
      auto spec = tramp::SceneSpec::load(scene_path);
      if (sim_seed) spec.seed = *sim_seed;
      const auto config = sim_config.empty() ? tramp::PipelineConfig{} : tramp::PipelineConfig::load(sim_config);
      tramp::write_scene(sim_output, sim_truth, tramp::synthesize(spec, config.frontend));
    } else if (*eval) {
      return run_eval(eval_tracks, eval_truth, eval_output);
    } else if (*dump) {
      tramp::TrackOptions options;
      if (!dump_matrix.empty()) options.matrix_path = dump_matrix;
      options.histogram_csv = dump_output;
      options.histogram_active_only = dump_active_only;
      tramp::run_track(dump_input, dump_flags.build(), "", options);
    }
  } catch (const tramp::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIo;
  } catch (const tramp::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfig;
  } catch (const tramp::AlignmentError& e) {
    std::cerr << "alignment error: " << e.what() << '\n';
    return kConfig;
  }
  return kOk;
}
