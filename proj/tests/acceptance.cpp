// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "support.hpp"
#include "tramp/config.hpp"
#include "tramp/evaluator.hpp"
#include "tramp/frontend.hpp"
#include "tramp/localizer.hpp"
#include "tramp/pipeline.hpp"
#include "tramp/simulator.hpp"
#include "tramp/tracker.hpp"

using namespace tramp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::vector<std::pair<double, double>> talkspurts(double start, double end) {
  std::vector<std::pair<double, double>> out;
  for (double t = start; t < end; t += 1.5) out.emplace_back(t, std::min(t + 1.0, end));
  return out;
}

SceneSource talker(const std::string& label, double az_deg, double el_deg, double onset, double duration) {
  SceneSource s;
  s.label = label;
  s.trajectory = {{0.0, {deg2rad(az_deg), deg2rad(el_deg)}}};
  s.on_off = talkspurts(onset, duration);
  return s;
}

SceneSpec noisy_scene(double duration, double snr_db, std::uint64_t seed, std::vector<SceneSource> sources) {
  SceneSpec spec;
  spec.duration = duration;
  spec.seed = seed;
  spec.noise = NoiseType::diffuse_iso;
  spec.snr_db = snr_db;
  spec.sources = std::move(sources);
  return spec;
}

Vec3 random_unit(std::mt19937_64& gen) {
  std::normal_distribution<double> n;
  return normalized(Vec3{n(gen), n(gen), n(gen)});
}

std::set<int> visible_ids(const std::vector<TrackFrame>& frames) {
  std::set<int> ids;
  for (const auto& f : frames) {
    for (const auto& s : f.sources) ids.insert(s.id);
  }
  return ids;
}

Outcome static_source() {
  constexpr double onset = 0.5, duration = 30.0;
  const auto start = Clock::now();
  const Scene scene = synthesize(noisy_scene(duration, 20.0, 101, {talker("talker", 40.0, 15.0, onset, duration)}));
  Pipeline p(PipelineConfig{}, scene.audio.sample_rate);
  const auto frames = p.push(scene.audio.channels);
  const double runtime = seconds_since(start);

  std::size_t deletions = 0;
  for (const auto& f : frames) {
    if (f.time >= onset) deletions += f.deleted.size();
  }
  const auto ids = visible_ids(frames);
  const auto report = evaluate(frames, scene.truth);
  const double az = report.azimuth_error_deg.value_or(180.0);
  const double el = report.elevation_error_deg.value_or(90.0);
  Outcome o;
  o.pass = ids.size() == 1 && az < 5.0 && el < 5.0 && deletions == 0 && runtime < 30.0;
  o.detail = fmt("visible ids %zu, azimuth %.2f deg, elevation %.2f deg, deletions %zu, runtime %.2f s", ids.size(),
                 az, el, deletions, runtime);
  return o;
}

Outcome two_sources() {
  constexpr double onset = 0.5, duration = 30.0;
  SceneSource a = talker("a", 0.0, 0.0, onset, duration);
  SceneSource b = talker("b", 90.0, 0.0, onset, duration);
  a.modulation_phase = 0.0;
  b.modulation_phase = std::numbers::pi;
  const Scene scene = synthesize(noisy_scene(duration, 15.0, 3, {a, b}));
  Pipeline p(PipelineConfig{}, scene.audio.sample_rate);
  const auto frames = p.push(scene.audio.channels);

  double both_visible = -1.0;
  for (const auto& f : frames) {
    if (f.sources.size() == 2) {
      both_visible = f.time;
      break;
    }
  }
  const auto ids = visible_ids(frames);
  const auto report = evaluate(frames, scene.truth);
  double worst = report.pairs.size() == 2 ? 0.0 : 180.0;
  for (const auto& pair : report.pairs) worst = std::max(worst, pair.azimuth_error_deg);
  Outcome o;
  o.pass = both_visible >= 0.0 && both_visible <= onset + 2.0 && ids.size() == 2 && worst < 8.0;
  o.detail = fmt("two visible at %.2f s, distinct ids %zu, assigned pairs %zu, worst per-track azimuth %.2f deg",
                 both_visible, ids.size(), report.pairs.size(), worst);
  return o;
}

Outcome moving_source() {
  constexpr double duration = 30.0;
  SceneSource s = talker("mover", -150.0, 0.0, 0.5, duration);
  s.trajectory = {{0.0, {deg2rad(-150.0), 0.0}}, {duration, {deg2rad(150.0), 0.0}}};
  const Scene scene = synthesize(noisy_scene(duration, 20.0, 5, {s}));
  Pipeline p(PipelineConfig{}, scene.audio.sample_rate);
  const auto frames = p.push(scene.audio.channels);
  const auto ids = visible_ids(frames);
  const auto report = evaluate(frames, scene.truth);
  const double az = report.azimuth_error_deg.value_or(180.0);
  Outcome o;
  o.pass = ids.size() == 1 && az < 10.0;
  o.detail = fmt("visible ids %zu, azimuth %.2f deg", ids.size(), az);
  return o;
}

TrackedSource random_source(std::mt19937_64& gen, int id) {
  TrackerConfig cfg;
  cfg.particles = 40;
  const Vec3 center = random_unit(gen);
  TrackedSource s = make_source(id, center, 0.9, 0.0, cfg);
  std::normal_distribution<double> n(0.0, 0.05);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  double total = 0.0;
  for (auto& p : s.particles) {
    p.previous = normalized(center + Vec3{n(gen), n(gen), n(gen)});
    p.position = normalized(p.previous + Vec3{n(gen), n(gen), n(gen)} * 0.3);
    p.velocity = Vec3{n(gen), n(gen), n(gen)} * 4.0;
    p.weight = u(gen);
    total += p.weight;
  }
  for (auto& p : s.particles) p.weight /= total;
  s.p_observable = u(gen);
  return s;
}

Outcome association_oracle() {
  auto gen = test::rng(404);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  TrackerConfig cfg;
  double worst_marginal = 0.0, worst_sum = 0.0;
  std::size_t fixtures = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t S = trial % 3, Q = 1 + (trial / 3) % 3;
    std::vector<TrackedSource> sources;
    for (std::size_t s = 0; s < S; ++s) sources.push_back(random_source(gen, static_cast<int>(s)));
    std::vector<Observation> obs;
    for (std::size_t q = 0; q < Q; ++q) {
      // Half the observations land near a source so its term is not negligible.
      Vec3 v = random_unit(gen);
      if (S > 0 && u(gen) < 0.5) v = normalized(sources[q % S].position() + random_unit(gen) * 0.05);
      Observation o;
      o.direction = to_direction(v);
      o.score = u(gen);
      obs.push_back(o);
    }
    const auto a = associate(sources, obs, cfg);
    const auto expected = oracle::association_marginals(sources, obs);
    for (std::size_t q = 0; q < Q; ++q) {
      double sum = a.false_alarm(q) + a.new_source(q);
      worst_marginal = std::max({worst_marginal, std::abs(a.false_alarm(q) - expected[q][0]),
                                 std::abs(a.new_source(q) - expected[q][1])});
      for (std::size_t s = 0; s < S; ++s) {
        sum += a.from_source(q, s);
        worst_marginal = std::max(worst_marginal, std::abs(a.from_source(q, s) - expected[q][2 + s]));
      }
      worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    }
    ++fixtures;
  }
  Outcome o;
  o.pass = worst_marginal <= 1e-9 && worst_sum <= 1e-9;
  o.detail = fmt("%zu fixtures, max marginal deviation %.3g, max sum deviation %.3g", fixtures, worst_marginal,
                 worst_sum);
  return o;
}

Outcome plane_wave_invariant() {
  const SignalType signals[] = {SignalType::white_noise, SignalType::speech_like_modulated_noise,
                                SignalType::sine_sweep};
  const double dirs[][2] = {{-120.0, 35.0}, {10.0, -60.0}, {75.0, 5.0}, {180.0, 89.0}};
  double worst = 0.0;
  std::size_t checked = 0, missing = 0;
  int k = 0;
  for (SignalType sig : signals) {
    for (const auto& d : dirs) {
      SceneSource src = talker("s", d[0], d[1], 0.1, 2.0);
      src.signal = sig;
      SceneSpec spec;
      spec.duration = 2.0;
      spec.seed = static_cast<std::uint64_t>(200 + k++);
      spec.sources = {src};
      const auto frames = stft(synthesize(spec).audio, FrontendConfig{});
      double peak = 0.0;
      for (const auto& f : frames) {
        for (const auto& b : f.bins) peak = std::max(peak, std::norm(b.w));
      }
      for (const auto& f : frames) {
        for (const auto& b : f.bins) {
          if (std::norm(b.w) <= 1e-6 * peak) continue;
          const auto r = plane_wave_ratio(b);
          if (!r) {
            ++missing;
            continue;
          }
          worst = std::max(worst, std::abs(*r - spec.encoding_constant) / spec.encoding_constant);
          ++checked;
        }
      }
    }
  }
  Outcome o;
  o.pass = checked > 0 && missing == 0 && worst <= 1e-6;
  o.detail = fmt("%zu bins, max relative deviation %.3g", checked, worst);
  return o;
}

Outcome hungarian_oracle() {
  auto gen = test::rng(606);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  std::size_t mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<std::vector<double>> m(4, std::vector<double>(4));
    for (auto& row : m) {
      for (auto& v : row) v = u(gen);
    }
    const auto a = hungarian(m);
    double cost = 0.0;
    for (std::size_t r = 0; r < 4; ++r) cost += m[r][static_cast<std::size_t>(a.row_to_col[r])];
    if (cost != oracle::brute_force_assignment(m)) ++mismatches;
  }
  Outcome o;
  o.pass = mismatches == 0;
  o.detail = fmt("1000 matrices, %zu mismatches", mismatches);
  return o;
}

Outcome filter_numerics() {
  auto gen = test::rng(707);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  TrackerConfig cfg;
  Rng rng(708);
  std::vector<TrackedSource> sources;
  int next_id = 0;
  const std::vector<Vec3> anchors{random_unit(gen), random_unit(gen), random_unit(gen), random_unit(gen)};
  double worst_weight = 0.0, worst_sphere = 0.0;
  std::size_t trigger_errors = 0, resamples = 0, checks = 0;

  auto inspect = [&] {
    for (const auto& s : sources) {
      double w = 0.0, off = 0.0;
      for (const auto& p : s.particles) {
        w += p.weight;
        off = std::max(off, std::abs(norm(p.position) - 1.0));
      }
      worst_weight = std::max(worst_weight, std::abs(w - 1.0));
      worst_sphere = std::max(worst_sphere, off);
      ++checks;
    }
  };

  for (int step = 1; step <= 10000; ++step) {
    const double now = step * cfg.hop;
    std::vector<Observation> obs;
    const int q = std::uniform_int_distribution<int>(0, 4)(gen);
    for (int k = 0; k < q; ++k) {
      const Vec3 v = u(gen) < 0.75 ? normalized(anchors[k] + random_unit(gen) * 0.05) : random_unit(gen);
      Observation o;
      o.direction = to_direction(v);
      o.score = u(gen);
      obs.push_back(o);
    }
    for (auto& s : sources) predict(s, cfg, rng);
    inspect();
    for (auto& s : sources) observability(s, cfg);
    const auto assoc = associate(sources, obs, cfg);
    for (std::size_t s = 0; s < sources.size(); ++s) {
      update_source_probability(sources[s], source_observed_probability(assoc, s), now, cfg);
    }
    for (std::size_t s = 0; s < sources.size(); ++s) update_weights(sources[s], assoc, s, cfg);
    inspect();
    for (auto& s : sources) {
      const bool expected = effective_sample_size(s) < cfg.resample_fraction * static_cast<double>(cfg.particles);
      const bool ran = resample(s, cfg, rng);
      if (ran != expected) ++trigger_errors;
      if (ran) ++resamples;
    }
    inspect();
    lifecycle(sources, assoc, obs, cfg, now, next_id);
    suppress_redundant(sources, cfg, now);
    inspect();
  }
  Outcome o;
  o.pass = worst_weight <= 1e-9 && worst_sphere <= 1e-9 && trigger_errors == 0 && resamples > 0;
  o.detail = fmt("%zu source checks, max weight deviation %.3g, max off-sphere %.3g, %zu resamples, %zu trigger "
                 "mismatches",
                 checks, worst_weight, worst_sphere, resamples, trigger_errors);
  return o;
}

Outcome dft_oracle() {
  auto gen = test::rng(808);
  std::normal_distribution<double> n;
  RealFft fft(64);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> x(64);
    for (auto& v : x) v = n(gen);
    const auto fast = fft.forward(x);
    const auto slow = oracle::naive_dft(x);
    for (std::size_t k = 0; k < slow.size(); ++k) worst = std::max(worst, std::abs(fast[k] - slow[k]));
  }

  // The full frontend on 64-sample frames with a rectangular window.
  FrontendConfig cfg;
  cfg.frame_len = 64.0 / 24000.0;
  cfg.window = WindowType::rectangular;
  cfg.f_lo = 1.0;
  cfg.f_hi = 12000.0;
  AudioBuffer buffer = AudioBuffer::zeros(24000, 4, 64 * 40);
  for (auto& ch : buffer.channels) {
    for (auto& v : ch) v = n(gen);
  }
  const auto frames = stft(buffer, cfg);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    for (std::size_t c = 0; c < 4; ++c) {
      const auto begin = buffer.channels[c].begin() + static_cast<std::ptrdiff_t>(32 * i);
      const auto ref = oracle::naive_dft(std::vector<double>(begin, begin + 64));
      for (std::size_t b = 0; b < frames[i].bins.size(); ++b) {
        const auto& bin = frames[i].bins[b];
        const Complex got = c == 0 ? bin.w : c == 1 ? bin.x : c == 2 ? bin.y : bin.z;
        worst = std::max(worst, std::abs(got - ref[b + 1]));
      }
    }
  }
  Outcome o;
  o.pass = worst <= 1e-9 && !frames.empty();
  o.detail = fmt("1000 frames plus %zu frontend frames, max deviation %.3g", frames.size(), worst);
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism() {
  const auto dir = test::scratch_dir("acceptance_determinism");
  SceneSpec spec = noisy_scene(6.0, 15.0, 909, {talker("a", -30.0, 10.0, 0.5, 6.0), talker("b", 100.0, -20.0, 0.5, 6.0)});
  spec.sources[1].trajectory.push_back({6.0, {deg2rad(160.0), 0.0}});
  PipelineConfig cfg;
  cfg.seed = 910;
  std::map<std::string, std::string> first;
  bool identical = true;
  for (int run = 0; run < 2; ++run) {
    const auto wav = dir / ("scene" + std::to_string(run) + ".wav");
    const auto truth = dir / ("truth" + std::to_string(run) + ".csv");
    const auto tracks = dir / ("tracks" + std::to_string(run) + ".jsonl");
    write_scene(wav.string(), truth.string(), synthesize(spec));
    run_track(wav.string(), cfg, tracks.string());
    const std::map<std::string, std::string> out{
        {"wav", slurp(wav)}, {"truth", slurp(truth)}, {"tracks", slurp(tracks)}};
    if (run == 0) {
      first = out;
    } else {
      identical = out == first;
    }
  }
  std::filesystem::remove_all(dir);
  Outcome o;
  o.pass = identical && !first["tracks"].empty();
  o.detail = fmt("wav %zu bytes, truth %zu bytes, tracks %zu bytes, %s", first["wav"].size(),
                 first["truth"].size(), first["tracks"].size(), identical ? "identical" : "differ");
  return o;
}

Outcome real_time() {
  const auto dir = test::scratch_dir("acceptance_realtime");
  constexpr double duration = 60.0;
  std::vector<SceneSource> sources{talker("a", 0.0, 0.0, 0.5, duration), talker("b", 90.0, 20.0, 0.8, duration),
                                   talker("c", -120.0, -10.0, 1.1, duration), talker("d", 170.0, 40.0, 1.4, duration)};
  const auto wav = dir / "scene.wav";
  const auto truth = dir / "truth.csv";
  write_scene(wav.string(), truth.string(), synthesize(noisy_scene(duration, 15.0, 1001, sources)));
  PipelineConfig cfg;
  cfg.tracker.max_sources = 4;
  cfg.localizer.max_observations = 4;
  const auto start = Clock::now();
  const auto summary = run_track(wav.string(), cfg, (dir / "tracks.jsonl").string());
  const double elapsed = seconds_since(start);
  std::filesystem::remove_all(dir);
  Outcome o;
  o.pass = elapsed < duration;
  o.detail = fmt("%zu frames in %.2f s wall clock, up to %zu visible", summary.frames, elapsed, summary.max_visible);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"static source tracked", static_source},
      {"two sources tracked with stable ids", two_sources},
      {"moving source tracked without id switches", moving_source},
      {"association marginals match enumeration", association_oracle},
      {"plane-wave ratio equals encoding constant", plane_wave_invariant},
      {"Hungarian matches brute force", hungarian_oracle},
      {"particle filter numerics", filter_numerics},
      {"STFT matches naive DFT", dft_oracle},
      {"simulate and track are deterministic", determinism},
      {"real-time throughput", real_time},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
