#include "tramp/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tramp/errors.hpp"

namespace tramp {

namespace {

constexpr double kTiny = 1e-9;
constexpr double kTimeEps = 1e-9;

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw ConfigError(std::string("tracker.") + name + " must lie in [0, 1]");
}

}  // namespace

double TrackerConfig::langevin_a() const { return std::exp(-damping * hop); }

double TrackerConfig::langevin_b() const {
  const double a = langevin_a();
  return excitation * std::sqrt(1.0 - a * a);
}

void TrackerConfig::validate() const {
  if (!(hop > 0.0)) throw ConfigError("tracker.hop must be positive");
  if (!(damping >= 0.0)) throw ConfigError("tracker.damping must be non-negative");
  if (!(excitation >= 0.0)) throw ConfigError("tracker.excitation must be non-negative");
  if (!(radius > 0.0)) throw ConfigError("tracker.radius must be positive");
  if (particles == 0) throw ConfigError("tracker.particles must be >= 1");
  if (max_sources == 0) throw ConfigError("tracker.max_sources must be >= 1");
  if (max_observations == 0) throw ConfigError("tracker.max_observations must be >= 1");
  check_probability(enable_threshold, "enable_threshold");
  check_probability(new_source_threshold, "new_source_threshold");
  check_probability(merge_factor, "merge_factor");
  check_probability(resample_fraction, "resample_fraction");
  check_probability(false_alarm_prior, "false_alarm_prior");
  check_probability(new_source_prior, "new_source_prior");
  check_probability(existence_factor, "existence_factor");
  check_probability(activity_smoothing, "activity_smoothing");
  check_probability(activity_offset, "activity_offset");
  check_probability(activity_smoothing + activity_offset, "activity_smoothing + activity_offset");
  check_probability(activity_floor, "activity_floor");
  check_probability(initial_activity, "initial_activity");
  if (!(hangover >= 0.0 && deletion_delay >= 0.0)) throw ConfigError("tracker timers must be non-negative");
  if (!(merge_angle_deg >= 0.0)) throw ConfigError("tracker.merge_angle must be non-negative");
  if (!(likelihood_variance > 0.0 && velocity_factor >= 0.0)) {
    throw ConfigError("tracker likelihood parameters out of range");
  }
  if (!(false_alarm_density > 0.0 && new_source_density > 0.0)) {
    throw ConfigError("tracker densities must be positive");
  }
}

Vec3 TrackedSource::position() const {
  Vec3 p;
  for (const auto& particle : particles) p += particle.weight * particle.position;
  return p;
}

Vec3 TrackedSource::velocity() const {
  Vec3 v;
  for (const auto& particle : particles) v += particle.weight * particle.velocity;
  return v;
}

TrackedSource make_source(int id, const Vec3& point, double p_new, double now, const TrackerConfig& config) {
  TrackedSource s;
  s.id = id;
  const Vec3 on_sphere = normalized(point) * config.radius;
  const double w = 1.0 / static_cast<double>(config.particles);
  s.particles.assign(config.particles, Particle{on_sphere, {}, on_sphere, w});
  s.p_observed = p_new;
  s.p_exist = p_new;
  s.p_act = config.initial_activity;
  s.enabled = p_new >= config.enable_threshold;
  s.enabled_since = now;
  s.disabled_since = now;
  s.created = now;
  return s;
}

void predict(TrackedSource& source, const TrackerConfig& config, Rng& rng) {
  const double a = config.langevin_a();
  const double b = config.langevin_b();
  std::normal_distribution<double> normal(0.0, 1.0);
  for (auto& p : source.particles) {
    p.previous = p.position;
    const double nx = normal(rng);
    const double ny = normal(rng);
    const double nz = normal(rng);
    p.velocity = a * p.velocity + b * Vec3{nx, ny, nz};
    p.position += config.hop * p.velocity;
    const Vec3 unit = normalized(p.position);
    p.position = unit * config.radius;
    p.velocity -= dot(p.velocity, unit) * unit;
  }
}

double adaptive_variance(const Vec3& velocity, const Vec3& displacement, const TrackerConfig& config) {
  double alpha = std::numbers::pi / 2;
  if (norm(velocity) >= kTiny && norm(displacement) >= kTiny) alpha = angle_between(velocity, displacement);
  return config.likelihood_variance / (1.0 + config.velocity_factor * alpha);
}

double observation_likelihood(const Particle& particle, const Vec3& observation, const TrackerConfig& config) {
  const double var = adaptive_variance(particle.velocity, observation - particle.previous, config);
  const double d2 = squared_norm(observation - particle.position);
  return std::exp(-0.5 * d2 / var) / std::pow(2.0 * std::numbers::pi * var, 1.5);
}

AssociationResult associate(std::span<const TrackedSource> sources, std::span<const Observation> observations,
                            const TrackerConfig& config) {
  AssociationResult r;
  const std::size_t S = sources.size();
  const std::size_t Q = observations.size();
  r.sources = S;
  r.observations = Q;
  r.particle_likelihood.resize(S);
  if (Q == 0) return r;

  std::vector<Vec3> points;
  points.reserve(Q);
  for (const auto& o : observations) points.push_back(to_cartesian(o.direction, config.radius));

  r.source_likelihood.assign(S * Q, 0.0);
  for (std::size_t s = 0; s < S; ++s) {
    const auto& particles = sources[s].particles;
    const std::size_t P = particles.size();
    auto& cache = r.particle_likelihood[s];
    cache.resize(Q * P);
    for (std::size_t q = 0; q < Q; ++q) {
      double total = 0.0;
      for (std::size_t p = 0; p < P; ++p) {
        const double l = observation_likelihood(particles[p], points[q], config);
        cache[q * P + p] = l;
        total += particles[p].weight * l;
      }
      r.source_likelihood[s * Q + q] = total;
    }
  }

  // Per-observation factor of each target: likelihood times assignment prior.
  const std::size_t K = S + 2;
  std::vector<double> factor(Q * K);
  for (std::size_t q = 0; q < Q; ++q) {
    const double score = observations[q].score;
    factor[q * K + 0] = config.false_alarm_density * config.false_alarm_prior * (1.0 - score);
    factor[q * K + 1] = config.new_source_density * config.new_source_prior * score;
    for (std::size_t s = 0; s < S; ++s) {
      factor[q * K + 2 + s] = r.source_likelihood[s * Q + q] * score * sources[s].p_observable;
    }
  }

  std::size_t count = 1;
  for (std::size_t q = 0; q < Q; ++q) count *= K;
  r.function_count = count;
  r.marginals.assign(Q * K, 0.0);
  std::vector<std::size_t> f(Q, 0);
  double total = 0.0;
  for (std::size_t m = 0; m < count; ++m) {
    double prob = 1.0;
    for (std::size_t q = 0; q < Q; ++q) prob *= factor[q * K + f[q]];
    total += prob;
    for (std::size_t q = 0; q < Q; ++q) r.marginals[q * K + f[q]] += prob;
    for (std::size_t q = 0; q < Q; ++q) {  // mixed-radix increment
      if (++f[q] < K) break;
      f[q] = 0;
    }
  }
  if (total > 0.0) {
    for (auto& v : r.marginals) v /= total;
  } else {
    std::fill(r.marginals.begin(), r.marginals.end(), 0.0);
    for (std::size_t q = 0; q < Q; ++q) r.marginals[q * K] = 1.0;
  }
  return r;
}

double source_observed_probability(const AssociationResult& assoc, std::size_t s) {
  if (assoc.observations == 0) return 0.0;
  double sum = 0.0;
  for (std::size_t q = 0; q < assoc.observations; ++q) sum += assoc.from_source(q, s);
  return std::clamp(sum / static_cast<double>(assoc.observations), 0.0, 1.0);
}

void update_source_probability(TrackedSource& source, double p_observed, double now, const TrackerConfig& config) {
  source.p_observed = p_observed;
  const bool enabled = p_observed >= config.enable_threshold;
  if (enabled && !source.enabled) source.enabled_since = now;
  if (!enabled && source.enabled) source.disabled_since = now;
  source.enabled = enabled;
  source.visible = enabled && now - source.enabled_since >= config.hangover - kTimeEps;
}

void update_weights(TrackedSource& source, const AssociationResult& assoc, std::size_t s,
                    const TrackerConfig& /*config*/) {
  auto& particles = source.particles;
  const std::size_t P = particles.size();
  const std::size_t Q = assoc.observations;
  const double ps = source.p_observed;

  std::vector<double> evidence(P, 0.0);
  double evidence_total = 0.0;
  if (Q > 0) {
    const auto& cache = assoc.particle_likelihood[s];
    for (std::size_t q = 0; q < Q; ++q) {
      const double m = assoc.from_source(q, s);
      if (m == 0.0) continue;
      for (std::size_t p = 0; p < P; ++p) evidence[p] += m * cache[q * P + p];
    }
    for (double e : evidence) evidence_total += e;
  }

  const double uniform = (1.0 - ps) / static_cast<double>(P);
  double total = 0.0;
  for (std::size_t p = 0; p < P; ++p) {
    double density = uniform;
    if (evidence_total > 0.0) density += ps * evidence[p] / evidence_total;
    particles[p].weight *= density;
    total += particles[p].weight;
  }
  if (total > 0.0 && std::isfinite(total)) {
    for (auto& p : particles) p.weight /= total;
  } else {
    for (auto& p : particles) p.weight = 1.0 / static_cast<double>(P);
  }
}

double observability(TrackedSource& source, const TrackerConfig& config) {
  const double ps = source.p_observed;
  const double prior_exist = source.p_exist;
  const double carried = config.existence_factor * prior_exist / (1.0 - config.existence_factor * prior_exist);
  const double exist = std::clamp(ps + (1.0 - ps) * carried, 0.0, 1.0);

  const double instant = config.activity_floor + (1.0 - config.activity_floor) * ps;
  const double prior_act = source.p_act;
  const double den = std::max(prior_act * instant, kPowerFloor);
  const double posterior = 1.0 / (1.0 + (1.0 - prior_act) * (1.0 - instant) / den);
  const double act = std::clamp(config.activity_smoothing * posterior + config.activity_offset, 0.0, 1.0);

  source.p_exist = exist;
  source.p_act = act;
  source.p_observable = exist * act;
  return source.p_observable;
}

double effective_sample_size(const TrackedSource& source) {
  double sum_sq = 0.0;
  for (const auto& p : source.particles) sum_sq += p.weight * p.weight;
  return sum_sq > 0.0 ? 1.0 / sum_sq : 0.0;
}

bool resample(TrackedSource& source, const TrackerConfig& config, Rng& rng) {
  const std::size_t P = source.particles.size();
  if (!(effective_sample_size(source) < config.resample_fraction * static_cast<double>(P))) return false;
  const double step = 1.0 / static_cast<double>(P);
  std::uniform_real_distribution<double> uniform(0.0, step);
  double u = uniform(rng);
  std::vector<Particle> next;
  next.reserve(P);
  double cumulative = source.particles[0].weight;
  std::size_t i = 0;
  for (std::size_t j = 0; j < P; ++j) {
    while (u > cumulative && i + 1 < P) cumulative += source.particles[++i].weight;
    next.push_back(source.particles[i]);
    next.back().weight = step;
    u += step;
  }
  source.particles = std::move(next);
  return true;
}

std::vector<int> lifecycle(std::vector<TrackedSource>& sources, const AssociationResult& assoc,
                           std::span<const Observation> observations, const TrackerConfig& config, double now,
                           int& next_id) {
  for (std::size_t q = 0; q < observations.size(); ++q) {
    const double p_new = assoc.new_source(q);
    if (p_new >= config.new_source_threshold) {
      sources.push_back(make_source(next_id++, to_cartesian(observations[q].direction), p_new, now, config));
    }
  }

  std::vector<int> removed;
  if (sources.size() > config.max_sources) {
    // Higher P_s first; on ties the older (lower id) source survives.
    std::stable_sort(sources.begin(), sources.end(), [](const TrackedSource& a, const TrackedSource& b) {
      return a.p_observed > b.p_observed || (a.p_observed == b.p_observed && a.id < b.id);
    });
    for (std::size_t i = config.max_sources; i < sources.size(); ++i) removed.push_back(sources[i].id);
    sources.resize(config.max_sources);
    std::sort(sources.begin(), sources.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  }

  std::erase_if(sources, [&](const TrackedSource& s) {
    const bool expired = !s.enabled && now - s.disabled_since >= config.deletion_delay - kTimeEps;
    if (expired) removed.push_back(s.id);
    return expired;
  });
  return removed;
}

void suppress_redundant(std::vector<TrackedSource>& sources, const TrackerConfig& config, double now) {
  const std::size_t n = sources.size();
  if (n < 2) return;
  std::vector<Vec3> position(n);
  for (std::size_t i = 0; i < n; ++i) position[i] = sources[i].position();

  struct Pair {
    double angle;
    std::size_t i, j;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({angle_between(position[i], position[j]), i, j});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.angle < b.angle; });

  const double limit = deg2rad(config.merge_angle_deg);
  std::vector<char> used(n, 0);
  for (const auto& [angle, i, j] : pairs) {
    if (!(angle < limit)) break;
    if (used[i] || used[j]) continue;
    used[i] = used[j] = 1;
    auto& a = sources[i];
    auto& b = sources[j];
    const double da = a.enabled_duration(now);
    const double db = b.enabled_duration(now);
    TrackedSource* victim = nullptr;
    if (da < db) {
      victim = &a;
    } else if (db < da) {
      victim = &b;
    } else {
      victim = a.id < b.id ? &b : &a;
    }
    victim->p_exist *= config.merge_factor;
  }
}

Tracker::Tracker(const TrackerConfig& config, std::uint64_t seed) : config_(config), rng_(seed) {
  config_.validate();
}

TrackFrame Tracker::step(std::span<const Observation> observations, double now) {
  if (observations.size() > config_.max_observations) observations = observations.first(config_.max_observations);

  for (auto& s : sources_) predict(s, config_, rng_);
  for (auto& s : sources_) observability(s, config_);
  const AssociationResult assoc = associate(sources_, observations, config_);
  for (std::size_t s = 0; s < sources_.size(); ++s) {
    update_source_probability(sources_[s], source_observed_probability(assoc, s), now, config_);
  }
  for (std::size_t s = 0; s < sources_.size(); ++s) update_weights(sources_[s], assoc, s, config_);
  for (auto& s : sources_) resample(s, config_, rng_);

  TrackFrame frame;
  frame.time = now;
  const int first_new = next_id_;
  frame.deleted = lifecycle(sources_, assoc, observations, config_, now, next_id_);
  for (int id = first_new; id < next_id_; ++id) {
    if (std::find(frame.deleted.begin(), frame.deleted.end(), id) == frame.deleted.end()) frame.created.push_back(id);
  }
  suppress_redundant(sources_, config_, now);

  frame.sources = snapshot(now).sources;
  return frame;
}

TrackFrame Tracker::snapshot(double now) const {
  TrackFrame frame;
  frame.time = now;
  for (const auto& s : sources_) {
    if (s.visible) frame.sources.push_back({s.id, s.direction(), s.p_act});
  }
  return frame;
}

}  // namespace tramp
