#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "tramp/geometry.hpp"
#include "tramp/localizer.hpp"

namespace tramp {

using Rng = std::mt19937_64;

struct TrackerConfig {
  double hop = 0.02;          // seconds between steps
  double damping = 2.0;       // Langevin alpha, 1/s
  double excitation = 0.2;    // Langevin beta, m/s
  double radius = 1.0;        // meters
  std::size_t particles = 300;
  std::size_t max_sources = 4;
  std::size_t max_observations = 4;

  double enable_threshold = 0.3;
  double new_source_threshold = 0.8;
  double hangover = 0.1;        // seconds enabled before visible
  double deletion_delay = 0.2;  // seconds disabled before deletion
  double merge_angle_deg = 5.0;
  double merge_factor = 0.95;
  double resample_fraction = 0.7;

  double likelihood_variance = 0.008;
  double velocity_factor = 0.2;
  double false_alarm_density = 0.25 * std::numbers::inv_pi;  // (4 pi)^-1
  double new_source_density = 0.25 * std::numbers::inv_pi;
  double false_alarm_prior = 0.5;
  double new_source_prior = 0.05;

  double existence_factor = 0.5;
  double activity_smoothing = 0.4;
  double activity_offset = 0.3;
  double activity_floor = 0.15;
  double initial_activity = 0.5;

  // v <- a v + b n with a = exp(-damping hop), b = excitation sqrt(1 - a^2).
  double langevin_a() const;
  double langevin_b() const;

  void validate() const;
};

struct Particle {
  Vec3 position;
  Vec3 velocity;
  Vec3 previous;  // position before the latest predict
  double weight = 0.0;
};

struct TrackedSource {
  int id = 0;
  std::vector<Particle> particles;
  double p_observed = 0.0;   // probability the source was observed this step
  double p_exist = 0.0;      // existence prior carried to the next step
  double p_act = 0.0;        // activity prior carried to the next step
  double p_observable = 0.0; // p_exist * p_act for the current step
  bool enabled = false;
  double enabled_since = 0.0;
  double disabled_since = 0.0;
  bool visible = false;
  double created = 0.0;

  Vec3 position() const;  // weighted particle mean
  Vec3 velocity() const;
  Direction direction() const { return to_direction(position()); }
  double enabled_duration(double now) const { return enabled ? now - enabled_since : 0.0; }
};

// Source with every particle at `point`, zero velocity, uniform weights.
TrackedSource make_source(int id, const Vec3& point, double p_new, double now, const TrackerConfig& config);

void predict(TrackedSource& source, const TrackerConfig& config, Rng& rng);

// 0.008 / (1 + 0.2 alpha), alpha the angle between velocity and displacement;
// alpha = pi/2 when either vector is (near) zero.
double adaptive_variance(const Vec3& velocity, const Vec3& displacement, const TrackerConfig& config);

// Isotropic 3-D Gaussian density of the observation point around the
// particle's predicted position.
double observation_likelihood(const Particle& particle, const Vec3& observation, const TrackerConfig& config);

struct AssociationResult {
  std::size_t sources = 0;
  std::size_t observations = 0;
  std::size_t function_count = 0;  // (S + 2)^Q
  // marginals[q * (S + 2) + k]: k = 0 false alarm, 1 new source, 2 + s source s.
  std::vector<double> marginals;
  // source_likelihood[s * Q + q] = sum_p w_p p(o_q | particle p).
  std::vector<double> source_likelihood;
  // particle_likelihood[s][q * P + p].
  std::vector<std::vector<double>> particle_likelihood;

  double false_alarm(std::size_t q) const { return marginals[q * (sources + 2)]; }
  double new_source(std::size_t q) const { return marginals[q * (sources + 2) + 1]; }
  double from_source(std::size_t q, std::size_t s) const { return marginals[q * (sources + 2) + 2 + s]; }
};

// Exhaustive enumeration of observation-to-{FA, new, source} mappings.
// Uses each source's p_observable as the assignment prior.
AssociationResult associate(std::span<const TrackedSource> sources, std::span<const Observation> observations,
                            const TrackerConfig& config);

// Mean association marginal of source s over observations (0 when none).
double source_observed_probability(const AssociationResult& assoc, std::size_t s);

// Stores P_s and updates the enabled flag, its timers and visibility.
void update_source_probability(TrackedSource& source, double p_observed, double now, const TrackerConfig& config);

void update_weights(TrackedSource& source, const AssociationResult& assoc, std::size_t s,
                    const TrackerConfig& config);

// Advances the existence and activity recursions from the stored previous
// step values; returns and stores the observability p_exist * p_act.
double observability(TrackedSource& source, const TrackerConfig& config);

double effective_sample_size(const TrackedSource& source);

// Systematic resampling when ESS < resample_fraction * P. Returns true if it ran.
bool resample(TrackedSource& source, const TrackerConfig& config, Rng& rng);

// Creates sources for confident new-source observations, prunes to
// max_sources, deletes long-disabled sources. Returns ids removed.
std::vector<int> lifecycle(std::vector<TrackedSource>& sources, const AssociationResult& assoc,
                           std::span<const Observation> observations, const TrackerConfig& config, double now,
                           int& next_id);

// Pairs sources greedily by angular distance; in each pair closer than the
// merge angle, the source enabled for less time has its existence scaled down.
void suppress_redundant(std::vector<TrackedSource>& sources, const TrackerConfig& config, double now);

struct SourceEstimate {
  int id = 0;
  Direction direction;
  double activity = 0.0;
};

struct TrackFrame {
  double time = 0.0;
  std::vector<SourceEstimate> sources;  // visible sources only
  std::vector<int> created;
  std::vector<int> deleted;
};

class Tracker {
 public:
  explicit Tracker(const TrackerConfig& config, std::uint64_t seed = 0);

  TrackFrame step(std::span<const Observation> observations, double now);
  // Visible estimates at `now` without advancing the filter.
  TrackFrame snapshot(double now) const;

  const std::vector<TrackedSource>& sources() const { return sources_; }
  const TrackerConfig& config() const { return config_; }

 private:
  TrackerConfig config_;
  Rng rng_;
  std::vector<TrackedSource> sources_;
  int next_id_ = 0;
};

}  // namespace tramp
