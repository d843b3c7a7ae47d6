#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tramp/simulator.hpp"
#include "tramp/tracker.hpp"

namespace tramp {

inline constexpr double kNoOverlapCost = 1e6;

// Track and truth hop grids cannot be matched within half a hop.
class AlignmentError : public std::runtime_error {
 public:
  explicit AlignmentError(const std::string& what) : std::runtime_error(what) {}
};

// Wrapped absolute azimuth difference in degrees, [0, 180].
double azimuth_error(double estimate, double reference);

struct Assignment {
  std::vector<int> row_to_col;  // -1 when the row is unassigned
  double total_cost = 0.0;
};

// Minimum-cost one-to-one assignment on a rows x cols matrix (rectangular
// allowed; shorter side fully assigned).
Assignment hungarian(const std::vector<std::vector<double>>& cost);

struct PairScore {
  std::string truth_label;
  int track_id = 0;
  double azimuth_error_deg = 0.0;
  double elevation_error_deg = 0.0;
  std::size_t overlap_hops = 0;
  double overlap_seconds = 0.0;
};

struct EvalReport {
  std::vector<std::string> truth_labels;
  std::vector<int> track_ids;
  std::vector<std::vector<double>> azimuth_cost;  // truth x track, degrees
  std::vector<PairScore> pairs;                   // assigned, overlapping pairs
  std::optional<double> azimuth_error_deg;        // absent when nothing assigned
  std::optional<double> elevation_error_deg;
};

EvalReport evaluate(std::span<const TrackFrame> tracks, std::span<const TruthRecord> truth);

struct TaskSummary {
  std::size_t recordings = 0;  // recordings with a defined error
  std::optional<double> azimuth_mean, azimuth_std;
  std::optional<double> elevation_mean, elevation_std;
};

// Mean and population standard deviation over recordings.
TaskSummary summarize(std::span<const EvalReport> reports);

}  // namespace tramp
