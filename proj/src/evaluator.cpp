#include "tramp/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

namespace tramp {

double azimuth_error(double estimate, double reference) {
  const double d = std::abs(std::fmod(estimate - reference, 2.0 * std::numbers::pi));
  return rad2deg(std::min(d, 2.0 * std::numbers::pi - d));
}

Assignment hungarian(const std::vector<std::vector<double>>& cost) {
  Assignment result;
  const std::size_t rows = cost.size();
  if (rows == 0) return result;
  const std::size_t cols = cost.front().size();
  result.row_to_col.assign(rows, -1);
  if (cols == 0) return result;

  // Shortest augmenting path with potentials on an n x m problem, n <= m.
  const bool transposed = rows > cols;
  const std::size_t n = transposed ? cols : rows;
  const std::size_t m = transposed ? rows : cols;
  auto at = [&](std::size_t i, std::size_t j) { return transposed ? cost[j - 1][i - 1] : cost[i - 1][j - 1]; };

  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
  std::vector<std::size_t> match(m + 1, 0), way(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(m + 1, inf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = at(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  for (std::size_t j = 1; j <= m; ++j) {
    if (match[j] == 0) continue;
    const std::size_t i = match[j];
    if (transposed) {
      result.row_to_col[j - 1] = static_cast<int>(i - 1);
    } else {
      result.row_to_col[i - 1] = static_cast<int>(j - 1);
    }
  }
  for (std::size_t r = 0; r < rows; ++r) {
    if (result.row_to_col[r] >= 0) result.total_cost += cost[r][static_cast<std::size_t>(result.row_to_col[r])];
  }
  return result;
}

namespace {

double median_spacing(std::vector<double> times) {
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  if (times.size() < 2) return 0.0;
  std::vector<double> diffs;
  for (std::size_t i = 1; i < times.size(); ++i) diffs.push_back(times[i] - times[i - 1]);
  std::nth_element(diffs.begin(), diffs.begin() + static_cast<std::ptrdiff_t>(diffs.size() / 2), diffs.end());
  return diffs[diffs.size() / 2];
}

}  // namespace

EvalReport evaluate(std::span<const TrackFrame> tracks, std::span<const TruthRecord> truth) {
  EvalReport report;
  if (truth.empty()) return report;
  if (tracks.empty()) throw AlignmentError("no track frames to align with the ground truth");

  std::vector<double> frame_times;
  frame_times.reserve(tracks.size());
  for (const auto& f : tracks) frame_times.push_back(f.time);
  std::vector<std::size_t> order(tracks.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return frame_times[a] < frame_times[b]; });

  double hop = median_spacing(frame_times);
  if (hop == 0.0) {
    std::vector<double> truth_times;
    for (const auto& r : truth) truth_times.push_back(r.time);
    hop = median_spacing(truth_times);
  }
  const double tolerance = hop / 2.0 + 1e-9;

  auto align = [&](double t) -> const TrackFrame& {
    auto it = std::lower_bound(order.begin(), order.end(), t,
                               [&](std::size_t idx, double value) { return frame_times[idx] < value; });
    std::size_t best = order.front();
    double best_dt = std::numeric_limits<double>::infinity();
    if (it != order.end()) {
      best = *it;
      best_dt = std::abs(frame_times[*it] - t);
    }
    if (it != order.begin()) {
      const std::size_t prev = *(it - 1);
      if (std::abs(frame_times[prev] - t) <= best_dt) {
        best = prev;
        best_dt = std::abs(frame_times[prev] - t);
      }
    }
    if (best_dt > tolerance) {
      throw AlignmentError("ground truth time " + std::to_string(t) + " s has no track frame within " +
                           std::to_string(tolerance) + " s");
    }
    return tracks[best];
  };

  std::map<std::string, std::size_t> label_index;
  for (const auto& r : truth) label_index.emplace(r.label, 0);
  std::size_t next = 0;
  for (auto& [label, idx] : label_index) {
    idx = next++;
    report.truth_labels.push_back(label);
  }
  std::map<int, std::size_t> id_index;
  for (const auto& f : tracks) {
    for (const auto& s : f.sources) id_index.emplace(s.id, 0);
  }
  next = 0;
  for (auto& [id, idx] : id_index) {
    idx = next++;
    report.track_ids.push_back(id);
  }

  const std::size_t R = report.truth_labels.size();
  const std::size_t C = report.track_ids.size();
  std::vector<std::vector<double>> az_sum(R, std::vector<double>(C, 0.0));
  std::vector<std::vector<double>> el_sum(R, std::vector<double>(C, 0.0));
  std::vector<std::vector<std::size_t>> overlap(R, std::vector<std::size_t>(C, 0));
  for (const auto& r : truth) {
    const TrackFrame& f = align(r.time);
    const std::size_t i = label_index.at(r.label);
    for (const auto& s : f.sources) {
      const std::size_t j = id_index.at(s.id);
      az_sum[i][j] += azimuth_error(s.direction.azimuth, r.direction.azimuth);
      el_sum[i][j] += rad2deg(std::abs(s.direction.elevation - r.direction.elevation));
      ++overlap[i][j];
    }
  }

  report.azimuth_cost.assign(R, std::vector<double>(C, kNoOverlapCost));
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) {
      if (overlap[i][j] > 0) report.azimuth_cost[i][j] = az_sum[i][j] / static_cast<double>(overlap[i][j]);
    }
  }
  if (C == 0) return report;

  const Assignment assignment = hungarian(report.azimuth_cost);
  double az_total = 0.0, el_total = 0.0;
  for (std::size_t i = 0; i < R; ++i) {
    const int col = assignment.row_to_col[i];
    if (col < 0) continue;
    const auto j = static_cast<std::size_t>(col);
    if (overlap[i][j] == 0) continue;
    const auto n = static_cast<double>(overlap[i][j]);
    PairScore pair{report.truth_labels[i], report.track_ids[j], az_sum[i][j] / n, el_sum[i][j] / n,
                   overlap[i][j], n * hop};
    az_total += pair.azimuth_error_deg;
    el_total += pair.elevation_error_deg;
    report.pairs.push_back(std::move(pair));
  }
  if (!report.pairs.empty()) {
    report.azimuth_error_deg = az_total / static_cast<double>(report.pairs.size());
    report.elevation_error_deg = el_total / static_cast<double>(report.pairs.size());
  }
  return report;
}

TaskSummary summarize(std::span<const EvalReport> reports) {
  TaskSummary summary;
  auto stats = [](const std::vector<double>& xs, std::optional<double>& mean, std::optional<double>& sd) {
    if (xs.empty()) return;
    double m = 0.0;
    for (double x : xs) m += x;
    m /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) var += (x - m) * (x - m);
    mean = m;
    sd = std::sqrt(var / static_cast<double>(xs.size()));
  };
  std::vector<double> az, el;
  for (const auto& r : reports) {
    if (r.azimuth_error_deg) az.push_back(*r.azimuth_error_deg);
    if (r.elevation_error_deg) el.push_back(*r.elevation_error_deg);
  }
  summary.recordings = az.size();
  stats(az, summary.azimuth_mean, summary.azimuth_std);
  stats(el, summary.elevation_mean, summary.elevation_std);
  return summary;
}

}  // namespace tramp
