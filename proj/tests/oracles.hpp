#pragma once

// Independent reference implementations used as test oracles. They share no
// code with the library beyond plain data types.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <vector>

#include "tramp/tracker.hpp"

namespace tramp::oracle {

// Bins 0..N/2 of the DFT by direct O(N^2) summation.
inline std::vector<std::complex<double>> naive_dft(const std::vector<double>& x) {
  const std::size_t n = x.size();
  std::vector<std::complex<double>> out(n / 2 + 1);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = -2.0 * std::numbers::pi * static_cast<double>((k * t) % n) / static_cast<double>(n);
      acc += x[t] * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

// Minimum assignment cost over every injective map from the shorter side.
inline double brute_force_assignment(const std::vector<std::vector<double>>& m) {
  const std::size_t rows = m.size(), cols = m.front().size();
  const bool wide = rows <= cols;
  const std::size_t small = wide ? rows : cols, large = wide ? cols : rows;
  std::vector<std::size_t> perm(large);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double c = 0.0;
    for (std::size_t i = 0; i < small; ++i) c += wide ? m[i][perm[i]] : m[perm[i]][i];
    best = std::min(best, c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Adaptive-variance Gaussian density with the default constants written out.
inline double particle_density(const Particle& p, const Vec3& o) {
  double alpha = std::numbers::pi / 2;
  const double dx0 = o.x - p.previous.x, dy0 = o.y - p.previous.y, dz0 = o.z - p.previous.z;
  const double nv = std::sqrt(p.velocity.x * p.velocity.x + p.velocity.y * p.velocity.y +
                              p.velocity.z * p.velocity.z);
  const double nd = std::sqrt(dx0 * dx0 + dy0 * dy0 + dz0 * dz0);
  if (nv >= 1e-9 && nd >= 1e-9) {
    const double c = (p.velocity.x * dx0 + p.velocity.y * dy0 + p.velocity.z * dz0) / (nv * nd);
    alpha = std::acos(std::clamp(c, -1.0, 1.0));
  }
  const double var = 0.008 / (1.0 + 0.2 * alpha);
  const double dx = o.x - p.position.x, dy = o.y - p.position.y, dz = o.z - p.position.z;
  return std::exp(-(dx * dx + dy * dy + dz * dz) / (2.0 * var)) / std::pow(2.0 * std::numbers::pi * var, 1.5);
}

// Association marginals by recursive enumeration of every function
// q -> {false alarm, new, source s}. Row q holds [FA, new, s0, s1, ...].
inline std::vector<std::vector<double>> association_marginals(const std::vector<TrackedSource>& sources,
                                                              const std::vector<Observation>& obs) {
  const std::size_t S = sources.size(), Q = obs.size();
  std::vector<std::vector<double>> like(Q, std::vector<double>(S, 0.0));
  for (std::size_t q = 0; q < Q; ++q) {
    const double ce = std::cos(obs[q].direction.elevation);
    const Vec3 o{std::cos(obs[q].direction.azimuth) * ce, std::sin(obs[q].direction.azimuth) * ce,
                 std::sin(obs[q].direction.elevation)};
    for (std::size_t s = 0; s < S; ++s) {
      for (const auto& p : sources[s].particles) like[q][s] += p.weight * particle_density(p, o);
    }
  }
  const double uniform = 1.0 / (4.0 * std::numbers::pi);
  std::vector<std::vector<double>> marg(Q, std::vector<double>(S + 2, 0.0));
  double total = 0.0;
  std::vector<int> f(Q);
  std::function<void(std::size_t)> rec = [&](std::size_t q) {
    if (q == Q) {
      double prob = 1.0;
      for (std::size_t i = 0; i < Q; ++i) {
        const double pq = obs[i].score;
        if (f[i] == -2) {
          prob *= uniform * 0.5 * (1.0 - pq);
        } else if (f[i] == -1) {
          prob *= uniform * 0.05 * pq;
        } else {
          prob *= like[i][static_cast<std::size_t>(f[i])] * pq * sources[static_cast<std::size_t>(f[i])].p_observable;
        }
      }
      total += prob;
      for (std::size_t i = 0; i < Q; ++i) marg[i][static_cast<std::size_t>(f[i] + 2)] += prob;
      return;
    }
    for (int k = -2; k < static_cast<int>(S); ++k) {
      f[q] = k;
      rec(q + 1);
    }
  };
  rec(0);
  for (auto& row : marg) {
    for (auto& v : row) v /= total;
  }
  return marg;
}

}  // namespace tramp::oracle
