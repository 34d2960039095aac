// Copyright 2026 The wienerl2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Monte Carlo simulation of J_T = integral_0^T w(t)^2 dt on discretised
// Wiener paths (trapezoidal rule on a uniform grid).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <thread>
#include <vector>

#include "wienerl2/distribution.hpp"
#include "wienerl2/errors.hpp"
#include "wienerl2/philox.hpp"

namespace wienerl2 {

struct McConfig {
  std::size_t paths = 100'000;
  std::size_t steps = 1024;
  std::uint64_t seed = 20260101;
  /// 0 picks std::thread::hardware_concurrency(). Results never depend on it.
  unsigned threads = 0;

  void validate() const {
    detail::require_domain(paths >= 1, "McConfig: paths must be >= 1");
    detail::require_domain(steps >= 2, "McConfig: steps must be >= 2");
  }
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Raw functional J_T of one path at two resolutions: `fine` uses all
/// increments, `coarse` every other grid point of the same path.
struct PathFunctional {
  double fine = 0.0;
  double coarse = 0.0;
};

/// Deterministic per-path sampler. Path i always sees the same increments
/// for a given seed, regardless of evaluation order or thread count.
class PathSampler {
 public:
  PathSampler(double T, std::size_t steps, std::uint64_t seed)
      : T_(T), steps_(steps), seed_(seed) {
    detail::require_domain(std::isfinite(T) && T > 0.0,
                           "PathSampler: T must be positive");
    detail::require_domain(steps >= 2, "PathSampler: steps must be >= 2");
  }

  [[nodiscard]] std::size_t steps() const { return steps_; }

  /// Trapezoidal J_T of path `index`.
  [[nodiscard]] double operator()(std::uint64_t index) const {
    return both_resolutions(index).fine;
  }

  [[nodiscard]] PathFunctional both_resolutions(std::uint64_t index) const {
    const NormalStream normals(seed_, index);
    const double h = T_ / static_cast<double>(steps_);
    const double sd = std::sqrt(h);
    double w = 0.0;
    double fine = 0.0;    // sum of w_i^2 for interior points
    double coarse = 0.0;  // same, even interior indices only
    std::uint64_t block = 0;
    for (std::size_t i = 1; i <= steps_; i += 2, ++block) {
      const auto [z0, z1] = normals.pair(block);
      w += sd * z0;
      const double w_odd = w * w;
      if (i == steps_) {
        fine += 0.5 * w_odd;
        break;
      }
      w += sd * z1;
      const double w_even = w * w;
      fine += w_odd;
      if (i + 1 == steps_) {
        fine += 0.5 * w_even;
        coarse += 0.5 * w_even;
      } else {
        fine += w_even;
        coarse += w_even;
      }
    }
    PathFunctional out;
    out.fine = h * fine;
    // An odd step count leaves the coarse grid one point short of T.
    out.coarse = steps_ % 2 == 0 ? 2.0 * h * coarse
                                 : std::numeric_limits<double>::quiet_NaN();
    return out;
  }

 private:
  double T_;
  std::size_t steps_;
  std::uint64_t seed_;
};

namespace detail {

template <class Fn>
void parallel_for_paths(std::size_t paths, unsigned threads, const Fn& fn) {
  unsigned n = threads != 0 ? threads : std::thread::hardware_concurrency();
  n = std::max(1u, std::min<unsigned>(n, static_cast<unsigned>(
                                             std::min<std::size_t>(paths, 256))));
  if (n == 1) {
    for (std::size_t i = 0; i < paths; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) {
    const std::size_t begin = paths * t / n;
    const std::size_t end = paths * (t + 1) / n;
    pool.emplace_back([begin, end, &fn] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
}

}  // namespace detail

/// Raw J_T samples, one per path, in path order.
inline std::vector<double> mc_sample_raw(double T, const McConfig& cfg) {
  cfg.validate();
  const PathSampler sampler(T, cfg.steps, cfg.seed);
  std::vector<double> out(cfg.paths);
  detail::parallel_for_paths(cfg.paths, cfg.threads,
                             [&](std::size_t i) { out[i] = sampler(i); });
  return out;
}

/// Samples of the variable selected by p.convention: J_T / 2 under
/// Convention::paper, J_T under Convention::cameron_martin.
inline std::vector<double> mc_sample_functional(const ProcessParams& p,
                                                const McConfig& cfg) {
  p.validate();
  std::vector<double> s = mc_sample_raw(p.T, cfg);
  const double k = p.convention == Convention::paper ? 2.0 : 1.0;
  for (double& v : s) v /= k;
  return s;
}

/// Fraction of samples strictly above c, with its binomial standard error.
inline McEstimate exceedance(std::span<const double> samples, double c) {
  McEstimate e;
  e.samples = samples.size();
  if (samples.empty()) return e;
  const auto hits = static_cast<double>(
      std::count_if(samples.begin(), samples.end(),
                    [c](double v) { return v > c; }));
  const double n = static_cast<double>(samples.size());
  e.mean = hits / n;
  e.std_error = std::sqrt(e.mean * (1.0 - e.mean) / n);
  return e;
}

inline McEstimate mc_tail_estimate(const TailQuery& q, const ProcessParams& p,
                                   const McConfig& cfg) {
  return exceedance(mc_sample_functional(p, cfg), q.c);
}

struct SampleMoments {
  McEstimate mean;
  McEstimate variance;
};

/// Sample mean and unbiased variance with large-sample standard errors
/// (s / sqrt(n) and sqrt((m4 - s^4) / n)).
inline SampleMoments sample_moments(std::span<const double> samples) {
  SampleMoments m;
  const std::size_t count = samples.size();
  m.mean.samples = m.variance.samples = count;
  if (count < 2) return m;
  const double n = static_cast<double>(count);
  CompensatedSum<double> s1;
  for (double v : samples) s1 += v;
  const double mean = s1.value() / n;
  CompensatedSum<double> s2;
  CompensatedSum<double> s4;
  for (double v : samples) {
    const double d2 = (v - mean) * (v - mean);
    s2 += d2;
    s4 += d2 * d2;
  }
  const double var = s2.value() / (n - 1.0);
  const double m4 = s4.value() / n;
  m.mean.mean = mean;
  m.mean.std_error = std::sqrt(var / n);
  m.variance.mean = var;
  m.variance.std_error = std::sqrt(std::max(0.0, m4 - var * var) / n);
  return m;
}

struct RichardsonCheck {
  McEstimate coarse;  // cfg.steps
  McEstimate fine;    // 2 * cfg.steps, same Wiener paths
  bool stable = false;
};

/// Tail estimate at cfg.steps and 2 * cfg.steps on shared paths; stable when
/// the two differ by less than three combined standard errors.
inline RichardsonCheck mc_richardson_tail(const TailQuery& q,
                                          const ProcessParams& p,
                                          const McConfig& cfg) {
  cfg.validate();
  p.validate();
  const PathSampler sampler(p.T, 2 * cfg.steps, cfg.seed);
  const double k = p.convention == Convention::paper ? 2.0 : 1.0;
  std::vector<double> fine(cfg.paths);
  std::vector<double> coarse(cfg.paths);
  detail::parallel_for_paths(cfg.paths, cfg.threads, [&](std::size_t i) {
    const PathFunctional f = sampler.both_resolutions(i);
    fine[i] = f.fine / k;
    coarse[i] = f.coarse / k;
  });
  RichardsonCheck r;
  r.coarse = exceedance(coarse, q.c);
  r.fine = exceedance(fine, q.c);
  const double combined = std::hypot(r.coarse.std_error, r.fine.std_error);
  r.stable = std::abs(r.coarse.mean - r.fine.mean) <= 3.0 * combined;
  return r;
}

}  // namespace wienerl2
