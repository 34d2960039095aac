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

// Cross-checks between the series, the quadrature oracle and Monte Carlo.
// Each check reports the worst measured quantity next to the threshold it
// was compared with, so a report is meaningful whether it passes or not.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "wienerl2/distribution.hpp"
#include "wienerl2/oracles.hpp"
#include "wienerl2/series.hpp"

namespace wienerl2 {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // worst observed value of the checked quantity
  double threshold = 0.0;  // passing requires measured <= threshold
  std::string detail;
};

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
    g[i] = lo * std::pow(hi / lo, t);
  }
  return g;
}

namespace detail {

inline CheckResult finish(std::string name, double measured, double threshold,
                          std::string detail = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured;
  r.threshold = threshold;
  r.passed = measured <= threshold;  // NaN fails
  r.detail = std::move(detail);
  return r;
}

inline std::string at(const char* label, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return std::string(label) + "=" + buf;
}

inline std::string at(const char* label, std::size_t v) {
  return std::string(label) + "=" + std::to_string(v);
}

}  // namespace detail

/// max |density_g(x, eps) - quadrature_density(x)| over a log grid.
inline CheckResult check_series_vs_quadrature(double lo, double hi,
                                              std::size_t count, double eps,
                                              double tol) {
  double worst = 0.0;
  double where = lo;
  const auto trunc = TruncationControl::tolerance(eps);
  for (double x : log_grid(lo, hi, count)) {
    const double d =
        std::abs(density_g(x, trunc).value - quadrature_density(x));
    if (!(d <= worst)) {
      worst = d;
      where = x;
    }
  }
  return detail::finish("series_vs_quadrature", worst, tol,
                        detail::at("x", where));
}

/// max over (N, x) of |g_{N-1}(x) - g_{ref}(x)| - remainder_bound(N, x).
inline CheckResult check_remainder_bound(std::size_t max_n, double lo,
                                         double hi, std::size_t count,
                                         std::size_t reference_terms,
                                         double slack) {
  double worst = -std::numeric_limits<double>::infinity();
  std::string where;
  for (double x : log_grid(lo, hi, count)) {
    const double ref = partial_sum_g(x, reference_terms);
    for (std::size_t n = 1; n <= max_n; ++n) {
      const double excess =
          std::abs(partial_sum_g(x, n) - ref) - remainder_bound(n, x);
      if (!(excess <= worst)) {
        worst = excess;
        where = detail::at("x", x) + " " + detail::at("N", n);
      }
    }
  }
  return detail::finish("remainder_bound_validity", worst, slack, where);
}

/// max over (N, x) of remainder_bound(N, x) / uniform_remainder_bound(N).
inline CheckResult check_uniform_remainder_bound(std::size_t max_n, double lo,
                                                 double hi, std::size_t count) {
  double worst = 0.0;
  std::string where;
  const auto grid = log_grid(lo, hi, count);
  for (std::size_t n = 1; n <= max_n; ++n) {
    // The sup over x sits at argmax_h(N); include it alongside the grid.
    std::vector<double> xs = grid;
    xs.push_back(argmax_h(n));
    for (double x : xs) {
      const double ratio = remainder_bound(n, x) / uniform_remainder_bound(n);
      if (!(ratio <= worst)) {
        worst = ratio;
        where = detail::at("x", x) + " " + detail::at("N", n);
      }
    }
  }
  return detail::finish("uniform_remainder_bound", worst, 1.0, where);
}

/// max_{1<=N<=max_n} c_N sqrt(N) against e^{-1/2}.
inline CheckResult check_coefficient_estimate(std::size_t max_n) {
  double worst = 0.0;
  std::size_t where = 1;
  CentralBinomialSequence seq;
  seq.advance();
  for (std::size_t n = 1; n <= max_n; ++n, seq.advance()) {
    const double v = seq.c() * std::sqrt(static_cast<double>(n));
    if (v > worst) {
      worst = v;
      where = n;
    }
  }
  auto r = detail::finish("coefficient_estimate", worst, std::exp(-0.5),
                          detail::at("N", where));
  r.passed = worst < std::exp(-0.5);
  return r;
}

/// |cdf(c, T, N) - 1| at c / T^2 = scaled_c.
inline CheckResult check_normalization(std::size_t n, double scaled_c,
                                       double tol) {
  const BoundedValue r =
      cdf(TailQuery(scaled_c), ProcessParams{1.0, Convention::paper}, n);
  return detail::finish("normalization", std::abs(r.value - 1.0), tol,
                        detail::at("cdf", r.value) + " " +
                            detail::at("error_bound", r.error_bound));
}

/// |sum_{l<terms} (-1)^l c_l - 1/sqrt(2)|.
inline CheckResult check_binomial_partial_sum(std::size_t terms, double tol) {
  CompensatedSum<double> s;
  CentralBinomialSequence seq;
  for (std::size_t l = 0; l < terms; ++l, seq.advance()) {
    if (l % 2 == 0) {
      s += seq.c();
    } else {
      s -= seq.c();
    }
  }
  return detail::finish("binomial_partial_sum",
                        std::abs(s.value() - 1.0 / std::numbers::sqrt2), tol,
                        detail::at("terms", terms));
}

struct TailGrid {
  std::vector<double> c = log_grid(0.01, 100.0, 10);
  std::vector<double> T = log_grid(0.5, 2.0, 10);
  std::vector<std::size_t> n = {1, 2, 4, 8};
};

/// max of |P_N - P_{N+lookahead}| - tail_error_bound(c, T, N).
inline CheckResult check_tail_convergence(const TailGrid& grid,
                                          std::size_t lookahead, double slack) {
  double worst = -std::numeric_limits<double>::infinity();
  std::string where;
  for (double T : grid.T) {
    const ProcessParams p{T, Convention::paper};
    for (double c : grid.c) {
      const TailQuery q(c);
      for (std::size_t n : grid.n) {
        const double a =
            tail_prob(q, p, TruncationControl::fixed_terms(n)).probability;
        const double b =
            tail_prob(q, p, TruncationControl::fixed_terms(n + lookahead))
                .probability;
        const double excess = std::abs(a - b) - tail_error_bound(q, p, n);
        if (!(excess <= worst)) {
          worst = excess;
          where = detail::at("c", c) + " " + detail::at("T", T) + " " +
                  detail::at("N", n);
        }
      }
    }
  }
  return detail::finish("tail_bound_convergence", worst, slack, where);
}

/// max of tail_error_bound / min(uniform, sharp). `corrected` selects the
/// valid simplifications instead of the quoted ones.
inline CheckResult check_tail_bound_chain(const TailGrid& grid,
                                          bool corrected) {
  double worst = 0.0;
  std::string where;
  std::size_t violations = 0;
  for (double T : grid.T) {
    const ProcessParams p{T, Convention::paper};
    for (double c : grid.c) {
      const TailQuery q(c);
      for (std::size_t n : grid.n) {
        const double exact = tail_error_bound(q, p, n);
        const double simple =
            corrected ? std::min(tail_error_bound_uniform_corrected(n),
                                 tail_error_bound_sharp_corrected(q, p, n))
                      : std::min(tail_error_bound_uniform(n),
                                 tail_error_bound_sharp(q, p, n));
        const double ratio = exact / simple;
        if (ratio > 1.0) ++violations;
        if (!(ratio <= worst)) {
          worst = ratio;
          where = detail::at("c", c) + " " + detail::at("T", T) + " " +
                  detail::at("N", n);
        }
      }
    }
  }
  return detail::finish(
      corrected ? "tail_bound_chain_corrected" : "tail_bound_chain", worst,
      1.0, where + " violations=" + std::to_string(violations));
}

/// max |integral e^{-lambda x} g(x) dx - cosh(sqrt(lambda))^{-1/2}|.
inline CheckResult check_laplace_round_trip(std::span<const double> lambdas,
                                            double tol) {
  double worst = 0.0;
  double where = 0.0;
  for (double lam : lambdas) {
    const double d = std::abs(laplace_transform_of_density(lam) -
                              generating_function(lam, 1.0));
    if (!(d <= worst)) {
      worst = d;
      where = lam;
    }
  }
  return detail::finish("laplace_round_trip", worst, tol,
                        detail::at("lambda", where));
}

/// max |cdf(c, T, N) - integral_0^{c/T^2} g_{N-1}| over the grid.
inline CheckResult check_cdf_closed_form(std::span<const std::size_t> ns,
                                         std::span<const double> cs,
                                         std::span<const double> Ts,
                                         double tol) {
  double worst = 0.0;
  std::string where;
  for (double T : Ts) {
    const ProcessParams p{T, Convention::paper};
    for (double c : cs) {
      for (std::size_t n : ns) {
        const double closed = cdf(TailQuery(c), p, n).value;
        const double quad = integrate_partial_sum(c / (T * T), n);
        const double d = std::abs(closed - quad);
        if (!(d <= worst)) {
          worst = d;
          where = detail::at("c", c) + " " + detail::at("T", T) + " " +
                  detail::at("N", n);
        }
      }
    }
  }
  return detail::finish("cdf_closed_form_vs_quadrature", worst, tol, where);
}

/// |mean - T^2/2| and |var - T^4/3| in units of their standard errors.
inline std::vector<CheckResult> check_mc_moments(
    std::span<const double> raw_samples, double T, double n_sigma) {
  const SampleMoments m = sample_moments(raw_samples);
  const double mean_exact = T * T / 2.0;
  const double var_exact = T * T * T * T / 3.0;
  const double zm =
      std::abs(m.mean.mean - mean_exact) / std::max(m.mean.std_error, 1e-300);
  const double zv = std::abs(m.variance.mean - var_exact) /
                    std::max(m.variance.std_error, 1e-300);
  return {detail::finish("mc_mean", zm, n_sigma,
                         detail::at("mean", m.mean.mean) + " " +
                             detail::at("se", m.mean.std_error)),
          detail::finish("mc_variance", zv, n_sigma,
                         detail::at("variance", m.variance.mean) + " " +
                             detail::at("se", m.variance.std_error))};
}

/// Largest |MC tail - series tail| / std_error over `thresholds`, for
/// samples of the variable selected by p.convention.
inline CheckResult check_mc_tail(std::span<const double> samples,
                                 const ProcessParams& p,
                                 std::span<const double> thresholds,
                                 double eps, double n_sigma) {
  double worst = 0.0;
  std::string where;
  for (double c : thresholds) {
    const McEstimate mc = exceedance(samples, c);
    const TailResult s =
        tail_prob(TailQuery(c), p, TruncationControl::tolerance(eps));
    // A zero-variance estimate still carries the series uncertainty.
    const double se = std::max(mc.std_error, 1.0 / mc.samples);
    const double z = std::abs(mc.mean - s.probability) / se;
    if (!(z <= worst)) {
      worst = z;
      where = detail::at("c", c) + " " + detail::at("mc", mc.mean) + " " +
              detail::at("series", s.probability) + " " +
              detail::at("se", mc.std_error);
    }
  }
  return detail::finish("mc_tail_agreement", worst, n_sigma, where);
}

/// Fits raw J_T samples against the series tail under X = J and X = J / 2.
/// Passes when J / 2 is consistent within n_sigma everywhere and fits
/// strictly better than X = J. `measured` is the worst z-score of J / 2.
inline CheckResult check_convention_resolution(
    std::span<const double> raw_samples, double T,
    std::span<const double> thresholds, double n_sigma) {
  const ProcessParams p{T, Convention::paper};
  double chi_half = 0.0;
  double chi_identity = 0.0;
  double worst_half = 0.0;
  for (double c : thresholds) {
    const double series =
        tail_prob(TailQuery(c), p, TruncationControl::tolerance(1e-12))
            .probability;
    const McEstimate as_half = exceedance(raw_samples, 2.0 * c);
    const McEstimate as_identity = exceedance(raw_samples, c);
    const double n = static_cast<double>(raw_samples.size());
    // Binomial error under the model being tested.
    const double se = std::sqrt(std::max(series * (1.0 - series), 1e-300) / n);
    const double z_half = (as_half.mean - series) / se;
    const double z_identity = (as_identity.mean - series) / se;
    chi_half += z_half * z_half;
    chi_identity += z_identity * z_identity;
    worst_half = std::max(worst_half, std::abs(z_half));
  }
  auto r = detail::finish("convention_resolution", worst_half, n_sigma,
                          detail::at("chi2_half", chi_half) + " " +
                              detail::at("chi2_identity", chi_identity));
  r.passed = r.passed && chi_half < chi_identity;
  return r;
}

inline CheckResult check_richardson(const TailQuery& q, const ProcessParams& p,
                                    const McConfig& cfg) {
  const RichardsonCheck r = mc_richardson_tail(q, p, cfg);
  const double combined = std::hypot(r.coarse.std_error, r.fine.std_error);
  const double z = combined > 0.0
                       ? std::abs(r.coarse.mean - r.fine.mean) / combined
                       : (r.coarse.mean == r.fine.mean ? 0.0 : 1e300);
  return detail::finish("mc_richardson", z, 3.0,
                        detail::at("coarse", r.coarse.mean) + " " +
                            detail::at("fine", r.fine.mean));
}

}  // namespace wienerl2
