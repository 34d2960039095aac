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

// Density, CDF and tail probability of J_T = integral_0^T w(t)^2 dt.
//
// Under Convention::paper the implemented variable X has Laplace transform
// E exp(-lambda X) = cosh(sqrt(lambda) T)^{-1/2}. For a standard Wiener
// process (E w(t)^2 = t) that variable is X = J_T / 2; Convention::
// cameron_martin reports the law of J_T itself, whose transform is
// cosh(sqrt(2 lambda) T)^{-1/2}.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>

#include "wienerl2/compensated_sum.hpp"
#include "wienerl2/erfc.hpp"
#include "wienerl2/errors.hpp"
#include "wienerl2/series.hpp"

namespace wienerl2 {

enum class Convention { paper, cameron_martin };

inline std::string_view to_string(Convention c) {
  return c == Convention::paper ? "paper" : "cameron-martin";
}

/// Time horizon and variable convention.
struct ProcessParams {
  double T = 1.0;
  Convention convention = Convention::paper;

  void validate() const {
    detail::require_domain(std::isfinite(T) && T > 0.0,
                           "time horizon T must be a finite positive number");
  }
};

/// Threshold c in Pr{J > c}.
struct TailQuery {
  double c;

  explicit TailQuery(double threshold) : c(threshold) {
    detail::require_domain(c > 0.0 && !std::isnan(c),
                           "tail threshold c must be positive");
  }
};

struct TailResult {
  double probability = 0.0;
  double error_bound = 0.0;
  std::size_t terms_used = 1;
};

namespace detail {

// Factor k with X = J / k under the given convention.
inline double convention_divisor(Convention c) {
  return c == Convention::cameron_martin ? 2.0 : 1.0;
}

// Threshold mapped to the unit-horizon series variable, c / (k T^2).
inline double scaled_threshold(double c, const ProcessParams& p) {
  p.validate();
  return c / convention_divisor(p.convention) / (p.T * p.T);
}

// Relative error of one cdf term: erfc_std is good to 1e-14, the coefficient
// recurrence and product add a few ulp.
inline constexpr double kCdfTermRounding =
    1e-14 + 8.0 * std::numeric_limits<double>::epsilon();

inline double tail_bound_scaled(double c_n, std::size_t n, double x) {
  return std::numbers::sqrt2 * c_n *
         erfc_std(shifted_index(n) / std::sqrt(x));
}

}  // namespace detail

/// Density of the variable selected by p.convention, with truncation bound.
/// In tolerance mode eps applies to the returned (rescaled) error bound.
inline BoundedValue density_f(double x, const ProcessParams& p,
                              const TruncationControl& trunc) {
  p.validate();
  detail::require_domain(x > 0.0, "density_f: x must be positive");
  const double scale =
      detail::convention_divisor(p.convention) * p.T * p.T;
  BoundedValue g;
  if (trunc.is_fixed()) {
    g = density_g(x / scale, trunc);
  } else {
    const auto& tol =
        std::get<TruncationControl::Tolerance>(trunc.mode());
    g = density_g(x / scale,
                  TruncationControl::tolerance(tol.eps * scale, tol.max_terms));
  }
  return {g.value / scale, g.error_bound / scale, g.terms_used};
}

/// Exact integral of the truncation bound over (0, c / T^2]:
/// sqrt(2) c_N erfc(T (N + 1/4) / sqrt(c)). Bounds |R(c) - R_N(c)|.
inline double tail_error_bound(const TailQuery& q, const ProcessParams& p,
                               std::size_t n) {
  detail::require_domain(n >= 1, "tail_error_bound: N must be >= 1");
  return detail::tail_bound_scaled(coeff_c(n), n,
                                   detail::scaled_threshold(q.c, p));
}

/// sqrt(2 / (e N^3)), the commonly quoted (c, T)-free simplification.
///
/// It is derived by bounding a_N = c_N (N + 1/4) with the estimate that only
/// holds for c_N, so for N >= 2 it does not dominate tail_error_bound when
/// c / T^2 is large. tail_error_bound_uniform_corrected is the valid form.
inline double tail_error_bound_uniform(std::size_t n) {
  detail::require_domain(n >= 1, "tail_error_bound_uniform: N must be >= 1");
  const double nd = static_cast<double>(n);
  return std::sqrt(2.0 / (std::numbers::e * nd * nd * nd));
}

/// sqrt(2 / (e N)) >= sqrt(2) c_N >= tail_error_bound for every c, T.
inline double tail_error_bound_uniform_corrected(std::size_t n) {
  detail::require_domain(n >= 1,
                         "tail_error_bound_uniform_corrected: N must be >= 1");
  return std::sqrt(2.0 / (std::numbers::e * static_cast<double>(n)));
}

/// sqrt(2c / (pi e)) (T N^{5/2})^{-1} exp(-(T N)^2 / c), the quoted
/// exponential simplification. Same caveat as tail_error_bound_uniform: the
/// N^{-5/2} power is one half-power too optimistic and the form stops
/// dominating for N >= 3 at moderate c / T^2.
inline double tail_error_bound_sharp(const TailQuery& q, const ProcessParams& p,
                                     std::size_t n) {
  detail::require_domain(n >= 1, "tail_error_bound_sharp: N must be >= 1");
  const double x = detail::scaled_threshold(q.c, p);
  const double nd = static_cast<double>(n);
  return std::sqrt(2.0 * x / (std::numbers::pi * std::numbers::e)) *
         std::pow(nd, -2.5) * std::exp(-nd * nd / x);
}

/// sqrt(2c / (pi e)) (T N^{3/2})^{-1} exp(-(T N)^2 / c). Follows from
/// erfc(z) < exp(-z^2) / (sqrt(pi) z) and c_N < e^{-1/2} / sqrt(N).
inline double tail_error_bound_sharp_corrected(const TailQuery& q,
                                               const ProcessParams& p,
                                               std::size_t n) {
  detail::require_domain(n >= 1,
                         "tail_error_bound_sharp_corrected: N must be >= 1");
  const double x = detail::scaled_threshold(q.c, p);
  const double nd = static_cast<double>(n);
  return std::sqrt(2.0 * x / (std::numbers::pi * std::numbers::e)) *
         std::pow(nd, -1.5) * std::exp(-nd * nd / x);
}

/// R_N(c) = integral_0^{c/T^2} g_{N-1}(x) dx in closed form,
///   sqrt(2) sum_{l<N} (-1)^l c_l erfc((l + 1/4) T / sqrt(c)).
/// Not clamped; error_bound is tail_error_bound(c, p, N).
inline BoundedValue cdf(const TailQuery& q, const ProcessParams& p,
                        std::size_t n) {
  detail::require_domain(n >= 1, "cdf: N must be >= 1");
  const double x = detail::scaled_threshold(q.c, p);
  const double root_x = std::sqrt(x);
  CompensatedSum<double> sum;
  double magnitude = 0.0;
  CentralBinomialSequence seq;
  for (std::size_t l = 0; l < n; ++l, seq.advance()) {
    const double e = erfc_std(detail::shifted_index(l) / root_x);
    if (e == 0.0) break;
    const double term = seq.c() * e;
    magnitude += term;
    if (l % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  BoundedValue out;
  out.value = std::numbers::sqrt2 * sum.value();
  out.terms_used = n;
  out.error_bound = detail::tail_bound_scaled(coeff_c(n), n, x) +
                    std::numbers::sqrt2 * magnitude * detail::kCdfTermRounding;
  return out;
}

/// Smallest N with tail_error_bound(c, p, N) <= eps. The bound is strictly
/// decreasing in N, so a forward scan stops at the first hit.
inline std::size_t choose_tail_truncation(const TailQuery& q,
                                          const ProcessParams& p, double eps,
                                          std::size_t max_terms =
                                              kDefaultMaxTerms) {
  detail::require_domain(std::isfinite(eps) && eps > 0.0,
                         "choose_tail_truncation: eps must be positive");
  const double x = detail::scaled_threshold(q.c, p);
  CentralBinomialSequence seq;
  seq.advance();
  for (std::size_t n = 1; n <= max_terms; ++n, seq.advance()) {
    if (detail::tail_bound_scaled(seq.c(), n, x) <= eps) return n;
  }
  throw IterationLimitError("tail bound above " + detail::to_text(eps) +
                            " after " + std::to_string(max_terms) + " terms");
}

namespace detail {

// Runs eval(n) at the planned N. If rounding pushes the total bound past eps,
// retries with the truncation target lowered by the rounding share.
template <class Eval>
BoundedValue evaluate_with_tolerance(const TailQuery& q, const ProcessParams& p,
                                     const TruncationControl& trunc,
                                     Eval eval) {
  if (const auto* f =
          std::get_if<TruncationControl::FixedTerms>(&trunc.mode())) {
    return eval(f->n);
  }
  const auto& tol = std::get<TruncationControl::Tolerance>(trunc.mode());
  BoundedValue out = eval(choose_tail_truncation(q, p, tol.eps, tol.max_terms));
  if (out.error_bound <= tol.eps) return out;
  const double rounding =
      out.error_bound - tail_error_bound(q, p, out.terms_used);
  if (rounding < tol.eps) {
    out = eval(choose_tail_truncation(q, p, tol.eps - rounding, tol.max_terms));
    if (out.error_bound <= tol.eps) return out;
  }
  throw AccuracyError("eps " + to_text(tol.eps) +
                      " is below the rounding floor at c = " + to_text(q.c));
}

}  // namespace detail

/// R_N(c) clamped to [0, 1], with N fixed or planned from eps.
inline BoundedValue cdf_prob(const TailQuery& q, const ProcessParams& p,
                             const TruncationControl& trunc) {
  return detail::evaluate_with_tolerance(q, p, trunc, [&](std::size_t n) {
    BoundedValue r = cdf(q, p, n);
    r.value = std::clamp(r.value, 0.0, 1.0);
    return r;
  });
}

/// P_N(c) = 1 - R_N(c), clamped to [0, 1].
inline TailResult tail_prob(const TailQuery& q, const ProcessParams& p,
                            const TruncationControl& trunc) {
  const BoundedValue t =
      detail::evaluate_with_tolerance(q, p, trunc, [&](std::size_t n) {
        const BoundedValue r = cdf(q, p, n);
        return BoundedValue{std::clamp(1.0 - r.value, 0.0, 1.0),
                            r.error_bound +
                                std::numeric_limits<double>::epsilon(),
                            n};
      });
  return {t.value, t.error_bound, t.terms_used};
}

}  // namespace wienerl2
