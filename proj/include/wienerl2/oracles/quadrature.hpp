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

// Series-independent routes to the law of the functional:
//
//  * the Laplace transform Q_T(lambda) = cosh(sqrt(lambda) T)^{-1/2};
//  * g(x) from the real-line integral obtained by deforming the Bromwich
//    contour onto the cut and shifting by i/(4x),
//
//      g(x) = sqrt(2)/pi exp(-1/(16x))
//             * integral_R (i s + 1/(4x)) exp(-x s^2)
//                          (1 + exp(-1/(2x)) exp(-2 i s))^{-1/2} ds;
//
//  * adaptive quadrature of series partial sums, used to check the closed
//    forms built on top of them.

#pragma once

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>

#include "wienerl2/errors.hpp"
#include "wienerl2/series.hpp"

namespace wienerl2 {

/// Q_T(lambda) = E exp(-lambda X) for Re(lambda) >= 0.
///
/// Evaluated as sqrt(2) e^{-z/2} (1 + e^{-2z})^{-1/2}, z = sqrt(lambda) T,
/// which is the analytic continuation from the positive axis and never
/// overflows. |e^{-2z}| < 1 keeps the inner root on its principal branch.
inline std::complex<double> generating_function(std::complex<double> lambda,
                                                double T) {
  detail::require_domain(std::isfinite(T) && T > 0.0,
                         "generating_function: T must be positive");
  detail::require_domain(lambda.real() >= 0.0,
                         "generating_function: Re(lambda) must be >= 0");
  const std::complex<double> z = std::sqrt(lambda) * T;
  const std::complex<double> q = std::exp(-2.0 * z);
  return std::numbers::sqrt2 * std::exp(-0.5 * z) / std::sqrt(1.0 + q);
}

inline double generating_function(double lambda, double T) {
  detail::require_domain(lambda >= 0.0,
                         "generating_function: lambda on the branch cut");
  return generating_function(std::complex<double>(lambda, 0.0), T).real();
}

struct QuadratureConfig {
  /// Half-width of the integration window; 0 selects the width at which
  /// exp(-2 x s^2) drops below 1e-300.
  double s_max = 0.0;
  /// Initial node count (rounded up to whole 16-point panels).
  std::size_t nodes = 256;
  /// Doubling stops with an AccuracyError past this many nodes.
  std::size_t max_nodes = std::size_t{1} << 22;
  /// Two successive doublings must agree to this absolute tolerance.
  double tolerance = 1e-11;
  /// Largest imaginary residual accepted in the result.
  double max_imaginary = 1e-10;

  void validate() const {
    detail::require_domain(s_max >= 0.0 && std::isfinite(s_max),
                           "QuadratureConfig: s_max must be >= 0");
    detail::require_domain(nodes >= 16, "QuadratureConfig: nodes must be >= 16");
    detail::require_domain(tolerance > 0.0,
                           "QuadratureConfig: tolerance must be positive");
  }
};

namespace detail {

inline double default_s_max(double x) {
  // exp(-2 x s^2) = 1e-300  <=>  s^2 = 300 ln(10) / (2x)
  return std::sqrt(300.0 * std::numbers::ln10 / (2.0 * x));
}

// Composite 16-point Gauss-Legendre over [-s_max, s_max].
template <class F>
std::complex<double> composite_gauss(const F& f, double s_max,
                                     std::size_t panels) {
  using rule = boost::math::quadrature::gauss<double, 16>;
  const auto& nodes = rule::abscissa();
  const auto& weights = rule::weights();
  const double width = 2.0 * s_max / static_cast<double>(panels);
  const double half = 0.5 * width;
  std::complex<double> total{0.0, 0.0};
  for (std::size_t p = 0; p < panels; ++p) {
    const double mid = -s_max + (static_cast<double>(p) + 0.5) * width;
    std::complex<double> panel{0.0, 0.0};
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      panel += weights[k] * (f(mid + half * nodes[k]) + f(mid - half * nodes[k]));
    }
    total += half * panel;
  }
  return total;
}

}  // namespace detail

/// g(x) by direct quadrature of the shifted real-line integral, with panel
/// doubling until two successive results agree.
inline double quadrature_density(double x, const QuadratureConfig& cfg = {}) {
  detail::require_domain(x > 0.0, "quadrature_density: x must be positive");
  cfg.validate();
  const double s_max = cfg.s_max > 0.0 ? cfg.s_max : detail::default_s_max(x);
  const double r = std::exp(-0.5 / x);
  const double shift = 0.25 / x;
  const std::complex<double> i{0.0, 1.0};
  auto integrand = [&](double s) {
    const std::complex<double> phase = std::polar(r, -2.0 * s);
    return (i * s + shift) * std::exp(-x * s * s) / std::sqrt(1.0 + phase);
  };
  const double prefactor =
      std::numbers::sqrt2 / std::numbers::pi * std::exp(-1.0 / (16.0 * x));

  std::size_t panels = (cfg.nodes + 15) / 16;
  std::complex<double> prev =
      prefactor * detail::composite_gauss(integrand, s_max, panels);
  while (true) {
    panels *= 2;
    if (panels * 16 > cfg.max_nodes) {
      throw AccuracyError("quadrature_density: no convergence at x = " +
                          detail::to_text(x));
    }
    const std::complex<double> next =
        prefactor * detail::composite_gauss(integrand, s_max, panels);
    const bool converged = std::abs(next - prev) < cfg.tolerance;
    prev = next;
    if (converged) break;
  }
  if (std::abs(prev.imag()) > cfg.max_imaginary) {
    throw AccuracyError("quadrature_density: imaginary residual " +
                        std::to_string(prev.imag()));
  }
  return prev.real();
}

/// integral_0^inf exp(-lambda x) g(x) dx with g from the series at
/// `series_eps`. Should reproduce generating_function(lambda, 1).
///
/// The mass of g beyond x = 60 is below 1e-30, while the series there
/// returns rounding noise of size ~eps; integrating that noise over the
/// unbounded range costs more than the whole error budget, so the range is
/// cut at 60.
inline constexpr double kLaplaceUpper = 60.0;

inline double laplace_transform_of_density(double lambda,
                                           double series_eps = 1e-13) {
  detail::require_domain(lambda >= 0.0,
                         "laplace_transform_of_density: lambda must be >= 0");
  const auto trunc = TruncationControl::tolerance(series_eps);
  auto f = [&](double x) {
    if (!(x > 0.0)) return 0.0;
    return std::exp(-lambda * x) * density_g(x, trunc).value;
  };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, 0.0, kLaplaceUpper, 1e-13);
}

/// integral_0^upper g_{N-1}(x) dx by tanh-sinh quadrature.
inline double integrate_partial_sum(double upper, std::size_t n) {
  detail::require_domain(upper > 0.0,
                         "integrate_partial_sum: upper limit must be positive");
  detail::require_domain(n >= 1, "integrate_partial_sum: N must be >= 1");
  auto f = [n](double x) { return x > 0.0 ? partial_sum_g(x, n) : 0.0; };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, 0.0, upper, 1e-14);
}

/// integral_0^upper of the truncation bound sqrt(2/pi) a_N h_N(x).
inline double integrate_remainder_bound(double upper, std::size_t n) {
  detail::require_domain(upper > 0.0,
                         "integrate_remainder_bound: upper limit must be positive");
  auto f = [n](double x) { return x > 0.0 ? remainder_bound(n, x) : 0.0; };
  boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, 0.0, upper, 1e-14);
}

}  // namespace wienerl2
