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

#pragma once

#include <cmath>
#include <limits>
#include <numbers>

namespace wienerl2 {
namespace detail {

// erf(x) by its Maclaurin series. Used only for |x| < 1, where erfc stays in
// (0.157, 1.843) and 1 - erf loses no relative accuracy.
inline double erf_maclaurin(double x) {
  const double x2 = x * x;
  double term = x;
  double sum = x;
  for (int k = 1; k < 60; ++k) {
    term *= -x2 / k;
    const double add = term / (2 * k + 1);
    sum += add;
    if (std::abs(add) <= 1e-17 * std::abs(sum)) break;
  }
  return 2.0 / std::sqrt(std::numbers::pi) * sum;
}

// exp(-x^2) with the rounding error of x*x folded back in. Without this the
// relative error near x = 26 is ~x^2 ulp.
inline double exp_minus_square(double x) {
  const double p = x * x;
  const double err = std::fma(x, x, -p);
  return std::exp(-p) * (1.0 - err);
}

// Laplace continued fraction
//   erfc(x) = exp(-x^2)/sqrt(pi) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
// evaluated with the modified Lentz algorithm. Converges for x > 0; ~190
// iterations at x = 1, under 60 beyond x = 2.
inline double erfc_continued_fraction(double x) {
  constexpr double tiny = 1e-300;
  double f = x;
  double c = f;
  double d = 0.0;
  for (int n = 1; n < 5000; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    d = 1.0 / d;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 3e-16) break;
  }
  return exp_minus_square(x) / (std::sqrt(std::numbers::pi) * f);
}

}  // namespace detail

/// Complementary error function (2/sqrt(pi)) * integral_x^inf exp(-t^2) dt.
///
/// Relative error below 1e-14 on [-6, 26]; returns 0 once the result
/// underflows (x > ~27.3) and 2 for large negative x.
inline double erfc_std(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) {
    if (x > -1.0) return 1.0 - detail::erf_maclaurin(x);
    return 2.0 - erfc_std(-x);
  }
  if (x < 1.0) return 1.0 - detail::erf_maclaurin(x);
  if (x > 27.3) return 0.0;
  return detail::erfc_continued_fraction(x);
}

}  // namespace wienerl2
