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

// Alternating series for the scaled density g(x) of the squared L2 norm of a
// Wiener path on [0, 1]:
//
//   g(x) = sqrt(2 / (pi x^3)) * sum_l (-1)^l c_l (l + 1/4) exp(-(l + 1/4)^2 / x)
//
// with c_l = (2l)! / (4^l (l!)^2). Truncating after N terms leaves an error no
// larger than the first omitted term, which is what remainder_bound returns.

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <variant>

#include "wienerl2/compensated_sum.hpp"
#include "wienerl2/errors.hpp"

namespace wienerl2 {

/// Index l of a series term.
using TermIndex = std::size_t;

inline constexpr std::size_t kDefaultMaxTerms = 1'000'000;

/// Either a fixed number of terms or a target absolute error.
class TruncationControl {
 public:
  struct FixedTerms {
    std::size_t n;
  };
  struct Tolerance {
    double eps;
    std::size_t max_terms;
  };

  static TruncationControl fixed_terms(std::size_t n) {
    detail::require_domain(n >= 1, "fixed term count must be >= 1");
    return TruncationControl(FixedTerms{n});
  }

  static TruncationControl tolerance(double eps,
                                     std::size_t max_terms = kDefaultMaxTerms) {
    detail::require_domain(std::isfinite(eps) && eps > 0.0,
                           "tolerance must be a finite positive number");
    detail::require_domain(max_terms >= 1, "term budget must be >= 1");
    return TruncationControl(Tolerance{eps, max_terms});
  }

  [[nodiscard]] bool is_fixed() const {
    return std::holds_alternative<FixedTerms>(mode_);
  }
  [[nodiscard]] const std::variant<FixedTerms, Tolerance>& mode() const {
    return mode_;
  }

 private:
  explicit TruncationControl(std::variant<FixedTerms, Tolerance> m)
      : mode_(m) {}
  std::variant<FixedTerms, Tolerance> mode_;
};

/// A truncated-series value together with a rigorous bound on the truncation
/// error and the number of terms that produced it.
struct BoundedValue {
  double value = 0.0;
  double error_bound = 0.0;
  std::size_t terms_used = 1;
};

namespace detail {

// exp(-t) is below the smallest subnormal double for t beyond this.
inline constexpr double kExpUnderflow = 745.2;

inline double shifted_index(TermIndex l) {
  return static_cast<double>(l) + 0.25;
}

}  // namespace detail

/// c_l = (2l)! / (4^l (l!)^2), by the recurrence c_{l+1} = c_l (2l+1)/(2l+2).
inline double coeff_c(TermIndex l) {
  double c = 1.0;
  for (TermIndex k = 0; k < l; ++k) {
    c *= static_cast<double>(2 * k + 1) / static_cast<double>(2 * k + 2);
  }
  return c;
}

/// a_l = c_l (l + 1/4).
inline double coeff_a(TermIndex l) {
  return coeff_c(l) * detail::shifted_index(l);
}

/// Streams c_0, c_1, ... without recomputing the product each time.
class CentralBinomialSequence {
 public:
  [[nodiscard]] TermIndex index() const { return l_; }
  [[nodiscard]] double c() const { return c_; }
  [[nodiscard]] double a() const { return c_ * detail::shifted_index(l_); }

  void advance() {
    c_ *= static_cast<double>(2 * l_ + 1) / static_cast<double>(2 * l_ + 2);
    ++l_;
  }

 private:
  TermIndex l_ = 0;
  double c_ = 1.0;
};

/// h_l(x) = x^{-3/2} exp(-(l + 1/4)^2 / x). Flushes to 0 once the exponential
/// underflows.
inline double term_h(TermIndex l, double x) {
  detail::require_domain(x > 0.0, "term_h: x must be positive");
  const double b = detail::shifted_index(l);
  const double exponent = b * b / x;
  if (!(exponent < detail::kExpUnderflow)) return 0.0;
  return std::exp(-exponent) / (x * std::sqrt(x));
}

/// Location of the unique maximum of h_N on (0, inf).
inline double argmax_h(TermIndex n) {
  const double b = detail::shifted_index(n);
  return 2.0 / 3.0 * b * b;
}

namespace detail {

inline double remainder_bound_from(double a_n, TermIndex n, double x) {
  return std::sqrt(2.0 / std::numbers::pi) * a_n * term_h(n, x);
}

}  // namespace detail

/// Upper bound on |g(x) - g_{N-1}(x)|: sqrt(2/pi) a_N h_N(x), the magnitude of
/// the first omitted term.
inline double remainder_bound(std::size_t n, double x) {
  detail::require_domain(n >= 1, "remainder_bound: N must be >= 1");
  detail::require_domain(x > 0.0, "remainder_bound: x must be positive");
  return detail::remainder_bound_from(coeff_a(n), n, x);
}

/// x-independent bound 3 / (2 e^2) N^{-5/2} on the N-term truncation error.
inline double uniform_remainder_bound(std::size_t n) {
  detail::require_domain(n >= 1, "uniform_remainder_bound: N must be >= 1");
  constexpr double e2 = std::numbers::e * std::numbers::e;
  return 1.5 / e2 * std::pow(static_cast<double>(n), -2.5);
}

/// Smallest N >= 1 with remainder_bound(N, x) <= eps, by incremental scan.
inline std::size_t choose_truncation(double x, double eps,
                                     std::size_t max_terms = kDefaultMaxTerms) {
  detail::require_domain(x > 0.0, "choose_truncation: x must be positive");
  detail::require_domain(std::isfinite(eps) && eps > 0.0,
                         "choose_truncation: eps must be positive");
  CentralBinomialSequence seq;
  seq.advance();
  for (std::size_t n = 1; n <= max_terms; ++n, seq.advance()) {
    if (detail::remainder_bound_from(seq.a(), n, x) <= eps) return n;
  }
  throw IterationLimitError("choose_truncation: remainder bound above " +
                            detail::to_text(eps) + " after " +
                            std::to_string(max_terms) + " terms");
}

/// g_{N-1}(x): the first N terms of the series, summed with compensation and
/// without any clamping.
namespace detail {

struct PartialSum {
  double value;
  // Sum of |terms| with the same prefactor; scales the rounding allowance.
  double magnitude;
};

inline PartialSum partial_sum_g_detail(double x, std::size_t n) {
  CompensatedSum<double> sum;
  double magnitude = 0.0;
  CentralBinomialSequence seq;
  for (std::size_t l = 0; l < n; ++l, seq.advance()) {
    const double b = shifted_index(l);
    const double exponent = b * b / x;
    // Exponents grow with l, so every later term underflows as well.
    if (!(exponent < kExpUnderflow)) break;
    const double term = seq.a() * std::exp(-exponent);
    magnitude += term;
    if (l % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  // Every term underflowed: skip the prefactor, which may be inf here.
  if (magnitude == 0.0) return {0.0, 0.0};
  const double prefactor = std::sqrt(2.0 / std::numbers::pi) / (x * std::sqrt(x));
  return {prefactor * sum.value(), prefactor * magnitude};
}

// exp, the coefficient recurrence and the final scaling each cost a few ulp
// per term; the compensated sum adds nothing beyond that.
inline constexpr double kDensityRoundingUlps = 8.0;

}  // namespace detail

inline double partial_sum_g(double x, std::size_t n) {
  detail::require_domain(x > 0.0, "partial_sum_g: x must be positive");
  return detail::partial_sum_g_detail(x, n).value;
}

/// Scaled density g(x). The error bound is the truncation bound plus a
/// floating-point rounding allowance.
///
/// A negative partial sum whose magnitude is within the error bound is
/// roundoff on a value that is really ~0 and is clamped to 0. Anything more
/// negative is returned untouched.
inline BoundedValue density_g(double x, const TruncationControl& trunc) {
  detail::require_domain(x > 0.0, "density_g: x must be positive");
  auto evaluate = [x](std::size_t n) {
    const detail::PartialSum ps = detail::partial_sum_g_detail(x, n);
    BoundedValue out;
    out.terms_used = n;
    out.error_bound =
        remainder_bound(n, x) + detail::kDensityRoundingUlps *
                                    std::numeric_limits<double>::epsilon() *
                                    ps.magnitude;
    out.value = ps.value;
    if (out.value < 0.0 && -out.value <= out.error_bound) out.value = 0.0;
    return out;
  };
  if (const auto* f = std::get_if<TruncationControl::FixedTerms>(&trunc.mode())) {
    return evaluate(f->n);
  }
  const auto& tol = std::get<TruncationControl::Tolerance>(trunc.mode());
  BoundedValue out = evaluate(choose_truncation(x, tol.eps, tol.max_terms));
  if (out.error_bound <= tol.eps) return out;
  // Truncation met eps but rounding pushed the total over: leave room for it.
  const double rounding = out.error_bound - remainder_bound(out.terms_used, x);
  if (rounding < tol.eps) {
    out = evaluate(choose_truncation(x, tol.eps - rounding, tol.max_terms));
    if (out.error_bound <= tol.eps) return out;
  }
  throw AccuracyError("density_g: eps " + detail::to_text(tol.eps) +
                      " is below the rounding floor at x = " +
                      detail::to_text(x));
}

}  // namespace wienerl2
