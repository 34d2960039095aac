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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "reference_values.hpp"
#include "wienerl2/compensated_sum.hpp"
#include "wienerl2/series.hpp"

namespace wienerl2 {
namespace {

// Exact central binomial coefficient C(2l, l); fits in 64 bits for l <= 30.
std::uint64_t central_binomial(unsigned l) {
  std::uint64_t c = 1;
  for (unsigned k = 1; k <= l; ++k) c = c * (l + k) / k;
  return c;
}

TEST(CompensatedSum, RecoversCancelledLowOrderBits) {
  CompensatedSum<double> s;
  s += 1.0;
  s += 1e-16;
  s += -1.0;
  EXPECT_DOUBLE_EQ(s.value(), 1e-16);
  double naive = 1.0;
  naive += 1e-16;
  naive -= 1.0;
  EXPECT_EQ(naive, 0.0);
}

TEST(CoeffC, SmallValues) {
  EXPECT_EQ(coeff_c(0), 1.0);
  EXPECT_EQ(coeff_c(1), 0.5);
  EXPECT_EQ(coeff_c(2), 0.375);
}

TEST(CoeffC, MatchesExactRationalUpTo30) {
  for (unsigned l = 0; l <= 30; ++l) {
    const double exact =
        std::ldexp(static_cast<double>(central_binomial(l)), -2 * static_cast<int>(l));
    EXPECT_NEAR(coeff_c(l), exact, 1e-14 * exact) << "l=" << l;
  }
  const double c20 = std::ldexp(137846528820.0, -40);
  EXPECT_NEAR(coeff_c(20), c20, 1e-14 * c20);
}

TEST(CoeffC, NoOverflowAtLargeIndex) {
  const double c = coeff_c(1'000'000);
  EXPECT_TRUE(std::isfinite(c));
  // c_l ~ 1 / sqrt(pi l)
  EXPECT_NEAR(c * std::sqrt(std::numbers::pi * 1e6), 1.0, 1e-6);
}

TEST(CoeffA, Values) {
  EXPECT_EQ(coeff_a(0), 0.25);
  EXPECT_EQ(coeff_a(1), 0.625);
}

TEST(CoeffA, PositiveWhileCoeffCDecreases) {
  // a_l = c_l (l + 1/4) grows like sqrt(l / pi); it is c_l that decreases.
  for (TermIndex l = 1; l < 200; ++l) {
    EXPECT_GT(coeff_a(l), 0.0);
    EXPECT_LT(coeff_c(l + 1), coeff_c(l));
  }
}

TEST(CoeffC, BinomialEstimateAtNine) {
  // c_N < e^{-1/2} / sqrt(N) at N = 9
  EXPECT_LT(coeff_c(9), std::exp(-0.5) / 3.0);
}

TEST(TermH, Values) {
  EXPECT_DOUBLE_EQ(term_h(2, 1.0), std::exp(-81.0 / 16.0));
  EXPECT_EQ(term_h(0, 1e-6), 0.0);
  EXPECT_EQ(term_h(0, 1e-300), 0.0);
  EXPECT_THROW(term_h(0, 0.0), DomainError);
  EXPECT_THROW(term_h(0, -1.0), DomainError);
}

TEST(TermH, MaximumValue) {
  for (TermIndex n = 0; n <= 10; ++n) {
    const double b = static_cast<double>(n) + 0.25;
    const double expected = std::pow(1.5 / std::numbers::e, 1.5) / (b * b * b);
    EXPECT_NEAR(term_h(n, argmax_h(n)), expected, 1e-14 * expected);
  }
}

TEST(ArgmaxH, Values) {
  EXPECT_DOUBLE_EQ(argmax_h(0), 1.0 / 24.0);
  EXPECT_DOUBLE_EQ(argmax_h(1), 25.0 / 24.0);
  EXPECT_NEAR(argmax_h(4), 2.0 * (17.0 / 4) * (17.0 / 4) / 3.0, 1e-12);
}

TEST(ArgmaxH, FiniteDifferenceSignChange) {
  for (TermIndex n = 0; n <= 10; ++n) {
    const double xs = argmax_h(n);
    const double d = 1e-3 * xs;
    const double slope_left = (term_h(n, xs - d) - term_h(n, xs - 2 * d)) / d;
    const double slope_right = (term_h(n, xs + 2 * d) - term_h(n, xs + d)) / d;
    EXPECT_GT(slope_left, 0.0) << n;
    EXPECT_LT(slope_right, 0.0) << n;
    EXPECT_LT(term_h(n, xs * (1 - 1e-3)), term_h(n, xs));
    EXPECT_LT(term_h(n, xs * (1 + 1e-3)), term_h(n, xs));
  }
}

TEST(RemainderBound, Values) {
  EXPECT_NEAR(remainder_bound(1, 1.0), testing::kRemainderBound_1_1, 1e-15);
  EXPECT_EQ(remainder_bound(3, 1e-6), 0.0);
  const double x3 = argmax_h(3);
  const double expected = std::sqrt(2.0 / std::numbers::pi) * coeff_a(3) *
                          std::pow(1.5 / std::numbers::e, 1.5) /
                          std::pow(13.0 / 4.0, 3);
  EXPECT_NEAR(remainder_bound(3, x3), expected, 1e-14 * expected);
  EXPECT_THROW(remainder_bound(0, 1.0), DomainError);
  EXPECT_THROW(remainder_bound(1, 0.0), DomainError);
}

TEST(RemainderBound, DominatesErrorAtOneTerm) {
  const double err = std::abs(partial_sum_g(1.0, 1) - partial_sum_g(1.0, 41));
  EXPECT_LE(err, remainder_bound(1, 1.0));
}

TEST(UniformRemainderBound, Values) {
  const double k = 1.5 / (std::numbers::e * std::numbers::e);
  EXPECT_DOUBLE_EQ(uniform_remainder_bound(1), k);
  EXPECT_NEAR(uniform_remainder_bound(1), 0.203, 5e-4);
  EXPECT_DOUBLE_EQ(uniform_remainder_bound(4), k / 32.0);
  EXPECT_THROW(uniform_remainder_bound(0), DomainError);
}

TEST(UniformRemainderBound, DominatesGridSweep) {
  for (std::size_t n = 1; n <= 50; ++n) {
    for (int i = 0; i <= 600; ++i) {
      const double x = std::pow(10.0, -3.0 + i * 0.01);
      EXPECT_LE(remainder_bound(n, x), uniform_remainder_bound(n))
          << "N=" << n << " x=" << x;
    }
  }
}

TEST(ChooseTruncation, Examples) {
  EXPECT_EQ(choose_truncation(1e-4, 1e-10), 1u);
  EXPECT_EQ(choose_truncation(1.0, 0.2), 1u);
  // brute-force scans of the remainder formula at 40 digits
  EXPECT_EQ(choose_truncation(100.0, 1e-10), 42u);
  EXPECT_EQ(choose_truncation(1.0, 1e-12), 6u);
  EXPECT_EQ(choose_truncation(1000.0, 1e-12), 138u);
}

TEST(ChooseTruncation, IsSmallestSatisfying) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> logx(-3.0, 3.0);
  std::uniform_real_distribution<double> logeps(-14.0, -2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = std::pow(10.0, logx(rng));
    const double eps = std::pow(10.0, logeps(rng));
    const std::size_t n = choose_truncation(x, eps);
    EXPECT_LE(remainder_bound(n, x), eps);
    for (std::size_t m = 1; m < n; ++m) EXPECT_GT(remainder_bound(m, x), eps);
  }
}

TEST(ChooseTruncation, IterationLimit) {
  EXPECT_THROW(choose_truncation(1e6, 1e-300, 50), IterationLimitError);
  EXPECT_THROW(density_g(1e3, TruncationControl::tolerance(1e-300, 10)),
               IterationLimitError);
  EXPECT_THROW(choose_truncation(1.0, 0.0), DomainError);
}

TEST(TruncationControl, RejectsInvalid) {
  EXPECT_THROW(TruncationControl::fixed_terms(0), DomainError);
  EXPECT_THROW(TruncationControl::tolerance(0.0), DomainError);
  EXPECT_THROW(TruncationControl::tolerance(-1.0), DomainError);
  EXPECT_THROW(TruncationControl::tolerance(std::nan("")), DomainError);
}

TEST(DensityG, NearOrigin) {
  const auto v = density_g(1e-4, TruncationControl::tolerance(1e-10));
  EXPECT_EQ(v.terms_used, 1u);
  EXPECT_LE(v.error_bound, 1e-250);
  EXPECT_GE(v.value, 0.0);
  EXPECT_LE(v.value, 1e-250);
  EXPECT_EQ(density_g(1e-6, TruncationControl::fixed_terms(5)).value, 0.0);
}

TEST(DensityG, MatchesHighPrecisionReference) {
  for (const auto& [x, g] : testing::kDensityG) {
    const auto v = density_g(x, TruncationControl::tolerance(1e-14));
    EXPECT_NEAR(v.value, g, 1e-13 + 1e-14 * g) << "x=" << x;
    EXPECT_LE(v.error_bound, 1e-14);
    EXPECT_LE(std::abs(v.value - g), v.error_bound + 1e-14);
  }
}

TEST(DensityG, BracketingAtOne) {
  const double g0 = density_g(1.0, TruncationControl::fixed_terms(1)).value;
  const double g1 = density_g(1.0, TruncationControl::fixed_terms(2)).value;
  const double ref = partial_sum_g(1.0, 200);
  EXPECT_GE(g0, ref);
  EXPECT_GE(ref, g1);
}

TEST(DensityG, ConsecutivePartialSumsBracketDeeperOnes) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> logx(-2.0, 1.5);
  for (int trial = 0; trial < 300; ++trial) {
    const double x = std::pow(10.0, logx(rng));
    // Magnitudes a_l h_l(x) decrease once (l + 1/4)^2 > x.
    const auto start = static_cast<std::size_t>(std::sqrt(x)) + 2;
    const double lo = std::min(partial_sum_g(x, start), partial_sum_g(x, start + 1));
    const double hi = std::max(partial_sum_g(x, start), partial_sum_g(x, start + 1));
    for (std::size_t m = start + 2; m < start + 30; m += 3) {
      const double gm = partial_sum_g(x, m);
      EXPECT_GE(gm, lo - 1e-15) << x << " " << m;
      EXPECT_LE(gm, hi + 1e-15) << x << " " << m;
    }
  }
}

TEST(DensityG, SignedTermsAlternate) {
  for (double x : {0.1, 1.0, 30.0}) {
    for (TermIndex l = 0; l < 30; ++l) {
      const double t = std::pow(-1.0, static_cast<double>(l)) * coeff_a(l) * term_h(l, x);
      const double next =
          std::pow(-1.0, static_cast<double>(l + 1)) * coeff_a(l + 1) * term_h(l + 1, x);
      if (t != 0.0 && next != 0.0) {
        EXPECT_NE(std::signbit(t), std::signbit(next));
      }
    }
  }
}

TEST(DensityG, NonNegativeWithinBound) {
  for (int i = 0; i <= 200; ++i) {
    const double x = std::pow(10.0, -3.0 + i * 0.03);
    for (std::size_t n : {1u, 2u, 3u, 7u, 20u}) {
      const double raw = partial_sum_g(x, n);
      const auto v = density_g(x, TruncationControl::fixed_terms(n));
      if (raw < 0.0 && -raw <= v.error_bound) {
        EXPECT_EQ(v.value, 0.0);
      } else {
        EXPECT_EQ(v.value, raw);
      }
      EXPECT_GE(raw, -v.error_bound - 1e-15) << x << " " << n;
    }
  }
}

TEST(DensityG, BoundValidityGrid) {
  for (int i = 0; i < 40; ++i) {
    const double x = std::pow(10.0, -3.0 + 6.0 * i / 39.0);
    const double ref = partial_sum_g(x, 200);
    for (std::size_t n = 1; n <= 20; ++n) {
      EXPECT_LE(std::abs(partial_sum_g(x, n) - ref),
                remainder_bound(n, x) + 1e-15)
          << "x=" << x << " N=" << n;
    }
  }
}

TEST(DensityG, DomainErrors) {
  EXPECT_THROW(density_g(0.0, TruncationControl::fixed_terms(1)), DomainError);
  EXPECT_THROW(density_g(-2.0, TruncationControl::tolerance(1e-8)), DomainError);
}

TEST(DensityG, EpsBelowRoundingFloor) {
  EXPECT_THROW(density_g(1.0, TruncationControl::tolerance(1e-18)), AccuracyError);
  const auto v = density_g(1.0, TruncationControl::tolerance(1e-14));
  EXPECT_LE(v.error_bound, 1e-14);
  EXPECT_GT(v.error_bound, remainder_bound(v.terms_used, 1.0));
}

TEST(DensityG, IntegratesToOne) {
  // Trapezoid on a fine grid; g is smooth and negligible outside [0, 12].
  const auto trunc = TruncationControl::tolerance(1e-13);
  const double h = 1e-3;
  double s = 0.0;
  for (int i = 1; i < 12000; ++i) s += density_g(i * h, trunc).value;
  EXPECT_NEAR(s * h, 1.0, 1e-9);
}

}  // namespace
}  // namespace wienerl2
