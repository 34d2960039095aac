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
#include <complex>
#include <numbers>

#include "reference_values.hpp"
#include "wienerl2/oracles/quadrature.hpp"
#include "wienerl2/series.hpp"

namespace wienerl2 {
namespace {

TEST(GeneratingFunction, AtZero) {
  EXPECT_DOUBLE_EQ(generating_function(0.0, 1.0), 1.0);
  EXPECT_EQ(generating_function(std::complex<double>(0.0, 0.0), 3.0),
            std::complex<double>(1.0, 0.0));
}

TEST(GeneratingFunction, RealAxisDecreasingInUnitInterval) {
  double prev = 1.0;
  for (int i = 1; i <= 400; ++i) {
    const double lam = 0.05 * i * i;
    const double q = generating_function(lam, 1.0);
    EXPECT_GT(q, 0.0);
    EXPECT_LT(q, prev);
    EXPECT_NEAR(q, 1.0 / std::sqrt(std::cosh(std::sqrt(lam))), 1e-14);
    prev = q;
  }
}

TEST(GeneratingFunction, MeanFromFiniteDifference) {
  const double h = 1e-6;
  const double mean = -(generating_function(h, 1.0) - generating_function(0.0, 1.0)) / h;
  EXPECT_NEAR(mean, 0.25, 1e-5);
}

TEST(GeneratingFunction, ScalingIdentity) {
  for (double T : {0.5, 1.0, 2.0, 3.7}) {
    for (std::complex<double> lam : {std::complex<double>(0.3, 0.0),
                                     std::complex<double>(1.0, 2.0),
                                     std::complex<double>(0.0, -5.0),
                                     std::complex<double>(7.5, 0.25)}) {
      const auto a = generating_function(lam, T);
      const auto b = generating_function(lam * (T * T), 1.0);
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-14 * std::abs(a) + 1e-300);
    }
  }
  // Exact when T is a power of two (no rounding in lambda T^2 or sqrt).
  EXPECT_EQ(generating_function(std::complex<double>(0.7, 0.3), 2.0),
            generating_function(std::complex<double>(2.8, 1.2), 1.0));
}

TEST(GeneratingFunction, NoOverflowFarOut) {
  const auto q = generating_function(std::complex<double>(1e8, 3e7), 1.0);
  EXPECT_TRUE(std::isfinite(q.real()));
  EXPECT_TRUE(std::isfinite(q.imag()));
}

TEST(GeneratingFunction, DomainErrors) {
  EXPECT_THROW(generating_function(-1.0, 1.0), DomainError);
  EXPECT_THROW(generating_function(std::complex<double>(-0.5, 1.0), 1.0), DomainError);
  EXPECT_THROW(generating_function(1.0, 0.0), DomainError);
}

TEST(QuadratureDensity, MutualCheckWithSeries) {
  for (double x : {1.0, 0.05, 10.0}) {
    const double q = quadrature_density(x);
    const double s = density_g(x, TruncationControl::tolerance(1e-12)).value;
    EXPECT_NEAR(q, s, 1e-9) << "x=" << x;
  }
}

TEST(QuadratureDensity, HighPrecisionReference) {
  for (const auto& [x, g] : testing::kDensityG) {
    EXPECT_NEAR(quadrature_density(x), g, 1e-10) << "x=" << x;
  }
}

TEST(QuadratureDensity, LogGridAgreement) {
  for (int i = 0; i < 30; ++i) {
    const double x = 0.02 * std::pow(2500.0, i / 29.0);
    EXPECT_NEAR(quadrature_density(x),
                density_g(x, TruncationControl::tolerance(1e-12)).value, 1e-8)
        << "x=" << x;
  }
}

TEST(QuadratureDensity, Errors) {
  EXPECT_THROW(quadrature_density(0.0), DomainError);
  QuadratureConfig bad;
  bad.nodes = 8;
  EXPECT_THROW(quadrature_density(1.0, bad), DomainError);
  QuadratureConfig starved;
  starved.nodes = 16;
  starved.max_nodes = 32;
  starved.tolerance = 1e-16;
  EXPECT_THROW(quadrature_density(0.02, starved), AccuracyError);
}

TEST(LaplaceRoundTrip, MatchesGeneratingFunction) {
  for (double lam : {0.0, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    EXPECT_NEAR(laplace_transform_of_density(lam), generating_function(lam, 1.0), 1e-7)
        << "lambda=" << lam;
  }
}

}  // namespace
}  // namespace wienerl2
