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

// Values computed offline with 40-digit arithmetic (mpmath): the series
// summed to 400 terms, erfc from mpmath.erfc, truncation orders by brute
// scan of the remainder formula. Not produced by this library.

#pragma once

#include <array>
#include <utility>

namespace wienerl2::testing {

// (x, g(x))
inline constexpr std::array<std::pair<double, double>, 6> kDensityG{{
    {0.02, 3.0985950354194551803},
    {0.05, 5.1116011747159631438},
    {0.25, 1.2350848523998504758},
    {1.0, 0.087097549777580087249},
    {3.0, 0.00035516502703500047006},
    {10.0, 6.0998410570925255092e-12},
}};

// (x, erfc(x))
inline constexpr std::array<std::pair<double, double>, 21> kErfc{{
    {-6.0, 1.9999999999999999785},
    {-3.5, 1.9999992569016276586},
    {-1.0, 1.8427007929497148693},
    {-0.5, 1.5204998778130465377},
    {-0.001, 1.0011283787909692364},
    {0.0, 1.0},
    {1e-08, 0.99999998871620832904},
    {0.3, 0.67137324054087258381},
    {0.75, 0.2888443663464848684},
    {0.999, 0.15771472979350305836},
    {1.0, 0.15729920705028513066},
    {1.25, 0.077099871743541769863},
    {2.0, 0.0046777349810472658379},
    {3.3, 3.0577097964381651988e-6},
    {5.0, 1.5374597944280348502e-12},
    {7.5, 2.7766493860305691007e-26},
    {10.0, 2.088487583762544757e-45},
    {15.0, 7.2129941724512066666e-100},
    {20.0, 5.3958656116079009289e-176},
    {25.0, 8.300172571196522752e-274},
    {26.0, 5.6631924088561428465e-296},
}};

inline constexpr double kRemainderBound_1_1 = 0.10452855598520816;

// R_30(1) = integral_0^1 g_29(x) dx
inline constexpr double kCdf30At1 = 0.96968501336789104945;

// Pr{X > c} for the unit-horizon variable (200-term series)
inline constexpr std::array<std::pair<double, double>, 4> kTail{{
    {0.25, 0.32217218247053567},
    {0.5, 0.13610224564543779},
    {1.0, 0.030314986632108951},
    {2.0, 0.0019172273073281005},
}};

}  // namespace wienerl2::testing
