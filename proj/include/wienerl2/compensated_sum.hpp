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
#include <concepts>

namespace wienerl2 {

/// Neumaier's variant of Kahan summation.
///
/// Each addition is split with an error-free TwoSum-style correction, so the
/// running compensation also captures the case |term| > |sum|. Alternating
/// series with large, mostly cancelling terms are the main customer.
///
/// Must not be compiled with -ffast-math: reassociation removes the
/// correction term.
template <std::floating_point Value>
class CompensatedSum {
 public:
  constexpr CompensatedSum() = default;
  constexpr explicit CompensatedSum(Value initial) : sum_(initial) {}

  constexpr CompensatedSum& operator+=(Value term) {
    const Value t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  constexpr CompensatedSum& operator-=(Value term) { return *this += -term; }

  [[nodiscard]] constexpr Value value() const { return sum_ + compensation_; }
  constexpr explicit operator Value() const { return value(); }

 private:
  Value sum_{0};
  Value compensation_{0};
};

}  // namespace wienerl2
