// Copyright 2026 The Lotto Signal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOTTO_SIGNAL_TESTS_TEST_UTIL_HPP_
#define LOTTO_SIGNAL_TESTS_TEST_UTIL_HPP_

// Hand-rolled generators for property tests.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "lotto_signal/core_model.hpp"

namespace lotto_signal::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0.0, 1.0) < 0.5; }

  // a_high > a_low > 0, either side of a_high = 2 a_low.
  BudgetPrior prior() {
    const double a_high = uniform(0.1, 5.0);
    const double a_low = uniform(0.01, 0.999) * a_high;
    return BudgetPrior(a_high, a_low, uniform(0.01, 0.99));
  }

  // Prior with a_high > 2 a_low, so the type threshold lies in (0, 1).
  BudgetPrior separated_prior() {
    const double a_high = uniform(0.1, 5.0);
    const double a_low = uniform(0.01, 0.49) * a_high;
    return BudgetPrior(a_high, a_low, uniform(0.01, 0.99));
  }

  GameConfig game() {
    const BudgetPrior pr = prior();
    const double phi = coin() ? 1.0 : uniform(0.5, 2.0);
    const double cap = 1.5 * (1.0 - pr.p()) * phi / (2.0 * pr.a_low());
    return GameConfig(pr, uniform(1e-3, 1.0) * cap, phi);
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline double RelErr(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace lotto_signal::testing

#endif  // LOTTO_SIGNAL_TESTS_TEST_UTIL_HPP_
