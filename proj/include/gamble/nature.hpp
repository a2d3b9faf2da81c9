// Copyright 2026 The gamble Authors
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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "gamble/error_model.hpp"
#include "gamble/gentlemans_bet.hpp"
#include "gamble/mc.hpp"
#include "gamble/rng.hpp"

namespace gamble::nature {

/// Two-action decision against nature (the wedding-venue choice):
/// action A pays a without rain and b with rain; action B pays c and d.
/// A is best in dry weather (a > c), B in wet (d > b).
struct UtilityQuad {
  double a, b, c, d;

  UtilityQuad(double a_, double b_, double c_, double d_)
      : a(a_), b(b_), c(c_), d(d_) {
    if (!(a > c) || !(d > b))
      throw std::domain_error(
          "UtilityQuad: need a > c and d > b (each action best in its "
          "weather)");
  }

  double expected_utility_A(double p_rain) const {
    return p_rain * b + (1.0 - p_rain) * a;
  }
  double expected_utility_B(double p_rain) const {
    return p_rain * d + (1.0 - p_rain) * c;
  }
};

/// Indifference probability: (a-c) / ((a-c) + (d-b)); both actions have
/// equal expected utility there.
inline Probability p_crit(const UtilityQuad& theta) {
  const double ac = theta.a - theta.c;
  const double db = theta.d - theta.b;
  return Probability(ac / (ac + db));
}

/// Realized cost of deciding from p_perc when nature follows p_true: zero
/// when both sit on the same side of p_crit, otherwise the exact
/// expected-utility gap |p_true - p_crit| (a - b - c + d).  Ties at p_crit
/// choose action A.
inline double decision_cost(Probability p_true, Probability p_perc,
                            const UtilityQuad& theta) {
  const double pc = p_crit(theta).value();
  const bool choose_A = p_perc.value() <= pc;
  const double eu_A = theta.expected_utility_A(p_true.value());
  const double eu_B = theta.expected_utility_B(p_true.value());
  const double chosen = choose_A ? eu_A : eu_B;
  return std::max(eu_A, eu_B) - chosen;
}

/// Monte Carlo mean cost with p_perc = p_true + xi; rejects parameter sets
/// where the noise could push p_perc outside [0,1] non-negligibly, matching
/// the clamping policy of the two-person bet.
inline MeanSE expected_cost(Probability p_true, const ErrorModel& noise,
                            const UtilityQuad& theta, std::uint64_t reps,
                            const RngStream& stream) {
  const double p = p_true.value();
  if (gentlemans_bet::detail::clamp_probability(p, noise) >= 1e-6)
    throw std::domain_error(
        "expected_cost: clamp probability of p_true + xi is not negligible "
        "(>= 1e-6); perceived probabilities would clamp too often");
  return run_replications(reps, stream, [&, p](RngStream& rng) {
    const double perc = std::clamp(p + noise.sample(rng), 0.0, 1.0);
    return decision_cost(p_true, Probability(perc), theta);
  });
}

}  // namespace gamble::nature
