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

#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "gamble/nature.hpp"

using namespace gamble;
using namespace gamble::nature;

namespace {
const UtilityQuad kTheta(4.0, 0.0, 1.0, 3.0);  // p_crit = 0.5, z = 6
}

TEST_CASE("utilities and the critical probability") {
  CHECK_THROWS_AS(UtilityQuad(1.0, 0.0, 2.0, 3.0), std::domain_error);
  CHECK_THROWS_AS(UtilityQuad(4.0, 3.0, 1.0, 2.0), std::domain_error);

  CHECK(p_crit(kTheta).value() == doctest::Approx(0.5).epsilon(1e-14));
  // Equal expected utilities at the critical point.
  const double pc = p_crit(kTheta).value();
  CHECK(std::fabs(kTheta.expected_utility_A(pc) -
                  kTheta.expected_utility_B(pc)) < 1e-12);
  // Vanishing advantage of A pushes the critical point to zero.
  CHECK(p_crit(UtilityQuad(1.0 + 1e-9, 0.0, 1.0, 3.0)).value() <
        1e-8);
  // Depends only on utility differences: shifting every utility is neutral.
  CHECK(p_crit(UtilityQuad(14.0, 10.0, 11.0, 13.0)).value() ==
        doctest::Approx(pc).epsilon(1e-14));
}

TEST_CASE("decision cost: zero on the right side, exact gap otherwise") {
  // Same side of the critical point: no cost.
  CHECK(decision_cost(0.3, 0.4, kTheta) == 0.0);
  CHECK(decision_cost(0.7, 0.9, kTheta) == 0.0);
  CHECK(decision_cost(0.55, 0.55, kTheta) == 0.0);
  // Crossing the critical point costs |p_true - p_crit| z.
  CHECK(decision_cost(0.55, 0.45, kTheta) ==
        doctest::Approx(0.05 * 6.0).epsilon(1e-12));
  CHECK(decision_cost(0.45, 0.55, kTheta) ==
        doctest::Approx(0.05 * 6.0).epsilon(1e-12));
  // Ties at the critical point pick action A.
  CHECK(decision_cost(0.3, 0.5, kTheta) == 0.0);   // A is optimal, A chosen
  CHECK(decision_cost(0.7, 0.5, kTheta) ==
        doctest::Approx(0.2 * 6.0).epsilon(1e-12));
  // Cost equals the direct expected-utility gap arithmetic everywhere.
  for (double pt : {0.1, 0.45, 0.5, 0.62, 0.9})
    for (double pp : {0.2, 0.5, 0.8}) {
      const double eu_a = kTheta.expected_utility_A(pt);
      const double eu_b = kTheta.expected_utility_B(pt);
      const double chosen = pp <= 0.5 ? eu_a : eu_b;
      CHECK(decision_cost(pt, pp, kTheta) ==
            doctest::Approx(std::max(eu_a, eu_b) - chosen).epsilon(1e-12));
      CHECK(decision_cost(pt, pp, kTheta) >= 0.0);
    }
}

TEST_CASE("expected cost: zero noise, quadratic off-critical scaling") {
  const RngStream stream(808, 1);
  const MeanSE zero = expected_cost(0.4, ErrorModel::normal(0.0), kTheta,
                                    1000, stream);
  CHECK(zero.mean == 0.0);

  // Fixed p_true: the exact mean cost is z d Phi(-d/sigma) with
  // d = |p_true - p_crit| (cost d z paid when the error crosses).
  const MeanSE fixed = expected_cost(0.4, ErrorModel::normal(0.05), kTheta,
                                     500000, stream.substream(1));
  const double exact = 6.0 * 0.1 * normal_cdf(-2.0);
  CHECK(std::fabs(fixed.mean - exact) < 3.0 * fixed.std_error);

  // Averaged over the position of p_true, the mean cost is quadratic in
  // sigma: doubling sigma roughly quadruples it.
  auto averaged = [&](double s, std::uint64_t sub) {
    return run_replications(2000000, stream.substream(sub), [&, s](RngStream& rng) {
      const double pt = rng.uniform(0.05, 0.95);
      const double pp = std::clamp(pt + rng.normal(s), 0.0, 1.0);
      return decision_cost(pt, pp, kTheta);
    });
  };
  const MeanSE c1 = averaged(0.02, 11);
  const MeanSE c2 = averaged(0.04, 12);
  const double ratio = c2.mean / c1.mean;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);

  // Exactly on-critical both actions tie, so misperception is free.
  const MeanSE at_crit = expected_cost(0.5, ErrorModel::normal(0.05), kTheta,
                                       1000, stream.substream(3));
  CHECK(at_crit.mean == 0.0);

  // Within sigma of the critical point the scaling is linear, not
  // quadratic: p_true = p_crit + sigma/2 crosses with probability
  // Phi(-1/2), so E[cost] = z (sigma/2) Phi(-1/2) exactly.
  const double s = 0.05;
  const MeanSE near_crit = expected_cost(0.5 + s / 2.0, ErrorModel::normal(s),
                                         kTheta, 500000, stream.substream(4));
  const double linear = 6.0 * (s / 2.0) * normal_cdf(-0.5);
  CHECK(std::fabs(near_crit.mean - linear) < 3.0 * near_crit.std_error);

  // Clamping gate mirrors the two-person bet.
  CHECK_THROWS_AS(expected_cost(0.5, ErrorModel::normal(0.3), kTheta, 10,
                                stream),
                  std::domain_error);
}
