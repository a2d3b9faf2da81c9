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

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>

#include "gamble/mc.hpp"
#include "gamble/rng.hpp"
#include "gamble/special.hpp"

namespace gamble::kelly {

/// Even-odds Kelly betting near a fair coin: the event has probability
/// 0.5 + delta_true, the bettor perceives 0.5 + delta_true + xi with
/// xi ~ Normal(0, sigma^2).  All growth quantities use the first-order
/// small-delta approximation.
struct KellySetting {
  double delta_true = 0.0;
  double sigma = 0.0;

  KellySetting(double delta, double s) : delta_true(delta), sigma(s) {
    if (!(std::fabs(delta_true) <= 0.25))
      throw std::domain_error(
          "KellySetting: |delta| > 0.25 leaves the first-order regime");
    if (!(sigma >= 0.0))
      throw std::domain_error("KellySetting: sigma must be >= 0");
  }
};

/// First-order growth rate 2 a delta - a^2/2 for betting fraction a.
inline double growth_rate(double a, double delta) {
  if (!(a >= 0.0 && a <= 1.0))
    throw std::domain_error("growth_rate: fraction a must be in [0,1]");
  return 2.0 * a * delta - 0.5 * a * a;
}

/// Kelly fraction for a perceived edge: max(0, 2 delta_perc).
inline double optimal_fraction(double delta_perc) {
  return std::max(0.0, 2.0 * delta_perc);
}

/// Truncated second moment S(y) = E[Z^2 1{Z > y}] = y phi(y) + Phi(-y).
inline double s_tail(double y) {
  if (std::isinf(y)) return y < 0.0 ? 1.0 : 0.0;
  return y * normal_pdf(y) + normal_cdf(-y);
}

/// Expected growth rate under perception noise:
/// 2 (delta^2 - sigma^2) Phi(delta/sigma) + 2 sigma delta phi(delta/sigma).
/// The sigma = 0 branch is the exact limit max(0, 2 delta^2 sign+).
inline double expected_growth(const KellySetting& setting) {
  const double d = setting.delta_true;
  const double s = setting.sigma;
  if (s == 0.0) return d > 0.0 ? 2.0 * d * d : 0.0;
  const double z = d / s;
  return 2.0 * (d * d - s * s) * normal_cdf(z) + 2.0 * s * d * normal_pdf(z);
}

/// Monte Carlo oracle via the piecewise form:
/// growth = 2 (delta^2 - xi^2) if xi > -delta, else 0.
inline MeanSE simulate_expected_growth(const KellySetting& setting,
                                       std::uint64_t reps,
                                       const RngStream& stream) {
  const double d = setting.delta_true;
  const double s = setting.sigma;
  return run_replications(reps, stream, [d, s](RngStream& rng) {
    const double xi = s == 0.0 ? 0.0 : rng.normal(s);
    return xi > -d ? 2.0 * (d * d - xi * xi) : 0.0;
  });
}

/// Experimentation hook for allowance-style fraction rules: mean first-order
/// growth when the fraction is chosen as policy(delta_perc).  No rule tried
/// so far has beaten optimal_fraction.
inline MeanSE simulate_growth_with_policy(
    const KellySetting& setting, const std::function<double(double)>& policy,
    std::uint64_t reps, const RngStream& stream) {
  const double d = setting.delta_true;
  const double s = setting.sigma;
  return run_replications(reps, stream, [&, d, s](RngStream& rng) {
    const double xi = s == 0.0 ? 0.0 : rng.normal(s);
    return growth_rate(policy(d + xi), d);
  });
}

}  // namespace gamble::kelly
