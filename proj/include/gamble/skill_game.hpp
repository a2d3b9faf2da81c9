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
#include <span>
#include <stdexcept>
#include <utility>

#include "gamble/mc.hpp"
#include "gamble/quadrature.hpp"
#include "gamble/rng.hpp"
#include "gamble/special.hpp"

namespace gamble::skill_game {

/// Standardized willingness-noise distribution zeta: symmetric, variance 1.
enum class ZetaDist { NormalStd, UniformStd };

inline constexpr double kSqrt3 = 1.73205080756887729352744634;

/// How each player misjudges the skill gap: sigma_A scales the noise in A's
/// comparison of own vs. opponent skill, sigma_B likewise for the opponent.
struct SkillPerception {
  double sigma_A = 0.0;
  double sigma_B = 0.0;
  ZetaDist zeta = ZetaDist::NormalStd;

  SkillPerception(double sa, double sb, ZetaDist z = ZetaDist::NormalStd)
      : sigma_A(sa), sigma_B(sb), zeta(z) {
    if (!(sigma_A >= 0.0) || !(sigma_B >= 0.0))
      throw std::domain_error("SkillPerception: scales must be >= 0");
  }
};

namespace detail {

inline double zeta_cdf(ZetaDist z, double x) {
  if (z == ZetaDist::NormalStd) return normal_cdf(x);
  if (x <= -kSqrt3) return 0.0;
  if (x >= kSqrt3) return 1.0;
  return 0.5 * (x / kSqrt3 + 1.0);
}

inline double zeta_sample(ZetaDist z, RngStream& rng) {
  return z == ZetaDist::NormalStd ? rng.normal() : rng.uniform(-kSqrt3, kSqrt3);
}

/// P(sigma zeta < u); step function at sigma = 0 with the 1/2 tie value.
inline double willingness(ZetaDist z, double sigma, double u) {
  if (sigma == 0.0) return u > 0.0 ? 1.0 : (u == 0.0 ? 0.5 : 0.0);
  return zeta_cdf(z, u / sigma);
}

}  // namespace detail

/// Mean gain to A conditioned on skill gap u = x_A - x_B:
/// P(sigma_A zeta < u) P(sigma_B zeta > u) (2 logistic(u) - 1).
inline double gain_at_gap(double u, const SkillPerception& perc) {
  const double willing_A = detail::willingness(perc.zeta, perc.sigma_A, u);
  const double willing_B = 1.0 - detail::willingness(perc.zeta, perc.sigma_B, u);
  return willing_A * willing_B * (2.0 * logistic(u) - 1.0);
}

namespace detail {

/// Half-width beyond which |gain_at_gap| < 1e-12 (the opponent's
/// willingness factor dominates the decay).
inline double default_window(const SkillPerception& perc) {
  const double s = std::max(perc.sigma_A, perc.sigma_B);
  if (perc.zeta == ZetaDist::UniformStd) return kSqrt3 * s + 1.0;
  return 7.5 * s + 1.0;
}

}  // namespace detail

/// Rate of gain to A averaged over a flat improper prior on the skill gap
/// (adaptive quadrature over the decaying window).
inline double expected_gain(const SkillPerception& perc,
                            const QuadratureSpec& spec = {}) {
  if (perc.sigma_A == 0.0 && perc.sigma_B == 0.0)
    throw std::domain_error(
        "expected_gain: needs sigma_A > 0 or sigma_B > 0 (integrand vanishes)");
  const double w = detail::default_window(perc);
  return integrate([&](double u) { return gain_at_gap(u, perc); }, -w, w, spec);
}

/// Mixture average of expected_gain over random opponent scales;
/// weights need not be normalized.
inline double expected_gain_mixture(
    double sigma_A, std::span<const std::pair<double, double>> sigma_B_weights,
    ZetaDist zeta = ZetaDist::NormalStd, const QuadratureSpec& spec = {}) {
  double total = 0.0, wsum = 0.0;
  for (const auto& [sb, w] : sigma_B_weights) {
    if (!(w > 0.0))
      throw std::domain_error("expected_gain_mixture: weights must be > 0");
    total += w * expected_gain(SkillPerception(sigma_A, sb, zeta), spec);
    wsum += w;
  }
  if (wsum == 0.0)
    throw std::domain_error("expected_gain_mixture: empty mixture");
  return total / wsum;
}

/// Monte Carlo oracle: u ~ Uniform(-W, W); a match happens iff both players
/// believe themselves stronger; settlement is +-1 at probability
/// logistic(u).  Returns 2W times the average gain, the rate matching
/// expected_gain.
inline MeanSE simulate_match_rate(const SkillPerception& perc,
                                  double window_halfwidth, std::uint64_t reps,
                                  const RngStream& stream) {
  if (!(window_halfwidth > 0.0))
    throw std::domain_error("simulate_match_rate: window must be > 0");
  if (std::fabs(gain_at_gap(window_halfwidth, perc)) > 1e-12 ||
      std::fabs(gain_at_gap(-window_halfwidth, perc)) > 1e-12)
    throw std::domain_error(
        "simulate_match_rate: window too small, integrand not negligible at "
        "the edges");
  const double w = window_halfwidth;
  MeanSE r = run_replications(reps, stream, [&, w](RngStream& rng) {
    const double u = rng.uniform(-w, w);
    const double za = detail::zeta_sample(perc.zeta, rng);
    const double zb = detail::zeta_sample(perc.zeta, rng);
    if (!(perc.sigma_A * za < u && perc.sigma_B * zb > u)) return 0.0;
    return rng.uniform01() <= logistic(u) ? 1.0 : -1.0;
  });
  r.mean *= 2.0 * w;
  r.std_error *= 2.0 * w;
  return r;
}

}  // namespace gamble::skill_game
