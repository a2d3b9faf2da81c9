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
#include "gamble/mc.hpp"
#include "gamble/quadrature.hpp"
#include "gamble/rng.hpp"

namespace gamble::bookmaker {

/// Gamblers' perceived probabilities are uniform on [p_gamb - L, p_gamb + L];
/// kappa is the aggregate affluence of the whole population.
struct GamblerPopulation {
  Probability p_gamb;
  double L;
  double kappa;

  GamblerPopulation(Probability consensus, double half_width, double affluence)
      : p_gamb(consensus), L(half_width), kappa(affluence) {
    if (!(L > 0.0)) throw std::domain_error("GamblerPopulation: L must be > 0");
    if (!(kappa > 0.0))
      throw std::domain_error("GamblerPopulation: kappa must be > 0");
    if (p_gamb.value() - L < 0.0 || p_gamb.value() + L > 1.0)
      throw std::domain_error(
          "GamblerPopulation: [p_gamb - L, p_gamb + L] leaves [0,1]");
  }
};

/// Bid/ask pair on the probability scale.
struct SpreadInterval {
  Probability x1;
  Probability x2;

  SpreadInterval(Probability bid, Probability ask) : x1(bid), x2(ask) {
    if (!(x1.value() <= x2.value()))
      throw std::domain_error("SpreadInterval: bid must not exceed ask");
  }
};

struct BookmakerBelief {
  Probability p_book;
  double sigma;

  BookmakerBelief(Probability p, double s) : p_book(p), sigma(s) {
    if (!(sigma >= 0.0))
      throw std::domain_error("BookmakerBelief: sigma must be >= 0");
  }
};

namespace detail {

/// Mean gain to the bookmaker for arbitrary real coordinates, with
/// integration limits clipped to the gambler support.  Translation- and
/// scale-covariant: scaling all lengths by s multiplies the result by s^2.
inline double mean_gain_raw(double x1, double x2, double p_true, double p_gamb,
                            double L, double kappa) {
  const double lo = p_gamb - L;
  const double hi = p_gamb + L;
  double gain = 0.0;
  // Buy side: gamblers with perceived probability above x2.
  const double a = std::max(x2, lo);
  if (a < hi) {
    const double bh = hi - x2, bl = a - x2;
    gain += (x2 - p_true) * 0.5 * (bh * bh - bl * bl);
  }
  // Sell side: gamblers with perceived probability below x1.
  const double c = std::min(x1, hi);
  if (c > lo) {
    const double sh = x1 - lo, sl = x1 - c;
    gain += (p_true - x1) * 0.5 * (sh * sh - sl * sl);
  }
  return kappa / (2.0 * L) * gain;
}

}  // namespace detail

/// Two-term mean-gain functional; reduces to the unclipped expression when
/// [x1, x2] lies inside the gambler support.
inline double mean_gain(const SpreadInterval& spread, Probability p_true,
                        const GamblerPopulation& pop) {
  return detail::mean_gain_raw(spread.x1.value(), spread.x2.value(),
                               p_true.value(), pop.p_gamb.value(), pop.L,
                               pop.kappa);
}

/// Optimal interval when the bookmaker knows p_true:
/// [2/3 p + 1/3 (p_gamb -+ L)].
inline SpreadInterval optimal_spread_known_p(Probability p_true,
                                             const GamblerPopulation& pop) {
  const double p = p_true.value();
  const double g = pop.p_gamb.value();
  if (p < g - pop.L || p > g + pop.L)
    throw std::domain_error(
        "optimal_spread_known_p: p_true outside gambler support");
  return SpreadInterval(Probability(2.0 / 3.0 * p + (g - pop.L) / 3.0),
                        Probability(2.0 / 3.0 * p + (g + pop.L) / 3.0));
}

/// Gain at the optimal known-p interval: (2 kappa / 27)(L^2 + 3 Delta^2),
/// Delta = p_gamb - p_true.
inline double gain_known_p(double delta, double L, double kappa) {
  if (!(L > 0.0) || !(kappa > 0.0))
    throw std::domain_error("gain_known_p: L and kappa must be > 0");
  if (std::fabs(delta) > L)
    throw std::domain_error("gain_known_p: |delta| must not exceed L");
  return 2.0 * kappa / 27.0 * (L * L + 3.0 * delta * delta);
}

struct SymmetricOptimum {
  double half_width;
  double gain;
};

/// Best symmetric interval around the consensus: half-width L/3, gain
/// (2 kappa / 27) L^2.
inline SymmetricOptimum optimal_symmetric(const GamblerPopulation& pop) {
  return {pop.L / 3.0, 2.0 * pop.kappa / 27.0 * pop.L * pop.L};
}

/// Optimal half-width for a bookmaker with rms belief error sigma, assuming
/// unbiased gamblers.  For sigma > L/3 the objective y(L-y)^2 + (3y-2L)s^2
/// is increasing on [0, L]; the spread then covers the whole gambler range
/// (no bets, zero gain) and we return L.
inline double y_star(double sigma, double L) {
  if (!(sigma >= 0.0)) throw std::domain_error("y_star: sigma must be >= 0");
  if (!(L > 0.0)) throw std::domain_error("y_star: L must be > 0");
  const double u = sigma * sigma / (L * L);
  if (u > 1.0 / 9.0) return L;
  return L / 3.0 * (2.0 - std::sqrt(1.0 - 9.0 * u));
}

/// Normalized mean gain h(u) = (1 + (1-9u)^{3/2}) / 27 for u = sigma^2/L^2.
inline double h(double u) {
  if (!(u >= 0.0)) throw std::domain_error("h: u must be >= 0");
  if (u > 1.0 / 9.0 + 1e-15)
    throw std::domain_error(
        "h: u > 1/9 is outside the closed form; use simulate_bookmaker");
  const double t = std::max(0.0, 1.0 - 9.0 * u);
  return (1.0 + t * std::sqrt(t)) / 27.0;
}

/// Mean gain kappa h(sigma^2/L^2) L^2 for an unbiased-gambler market.
inline double expected_gain_noisy_book(double sigma,
                                       const GamblerPopulation& pop) {
  return pop.kappa * h(sigma * sigma / (pop.L * pop.L)) * pop.L * pop.L;
}

namespace detail {

/// Clipped gain, in units of kappa L^2, when the bookmaker centers the
/// y*-interval at p_book = p_true + xi while the gamblers sit at
/// p_gamb = p_true + r L.  Scale-free: evaluated at L = 1, kappa = 1.
inline double h_star_integrand_gain(double xi, double ystar, double r) {
  return mean_gain_raw(xi - ystar, xi + ystar, /*p_true=*/0.0, /*p_gamb=*/r,
                       /*L=*/1.0, /*kappa=*/1.0);
}

}  // namespace detail

/// Mismatch curve h*(u, r): expected clipped gain over xi ~ Normal(0, u L^2)
/// when the unbiased-gambler interval is used at gambler bias Delta = r L.
/// Exact quadrature over xi, not the second-order expansion.
inline double h_star(double u, double r, double abs_tol = 1e-8) {
  if (!(u >= 0.0)) throw std::domain_error("h_star: u must be >= 0");
  if (u > 1.0 / 9.0 + 1e-15)
    throw std::domain_error("h_star: u > 1/9 leaves the y* interval undefined");
  const double sigma = std::sqrt(u);
  const double ystar = y_star(sigma, 1.0);
  if (sigma == 0.0) return detail::h_star_integrand_gain(0.0, ystar, r);
  QuadratureSpec spec;
  spec.abs_tol = abs_tol;
  spec.rel_tol = abs_tol;
  const double w = 8.5 * sigma;
  return integrate(
      [&](double xi) {
        return normal_pdf(xi, sigma) *
               detail::h_star_integrand_gain(xi, ystar, r);
      },
      -w, w, spec);
}

/// Second-order-in-xi approximation of h*, matching the expansion used to
/// derive the closed form h.  Kept alongside the exact version because the
/// two differ once clipping matters.
inline double h_star_second_order(double u, double r) {
  if (!(u >= 0.0)) throw std::domain_error("h_star_second_order: u must be >= 0");
  if (u > 1.0 / 9.0 + 1e-15)
    throw std::domain_error("h_star_second_order: u > 1/9 is out of range");
  const double ystar = y_star(std::sqrt(u), 1.0);
  const double step = 1e-4;
  const double f0 = detail::h_star_integrand_gain(0.0, ystar, r);
  const double fp = detail::h_star_integrand_gain(step, ystar, r);
  const double fm = detail::h_star_integrand_gain(-step, ystar, r);
  const double second = (fp - 2.0 * f0 + fm) / (step * step);
  return f0 + 0.5 * u * second;
}

enum class Policy { KnownP, SymmetricConsensus, NoisyYStar };

/// Monte Carlo oracle: per replication, set the interval per policy, draw one
/// gambler's perceived probability uniformly, and settle analytically in
/// expectation (profit per contract uses p_true directly), which targets the
/// same mean as the closed forms with far less variance than Bernoulli
/// settlement.
inline MeanSE simulate_bookmaker(Probability p_true,
                                 const GamblerPopulation& pop,
                                 const BookmakerBelief& belief, Policy policy,
                                 std::uint64_t reps, const RngStream& stream) {
  const double p = p_true.value();
  const double g = pop.p_gamb.value();
  const double L = pop.L;
  const double kappa = pop.kappa;

  double fx1 = 0.0, fx2 = 0.0;  // fixed interval for non-noisy policies
  if (policy == Policy::KnownP) {
    const SpreadInterval s = optimal_spread_known_p(p_true, pop);
    fx1 = s.x1.value();
    fx2 = s.x2.value();
  } else if (policy == Policy::SymmetricConsensus) {
    fx1 = g - L / 3.0;
    fx2 = g + L / 3.0;
  }

  return run_replications(reps, stream, [&, p, g, L, kappa, fx1, fx2](RngStream& rng) {
    double x1 = fx1, x2 = fx2;
    if (policy == Policy::NoisyYStar) {
      const double p_book = p + rng.normal(belief.sigma);
      const double ys = y_star(belief.sigma, L);
      x1 = p_book - ys;
      x2 = p_book + ys;
    }
    const double perc = rng.uniform(g - L, g + L);
    if (perc > x2) return kappa * (perc - x2) * (x2 - p);
    if (perc < x1) return kappa * (x1 - perc) * (p - x1);
    return 0.0;
  });
}

}  // namespace gamble::bookmaker
