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
#include <variant>

#include "gamble/error_model.hpp"
#include "gamble/mc.hpp"
#include "gamble/quadrature.hpp"
#include "gamble/rng.hpp"

namespace gamble::duel {

/// Hit probability at distance x for accuracy parameter rho:
/// p(x) = min(rho/x, 1).
inline double hit_prob(double rho, double x) {
  if (!(x > 0.0)) throw std::domain_error("hit_prob: distance must be > 0");
  return std::min(rho / x, 1.0);
}

namespace detail {

inline void check_rho(double rho_A, double rho_B) {
  if (!(rho_A > 1.0) || !(rho_B > 1.0))
    throw std::domain_error("duel: accuracy parameters must be > 1");
}

}  // namespace detail

/// Distance where both fire: the solution of p_A(x) + p_B(x) = 1, which for
/// rho/x curves is simply rho_A + rho_B.
inline double crossing_distance(double rho_A, double rho_B) {
  detail::check_rho(rho_A, rho_B);
  return rho_A + rho_B;
}

/// Bisection fallback for general monotone nonincreasing hit curves.
inline double crossing_distance_general(
    const std::function<double(double)>& p_A,
    const std::function<double(double)>& p_B, double lo, double hi,
    double tol = 1e-12) {
  if (!(lo > 0.0 && hi > lo))
    throw std::domain_error("crossing_distance_general: need 0 < lo < hi");
  auto excess = [&](double x) { return p_A(x) + p_B(x) - 1.0; };
  double flo = excess(lo), fhi = excess(hi);
  if (flo < 0.0 || fhi > 0.0)
    throw std::domain_error(
        "crossing_distance_general: root not bracketed by [lo, hi]");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Known-ability win probability: rho_A / (rho_A + rho_B).
inline double win_prob_known(double rho_A, double rho_B) {
  detail::check_rho(rho_A, rho_B);
  return rho_A / (rho_A + rho_B);
}

/// Log-skill conversion: win_prob_known equals
/// logistic(log_skill(rho_A) - log_skill(rho_B)).  Note the additive noise
/// model is not preserved by this re-parametrization.
inline double log_skill(double rho) {
  if (!(rho > 0.0)) throw std::domain_error("log_skill: rho must be > 0");
  return std::log(rho);
}

/// Probability that A wins given both perception errors.  xi_A is A's error
/// about B's ability, so A plans distance rho_A + rho_B + xi_A; whoever
/// plans the larger distance shoots first.  Ties go to the xi_A branch.
inline double duel_outcome_prob(double rho_A, double rho_B, double xi_A,
                                double xi_B) {
  detail::check_rho(rho_A, rho_B);
  const double base = rho_A + rho_B;
  if (!(base + std::max(xi_A, xi_B) > 0.0))
    throw std::domain_error("duel_outcome_prob: planned distance not positive");
  if (xi_A >= xi_B) return rho_A / (base + xi_A);
  return 1.0 - rho_B / (base + xi_B);
}

enum class Method { Quadrature, MonteCarlo };

namespace detail {

inline void check_noise(double base, const ErrorModel& m) {
  if (!(base - m.support_bound() > 0.0))
    throw std::domain_error(
        "expected_win_prob: noise scale too large, planned distance can "
        "become non-positive");
}

}  // namespace detail

/// Expectation of duel_outcome_prob over independent (xi_A, xi_B).
/// Quadrature splits on which error is larger:
///   E = Int f_A(a) F_B(a) rho_A/(S+a) da + Int f_B(b) F_A(b) (1 - rho_B/(S+b)) db.
inline MeanSE expected_win_prob(double rho_A, double rho_B,
                                const ErrorModel& noise_A,
                                const ErrorModel& noise_B, Method method,
                                std::uint64_t reps, const RngStream& stream,
                                const QuadratureSpec& spec = {}) {
  detail::check_rho(rho_A, rho_B);
  const double base = rho_A + rho_B;
  detail::check_noise(base, noise_A);
  detail::check_noise(base, noise_B);

  if (method == Method::MonteCarlo) {
    return run_replications(reps, stream, [&](RngStream& rng) {
      return duel_outcome_prob(rho_A, rho_B, noise_A.sample(rng),
                               noise_B.sample(rng));
    });
  }

  if (noise_A.scale == 0.0 && noise_B.scale == 0.0)
    return {win_prob_known(rho_A, rho_B), 0.0};

  double total = 0.0;
  if (noise_A.scale == 0.0) {
    // A's plan is fixed at the crossing distance; B shoots first iff xi_B > 0.
    total += noise_B.cdf(0.0) * rho_A / base;
    const double wb = noise_B.support_bound();
    total += integrate(
        [&](double b) {
          return noise_B.pdf(b) * (1.0 - rho_B / (base + b));
        },
        0.0, wb, spec);
  } else if (noise_B.scale == 0.0) {
    total += noise_A.cdf(0.0) * (1.0 - rho_B / base);
    const double wa = noise_A.support_bound();
    total += integrate(
        [&](double a) { return noise_A.pdf(a) * rho_A / (base + a); }, 0.0, wa,
        spec);
  } else {
    const double wa = noise_A.support_bound();
    const double wb = noise_B.support_bound();
    total += integrate(
        [&](double a) {
          return noise_A.pdf(a) * noise_B.cdf(a) * rho_A / (base + a);
        },
        -wa, wa, spec);
    total += integrate(
        [&](double b) {
          return noise_B.pdf(b) * noise_A.cdf(b) * (1.0 - rho_B / (base + b));
        },
        -wb, wb, spec);
  }
  return {total, 0.0};
}

}  // namespace gamble::duel
