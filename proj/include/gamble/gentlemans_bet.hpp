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
#include "gamble/rng.hpp"

namespace gamble::gentlemans_bet {

/// Two-person bet at the midpoint price.  kappa converts perceived edge to
/// number of contracts.
struct TwoPersonBet {
  Probability q_A;
  Probability q_B;
  Probability p_true;
  double kappa = 1.0;

  TwoPersonBet(Probability qa, Probability qb, Probability p, double k)
      : q_A(qa), q_B(qb), p_true(p), kappa(k) {
    if (!(kappa > 0.0)) throw std::domain_error("TwoPersonBet: kappa must be > 0");
  }
};

inline Probability mid_price(Probability q_A, Probability q_B) {
  return Probability(0.5 * (q_A.value() + q_B.value()));
}

/// Per-bet mean gain to A: kappa (q_A - r)(p - r) with r the midpoint.
/// Holds for both buying (q_A > q_B) and selling (q_A < q_B).
inline double mean_gain_A(const TwoPersonBet& bet) {
  const double r = 0.5 * (bet.q_A.value() + bet.q_B.value());
  return bet.kappa * (bet.q_A.value() - r) * (bet.p_true.value() - r);
}

inline double mean_gain_B(const TwoPersonBet& bet) { return -mean_gain_A(bet); }

/// Expected gain to A under unbiased perception errors:
/// (kappa/4)(sigma_B^2 - sigma_A^2), regardless of error dependence.
inline double expected_gain_analytic(double sigma_A, double sigma_B,
                                     double kappa) {
  if (!(sigma_A >= 0.0) || !(sigma_B >= 0.0))
    throw std::domain_error("expected_gain_analytic: sigmas must be >= 0");
  if (!(kappa > 0.0))
    throw std::domain_error("expected_gain_analytic: kappa must be > 0");
  return 0.25 * kappa * (sigma_B * sigma_B - sigma_A * sigma_A);
}

namespace detail {

/// P(p_true + xi leaves [0,1]) under the model.
inline double clamp_probability(double p_true, const ErrorModel& model) {
  if (model.scale == 0.0) return 0.0;
  return model.cdf(-p_true) + (1.0 - model.cdf(1.0 - p_true));
}

inline void check_clamp_margin(double p_true, const ErrorModel& model) {
  // Reject rather than truncate: truncation would break E[xi] = 0.
  if (clamp_probability(p_true, model) >= 1e-6)
    throw std::domain_error(
        "simulate_expected_gain: clamp probability of p_true + xi is not "
        "negligible (>= 1e-6); the unbiasedness assumption would break");
}

}  // namespace detail

/// Monte Carlo oracle for the expected-gain identity.  `correlation` couples
/// the two errors through a Gaussian copula (0 = independent); the identity
/// is claimed to hold for dependent errors too.
inline MeanSE simulate_expected_gain(Probability p_true,
                                     const ErrorModel& model_A,
                                     const ErrorModel& model_B, double kappa,
                                     std::uint64_t reps, const RngStream& stream,
                                     double correlation = 0.0) {
  if (!(kappa > 0.0))
    throw std::domain_error("simulate_expected_gain: kappa must be > 0");
  if (!(correlation > -1.0 && correlation < 1.0))
    throw std::domain_error("simulate_expected_gain: correlation outside (-1,1)");
  detail::check_clamp_margin(p_true.value(), model_A);
  detail::check_clamp_margin(p_true.value(), model_B);
  const double p = p_true.value();
  const double rho = correlation;
  const double rho_c = std::sqrt(1.0 - rho * rho);
  return run_replications(reps, stream, [&, p](RngStream& rng) {
    double xi_a, xi_b;
    if (rho == 0.0) {
      xi_a = model_A.sample(rng);
      xi_b = model_B.sample(rng);
    } else {
      const double z1 = rng.normal();
      const double z2 = rho * z1 + rho_c * rng.normal();
      xi_a = model_A.quantile(normal_cdf(z1));
      xi_b = model_B.quantile(normal_cdf(z2));
    }
    const double qa = std::clamp(p + xi_a, 0.0, 1.0);
    const double qb = std::clamp(p + xi_b, 0.0, 1.0);
    const double r = 0.5 * (qa + qb);
    return kappa * (qa - r) * (p - r);
  });
}

}  // namespace gamble::gentlemans_bet
