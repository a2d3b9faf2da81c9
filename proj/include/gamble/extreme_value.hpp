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

#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gamble/mc.hpp"
#include "gamble/poisson_process.hpp"
#include "gamble/quadrature.hpp"
#include "gamble/rng.hpp"
#include "gamble/special.hpp"

namespace gamble::extreme_value {

/// Item drawn from the intensity-e^-x process together with its noisy
/// perception y = x + xi.
struct PerceivedItem {
  double x_true;
  double y_perc;
};

/// One auction replication: sealed-bid profit is -xi of the winner,
/// Vickrey profit is winner_x minus the second-highest bid.
struct AuctionResult {
  double winner_x;
  double winner_bid;
  double second_bid;
  double profit_sealed;
  double profit_vickrey;
};

/// Mean gap between the two largest true utilities; exactly 1.
inline double mean_top_gap() { return 1.0; }

/// Self-check companion: quadrature of the gap integrand
/// e^-x exp(-e^-x) over the whole line, which evaluates to 1.
inline double top_gap_integral(const QuadratureSpec& spec = {}) {
  const double inf = std::numeric_limits<double>::infinity();
  return integrate(gumbel_pdf, -inf, inf, spec);
}

/// Monte Carlo mean of X_(1) - X_(2) via the spacings representation.
inline MeanSE simulate_top_gap(std::uint64_t reps, const RngStream& stream) {
  return run_replications(reps, stream, [](RngStream& rng) {
    const double g1 = rng.exponential();
    const double g2 = g1 + rng.exponential();
    return std::log(g2) - std::log(g1);
  });
}

/// Truncation depth: items more than ~8 sigma below the perceived-
/// competitive region win with negligible probability under Normal noise.
inline double default_stop_gap(double sigma) { return 8.0 * sigma + 8.0; }

/// Mean cost X_(1) - X_chosen of picking the item with the largest
/// perceived utility under Normal(0, sigma^2) perception noise.
inline MeanSE simulate_choice_cost(double sigma, std::uint64_t reps,
                                   const RngStream& stream,
                                   double stop_gap = 0.0) {
  if (!(sigma >= 0.0))
    throw std::domain_error("simulate_choice_cost: sigma must be >= 0");
  if (stop_gap == 0.0) stop_gap = default_stop_gap(sigma);
  return run_replications(reps, stream, [sigma, stop_gap](RngStream& rng) {
    thread_local std::vector<double> buf;
    sample_poisson_descending(rng, stop_gap, buf);
    const double x1 = buf[0];
    double best_y = -std::numeric_limits<double>::infinity();
    double best_x = x1;
    for (const double x : buf) {
      const double y = sigma == 0.0 ? x : x + rng.normal(sigma);
      if (y > best_y) {
        best_y = y;
        best_x = x;
      }
    }
    return x1 - best_x;
  });
}

/// One auction under the same sampling scheme.  If the truncated process
/// retains a single point, the runner-up is drawn exactly from its
/// conditional law (Gamma_2 = e^{-floor} + Exp by memorylessness).
inline AuctionResult auction_once(double sigma, RngStream& rng,
                                  double stop_gap) {
  thread_local std::vector<double> buf;
  sample_poisson_descending(rng, stop_gap, buf);
  if (buf.size() < 2) {
    const double floor_x = buf[0] - stop_gap;
    buf.push_back(-std::log(std::exp(-floor_x) + rng.exponential()));
  }
  double m1 = -std::numeric_limits<double>::infinity();
  double m2 = m1;
  double winner_x = 0.0, winner_xi = 0.0;
  for (const double x : buf) {
    const double xi = sigma == 0.0 ? 0.0 : rng.normal(sigma);
    const double y = x + xi;
    if (y > m1) {
      m2 = m1;
      m1 = y;
      winner_x = x;
      winner_xi = xi;
    } else if (y > m2) {
      m2 = y;
    }
  }
  assert(m1 >= m2);
  return {winner_x, m1, m2, -winner_xi, winner_x - m2};
}

struct AuctionSummary {
  double mean_sealed;
  double se_sealed;
  double mean_vickrey;
  double se_vickrey;
};

/// Mean profits of both auction protocols.  Blocked like run_replications
/// so results are independent of any parallel split.
inline AuctionSummary simulate_auction(double sigma, std::uint64_t reps,
                                       const RngStream& stream,
                                       double stop_gap = 0.0) {
  if (!(sigma >= 0.0))
    throw std::domain_error("simulate_auction: sigma must be >= 0");
  if (reps < 1) throw std::domain_error("simulate_auction: reps must be >= 1");
  if (stop_gap == 0.0) stop_gap = default_stop_gap(sigma);
  constexpr std::uint64_t kBlock = 65536;
  double ss = 0.0, ss2 = 0.0, vs = 0.0, vs2 = 0.0;
  const std::uint64_t n_blocks = (reps + kBlock - 1) / kBlock;
  for (std::uint64_t k = 0; k < n_blocks; ++k) {
    RngStream sub = stream.substream(k);
    const std::uint64_t hi = std::min(reps, (k + 1) * kBlock);
    for (std::uint64_t i = k * kBlock; i < hi; ++i) {
      const AuctionResult r = auction_once(sigma, sub, stop_gap);
      ss += r.profit_sealed;
      ss2 += r.profit_sealed * r.profit_sealed;
      vs += r.profit_vickrey;
      vs2 += r.profit_vickrey * r.profit_vickrey;
    }
  }
  const MeanSE sealed = gamble::detail::finish_moments(ss, ss2, reps);
  const MeanSE vick = gamble::detail::finish_moments(vs, vs2, reps);
  return {sealed.mean, sealed.std_error, vick.mean, vick.std_error};
}

namespace detail {

/// Expected number of process points below x with perceived value above y:
/// B(x, y) = Int_{-inf}^{x} e^-u (1 - Phi_sigma(y - u)) du, in closed form.
/// A(x, y) is the same integral against phi_sigma instead.
inline double exceeder_mass_density(double x, double y, double sigma) {
  // A(x,y) = e^{sigma^2/2 - y} Phi((x - y + sigma^2)/sigma)
  const double c = normal_cdf((x - y + sigma * sigma) / sigma);
  return c == 0.0 ? 0.0 : std::exp(0.5 * sigma * sigma - y) * c;
}

inline double exceeder_mass(double x, double y, double sigma) {
  const double a = exceeder_mass_density(x, y, sigma);
  const double tail = 1.0 - normal_cdf((y - x) / sigma);
  const double b = a - std::exp(-x) * tail;
  return b > 0.0 ? b : 0.0;
}

}  // namespace detail

/// Mean choice cost by direct evaluation of the conditional triple integral:
/// outer over the top utility x1 against the Gumbel density, middle over the
/// threshold x separating "deep" items, inner over the deep maximum y with
/// the closed-form exceeder exponentials.  The nested tolerance budget
/// splits spec.abs_tol geometrically across the three levels.
inline double choice_cost_integral(double sigma, const QuadratureSpec& spec) {
  if (!(sigma > 0.0))
    throw std::domain_error("choice_cost_integral: sigma must be > 0");

  QuadratureSpec mid = spec;
  mid.abs_tol = spec.abs_tol * 1e-1;
  mid.rel_tol = 1e-7;
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol * 1e-2;
  inner.rel_tol = 1e-7;

  // Effective supports: the top item's perceived value ties y to x1 within
  // ~8 sigma; the deep maximum reaches y only from x within ~16 sigma.
  const double y_half = 8.0 * sigma + 1.0;
  const double x_depth = 16.0 * sigma + sigma * sigma + 3.0;

  auto cost_given_top = [&](double x1) {
    auto prob_chosen_below = [&](double x) {
      auto integrand = [&](double y) {
        const double top_below = normal_cdf((y - x1) / sigma);
        if (top_below == 0.0) return 0.0;
        const double b_deep = detail::exceeder_mass(x, y, sigma);
        const double b_all = detail::exceeder_mass(x1, y, sigma);
        const double mid_below = std::exp(-std::max(0.0, b_all - b_deep));
        const double deep_density = std::exp(-b_deep) *
                                    detail::exceeder_mass_density(x, y, sigma);
        return top_below * mid_below * deep_density;
      };
      return integrate(integrand, x1 - y_half, x1 + y_half, inner);
    };
    return integrate(prob_chosen_below, x1 - x_depth, x1, mid);
  };

  return integrate([&](double x1) { return gumbel_pdf(x1) * cost_given_top(x1); },
                   -4.0, 30.0, spec);
}

}  // namespace gamble::extreme_value
