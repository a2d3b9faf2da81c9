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

#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "gamble/bookmaker.hpp"
#include "gamble/extreme_value.hpp"
#include "gamble/kelly.hpp"
#include "gamble/rng.hpp"
#include "gamble/skill_game.hpp"
#include "gamble/version.hpp"

// Figure CSV generation.  Output is RFC-4180 style with '.' decimals, nine
// significant digits, one header row, and a '#'-prefixed reproducibility
// comment, so identical (params, seed, reps) give byte-identical files.

namespace gamble::figures {

namespace detail {

inline std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

inline void meta_line(std::ostringstream& os, std::uint64_t seed,
                      std::uint64_t reps, const std::string& params) {
  os << "# seed=" << seed << " reps=" << reps << " version=" << kVersion
     << " params=" << params << "\n";
}

inline std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i)
    v.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
  return v;
}

// Fixed per-figure stream ids so figures never share random streams.
inline constexpr std::uint64_t kFig5Stream = 500;
inline constexpr std::uint64_t kFig6Stream = 600;

}  // namespace detail

/// h(u) curve: bookmaker gain vs. normalized error, unbiased gamblers.
inline std::string fig2_left(const std::vector<double>& u_grid) {
  std::ostringstream os;
  detail::meta_line(os, 0, 0, "u_grid[" + std::to_string(u_grid.size()) + "]");
  os << "u,h\n";
  for (const double u : u_grid)
    os << detail::num(u) << "," << detail::num(bookmaker::h(u)) << "\n";
  return os.str();
}

inline std::vector<double> fig2_left_default_grid() {
  return detail::linspace(0.0, 1.0 / 9.0, 45);
}

/// h*(u, r) curves vs. gambler bias r, one pair of columns per u (exact
/// quadrature and the second-order expansion).
inline std::string fig2_right(const std::vector<double>& u_values,
                              const std::vector<double>& r_grid) {
  std::ostringstream os;
  detail::meta_line(os, 0, 0,
                    "u[" + std::to_string(u_values.size()) + "] r_grid[" +
                        std::to_string(r_grid.size()) + "]");
  os << "r";
  for (const double u : u_values)
    os << ",h_star_u=" << detail::num(u) << ",h_star2_u=" << detail::num(u);
  os << "\n";
  for (const double r : r_grid) {
    os << detail::num(r);
    for (const double u : u_values)
      os << "," << detail::num(bookmaker::h_star(u, r)) << ","
         << detail::num(bookmaker::h_star_second_order(u, r));
    os << "\n";
  }
  return os.str();
}

inline std::vector<double> fig2_right_default_u() { return {0.0, 1.0 / 36.0, 2.0 / 36.0}; }
inline std::vector<double> fig2_right_default_r() { return detail::linspace(-1.0, 1.0, 41); }

/// Gain rate to A vs. opponent error, one column per sigma_A.
inline std::string fig3(const std::vector<double>& sigma_A_values,
                        const std::vector<double>& sigma_B_grid) {
  std::ostringstream os;
  detail::meta_line(os, 0, 0,
                    "sigma_A[" + std::to_string(sigma_A_values.size()) +
                        "] sigma_B_grid[" + std::to_string(sigma_B_grid.size()) +
                        "]");
  os << "sigma_B";
  for (const double sa : sigma_A_values) os << ",gain_sA=" << detail::num(sa);
  os << "\n";
  QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  spec.rel_tol = 1e-10;
  for (const double sb : sigma_B_grid) {
    os << detail::num(sb);
    for (const double sa : sigma_A_values) {
      const skill_game::SkillPerception perc(sa, sb);
      os << ","
         << detail::num(sa == 0.0 && sb == 0.0
                            ? 0.0
                            : skill_game::expected_gain(perc, spec));
    }
    os << "\n";
  }
  return os.str();
}

inline std::vector<double> fig3_default_sigma_A() { return {0.25, 0.5, 1.0}; }
inline std::vector<double> fig3_default_sigma_B() { return detail::linspace(0.0, 2.0, 41); }

/// Kelly expected growth vs. true edge delta, one column per sigma.
inline std::string fig4(const std::vector<double>& sigma_values,
                        const std::vector<double>& delta_grid) {
  std::ostringstream os;
  detail::meta_line(os, 0, 0,
                    "sigma[" + std::to_string(sigma_values.size()) +
                        "] delta_grid[" + std::to_string(delta_grid.size()) +
                        "]");
  os << "delta";
  for (const double s : sigma_values) os << ",growth_sigma=" << detail::num(s);
  os << "\n";
  for (const double d : delta_grid) {
    os << detail::num(d);
    for (const double s : sigma_values)
      os << "," << detail::num(kelly::expected_growth(kelly::KellySetting(d, s)));
    os << "\n";
  }
  return os.str();
}

inline std::vector<double> fig4_default_sigma() { return {0.0, 0.025, 0.05, 0.1}; }
inline std::vector<double> fig4_default_delta() { return detail::linspace(-0.15, 0.15, 61); }

/// Mean choice cost vs. sigma (Monte Carlo, standard errors alongside).
inline std::string fig5(const std::vector<double>& sigma_grid,
                        std::uint64_t reps, std::uint64_t seed) {
  std::ostringstream os;
  detail::meta_line(os, seed, reps,
                    "sigma_grid[" + std::to_string(sigma_grid.size()) + "]");
  os << "sigma,mean_cost,se\n";
  const RngStream base(seed, detail::kFig5Stream);
  for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
    const MeanSE r =
        extreme_value::simulate_choice_cost(sigma_grid[i], reps,
                                            base.substream(i));
    os << detail::num(sigma_grid[i]) << "," << detail::num(r.mean) << ","
       << detail::num(r.std_error) << "\n";
  }
  return os.str();
}

inline std::vector<double> fig5_default_sigma() { return detail::linspace(0.0, 1.0, 11); }

/// Mean auction gains vs. sigma for both protocols.
inline std::string fig6(const std::vector<double>& sigma_grid,
                        std::uint64_t reps, std::uint64_t seed) {
  std::ostringstream os;
  detail::meta_line(os, seed, reps,
                    "sigma_grid[" + std::to_string(sigma_grid.size()) + "]");
  os << "sigma,mean_sealed,se_sealed,mean_vickrey,se_vickrey\n";
  const RngStream base(seed, detail::kFig6Stream);
  for (std::size_t i = 0; i < sigma_grid.size(); ++i) {
    const extreme_value::AuctionSummary r =
        extreme_value::simulate_auction(sigma_grid[i], reps, base.substream(i));
    os << detail::num(sigma_grid[i]) << "," << detail::num(r.mean_sealed) << ","
       << detail::num(r.se_sealed) << "," << detail::num(r.mean_vickrey) << ","
       << detail::num(r.se_vickrey) << "\n";
  }
  return os.str();
}

inline std::vector<double> fig6_default_sigma() { return detail::linspace(0.0, 1.0, 11); }

}  // namespace gamble::figures
