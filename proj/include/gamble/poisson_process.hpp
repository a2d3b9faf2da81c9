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
#include <stdexcept>
#include <vector>

#include "gamble/rng.hpp"

namespace gamble {

/// Samples the descending points of the Poisson process with intensity
/// e^-x via the spacings representation e^-X_(k) = Gamma_k, where Gamma_k
/// is a running sum of unit-rate exponentials.  Generation stops at the
/// first point deeper than stop_gap below the maximum; `out` receives all
/// points above X_(1) - stop_gap, in descending order.
inline void sample_poisson_descending(RngStream& stream, double stop_gap,
                                      std::vector<double>& out) {
  if (!(stop_gap > 0.0))
    throw std::domain_error("sample_poisson_descending: stop_gap must be > 0");
  out.clear();
  double gamma = stream.exponential();
  const double x1 = -std::log(gamma);
  const double floor_x = x1 - stop_gap;
  // Points above floor_x have e^-x < e^-floor_x, i.e. gamma < gamma_max.
  const double gamma_max = std::exp(-floor_x);
  out.push_back(x1);
  for (;;) {
    gamma += stream.exponential();
    if (gamma >= gamma_max) break;
    out.push_back(-std::log(gamma));
  }
}

inline std::vector<double> sample_poisson_descending(RngStream& stream,
                                                     double stop_gap) {
  std::vector<double> out;
  sample_poisson_descending(stream, stop_gap, out);
  return out;
}

}  // namespace gamble
