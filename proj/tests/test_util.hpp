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
#include <array>
#include <cmath>
#include <functional>

namespace gamble_test {

/// Independent 2-D maximizer (Nelder-Mead) used to cross-check closed-form
/// optima without relying on any library derivative information.
inline std::array<double, 2> maximize_2d(
    const std::function<double(double, double)>& f, double x0, double y0,
    double step = 0.05, int iters = 4000) {
  auto neg = [&](const std::array<double, 2>& p) { return -f(p[0], p[1]); };
  std::array<std::array<double, 2>, 3> simplex = {
      {{x0, y0}, {x0 + step, y0}, {x0, y0 + step}}};
  std::array<double, 3> val = {neg(simplex[0]), neg(simplex[1]),
                               neg(simplex[2])};
  for (int it = 0; it < iters; ++it) {
    // Order best -> worst.
    std::array<int, 3> idx = {0, 1, 2};
    std::sort(idx.begin(), idx.end(),
              [&](int a, int b) { return val[a] < val[b]; });
    const auto best = simplex[idx[0]];
    const auto good = simplex[idx[1]];
    const auto worst = simplex[idx[2]];
    const std::array<double, 2> centroid = {(best[0] + good[0]) / 2.0,
                                            (best[1] + good[1]) / 2.0};
    auto along = [&](double t) -> std::array<double, 2> {
      return {centroid[0] + t * (centroid[0] - worst[0]),
              centroid[1] + t * (centroid[1] - worst[1])};
    };
    const auto refl = along(1.0);
    const double fr = neg(refl);
    std::array<double, 2> candidate = refl;
    double fc = fr;
    if (fr < val[idx[0]]) {
      const auto exp_p = along(2.0);
      const double fe = neg(exp_p);
      if (fe < fr) {
        candidate = exp_p;
        fc = fe;
      }
    } else if (fr >= val[idx[1]]) {
      const auto con = along(-0.5);
      const double fcon = neg(con);
      if (fcon < val[idx[2]]) {
        candidate = con;
        fc = fcon;
      } else {
        // Shrink toward the best vertex.
        for (int k : {idx[1], idx[2]}) {
          simplex[k] = {0.5 * (simplex[k][0] + best[0]),
                        0.5 * (simplex[k][1] + best[1])};
          val[k] = neg(simplex[k]);
        }
        continue;
      }
    }
    simplex[idx[2]] = candidate;
    val[idx[2]] = fc;
    const double spread =
        std::fabs(val[idx[2]] - val[idx[0]]) +
        std::fabs(simplex[idx[2]][0] - simplex[idx[0]][0]) +
        std::fabs(simplex[idx[2]][1] - simplex[idx[0]][1]);
    if (spread < 1e-14) break;
  }
  std::array<int, 3> idx = {0, 1, 2};
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return val[a] < val[b]; });
  return simplex[idx[0]];
}

}  // namespace gamble_test
