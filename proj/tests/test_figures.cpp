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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gamble/figures.hpp"
#include "gamble/svg.hpp"

using namespace gamble;
using namespace gamble::figures;

namespace {

// Parses the numeric cells of one CSV column (0-based), skipping comments
// and the header.
std::vector<double> column(const std::string& csv, std::size_t idx) {
  std::vector<double> out;
  std::istringstream in(csv);
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::istringstream ls(line);
    std::string cell;
    for (std::size_t i = 0; std::getline(ls, cell, ','); ++i)
      if (i == idx) out.push_back(std::stod(cell));
  }
  return out;
}

}  // namespace

TEST_CASE("figure CSVs are deterministic and carry the metadata header") {
  const std::vector<double> grid = {0.0, 0.2, 0.4};
  CHECK(fig5(grid, 50, 99) == fig5(grid, 50, 99));
  CHECK(fig6(grid, 50, 99) == fig6(grid, 50, 99));
  CHECK(fig2_left(fig2_left_default_grid()) ==
        fig2_left(fig2_left_default_grid()));
  for (const std::string& csv :
       {fig5(grid, 50, 99), fig2_left({0.0, 0.1}),
        fig3({0.5}, {0.0, 1.0}), fig4({0.1}, {0.0, 0.1})}) {
    CHECK(csv.rfind("# seed=", 0) == 0);
    CHECK(csv.find(" reps=") != std::string::npos);
    CHECK(csv.find(" version=") != std::string::npos);
    CHECK(csv.find(" params=") != std::string::npos);
  }
  // Different seeds give different Monte Carlo columns.
  CHECK(fig5(grid, 50, 99) != fig5(grid, 50, 100));
}

TEST_CASE("bookmaker gain curve: endpoints and monotone decay") {
  const std::string csv = fig2_left(fig2_left_default_grid());
  const std::vector<double> h = column(csv, 1);
  REQUIRE(h.size() == 45);
  CHECK(h.front() == doctest::Approx(2.0 / 27.0).epsilon(1e-9));
  CHECK(h.back() == doctest::Approx(1.0 / 27.0).epsilon(1e-9));
  for (std::size_t i = 1; i < h.size(); ++i) CHECK(h[i] < h[i - 1]);
}

TEST_CASE("bookmaker mismatch curves: symmetry and the accuracy penalty") {
  const std::vector<double> r_grid = figures::detail::linspace(-1.0, 1.0, 21);
  const std::string csv = fig2_right(fig2_right_default_u(), r_grid);
  const std::vector<double> u0 = column(csv, 1);
  const std::vector<double> u1 = column(csv, 3);
  REQUIRE(u0.size() == 21);
  // u = 0 at r = 0 is the clean optimum 2/27; u > 0 pays a penalty there.
  CHECK(u0[10] == doctest::Approx(2.0 / 27.0).epsilon(1e-7));
  CHECK(u1[10] < u0[10]);
  // Both exact and second-order columns are symmetric in r.
  for (std::size_t i = 0; i < u0.size(); ++i) {
    CHECK(u0[i] == doctest::Approx(u0[20 - i]).epsilon(1e-7));
    CHECK(u1[i] == doctest::Approx(u1[20 - i]).epsilon(1e-7));
  }
}

TEST_CASE("skill-game curves: zero crossing and growth in opponent error") {
  const std::vector<double> sb = figures::detail::linspace(0.0, 2.0, 21);
  const std::string csv = fig3({0.5}, sb);
  const std::vector<double> gain = column(csv, 1);
  REQUIRE(gain.size() == 21);
  // Crosses zero at sigma_B = sigma_A = 0.5 (grid index 5).
  CHECK(std::fabs(gain[5]) < 1e-9);
  CHECK(gain[2] < 0.0);
  for (std::size_t i = 6; i < gain.size(); ++i) CHECK(gain[i] > gain[i - 1]);
}

TEST_CASE("kelly growth curves: noiseless column is max(0, 2 delta^2)") {
  const std::vector<double> deltas = figures::detail::linspace(-0.1, 0.1, 11);
  const std::string csv = fig4({0.0, 0.05}, deltas);
  const std::vector<double> clean = column(csv, 1);
  const std::vector<double> noisy = column(csv, 2);
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double expect = deltas[i] > 0.0 ? 2.0 * deltas[i] * deltas[i] : 0.0;
    CHECK(clean[i] == doctest::Approx(expect).epsilon(1e-9));
    CHECK(noisy[i] < clean[i] + 1e-12);  // noise never helps
  }
}

TEST_CASE("monte carlo figures: column layout and basic sanity") {
  const std::string f5 = fig5({0.0, 0.3}, 400, 11);
  const std::vector<double> cost = column(f5, 1);
  REQUIRE(cost.size() == 2);
  CHECK(cost[0] == 0.0);
  CHECK(cost[1] > 0.0);

  const std::string f6 = fig6({0.0}, 2000, 11);
  const std::vector<double> sealed = column(f6, 1);
  const std::vector<double> vick = column(f6, 3);
  const std::vector<double> vick_se = column(f6, 4);
  REQUIRE(sealed.size() == 1);
  CHECK(sealed[0] == 0.0);
  CHECK(std::fabs(vick[0] - 1.0) < 3.0 * vick_se[0]);
}

TEST_CASE("svg rendering: polylines for data columns, none for se columns") {
  const std::string csv =
      "# seed=1 reps=2 version=x params=y\n"
      "x,value,se\n"
      "0,1,0.1\n"
      "1,2,0.1\n";
  const std::string svg = gamble::svg::line_plot_from_csv(csv, "demo");
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("demo") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
  // Exactly one polyline: the se column is skipped.
  CHECK(svg.find("polyline", svg.find("polyline") + 1) == std::string::npos);
}
