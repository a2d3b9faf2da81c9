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
#include <limits>
#include <vector>

#include "doctest.h"
#include "gamble/error_model.hpp"
#include "gamble/mc.hpp"
#include "gamble/poisson_process.hpp"
#include "gamble/quadrature.hpp"
#include "gamble/rng.hpp"
#include "gamble/special.hpp"

using namespace gamble;

TEST_CASE("rng: identical keys reproduce the sequence, different keys diverge") {
  RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
  bool all_equal = true, c_differs = false, d_differs = false;
  for (int i = 0; i < 64; ++i) {
    const std::uint64_t va = a.next_u64();
    all_equal &= va == b.next_u64();
    c_differs |= va != c.next_u64();
    d_differs |= va != d.next_u64();
  }
  CHECK(all_equal);
  CHECK(c_differs);
  CHECK(d_differs);
}

TEST_CASE("rng: substream derivation is pure and collision-free on a range") {
  RngStream base(1, 2);
  CHECK(base.substream(5).stream_id() == base.substream(5).stream_id());
  std::vector<std::uint64_t> ids;
  for (std::uint64_t k = 0; k < 1000; ++k)
    ids.push_back(base.substream(k).stream_id());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      REQUIRE(ids[i] != ids[j]);
}

TEST_CASE("rng: uniform01 lies in (0,1] and has the right first moments") {
  RngStream s(9, 0);
  double sum = 0.0, sum2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double u = s.uniform01();
    REQUIRE(u > 0.0);
    REQUIRE(u <= 1.0);
    sum += u;
    sum2 += u * u;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
  CHECK(sum2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.01));
}

TEST_CASE("rng: normal and exponential match their first two moments") {
  RngStream s(9, 1);
  const int n = 200000;
  double ns = 0.0, ns2 = 0.0, es = 0.0, es2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double z = s.normal();
    ns += z;
    ns2 += z * z;
    const double e = s.exponential();
    es += e;
    es2 += e * e;
  }
  CHECK(ns / n == doctest::Approx(0.0).epsilon(0.01));
  CHECK(std::fabs(ns / n) < 3.0 / std::sqrt(static_cast<double>(n)));
  CHECK(ns2 / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(es / n == doctest::Approx(1.0).epsilon(0.02));
  CHECK(es2 / n == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("special: normal cdf/pdf/quantile reference values") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  // Phi(1) from the complementary error function, 12 digits.
  CHECK(normal_cdf(1.0) == doctest::Approx(0.841344746069).epsilon(1e-11));
  CHECK(normal_cdf(-1.0) + normal_cdf(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(normal_pdf(0.0) == doctest::Approx(0.398942280401).epsilon(1e-11));
  CHECK(normal_cdf(2.0, 2.0) == doctest::Approx(normal_cdf(1.0)).epsilon(1e-13));
  for (double u : {1e-6, 0.025, 0.5, 0.77, 1.0 - 1e-6})
    CHECK(normal_cdf(normal_quantile(u)) == doctest::Approx(u).epsilon(1e-9));
}

TEST_CASE("special: gumbel cdf/pdf and logistic") {
  CHECK(gumbel_cdf(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  // pdf is the derivative of the cdf (finite-difference check).
  const double h = 1e-6;
  CHECK(gumbel_pdf(0.3) ==
        doctest::Approx((gumbel_cdf(0.3 + h) - gumbel_cdf(0.3 - h)) / (2 * h))
            .epsilon(1e-6));
  CHECK(logistic(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(logistic(710.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(logistic(-710.0) == doctest::Approx(0.0).epsilon(1e-300));
  CHECK(logistic(2.0) + logistic(-2.0) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("quadrature: exact polynomials, infinite limits, and tails") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  const double inf = std::numeric_limits<double>::infinity();
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, inf) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(integrate([](double x) { return normal_pdf(x); }, -inf, inf) ==
        doctest::Approx(1.0).epsilon(1e-9));
  // Mean of the Gumbel distribution is the Euler-Mascheroni constant.
  CHECK(integrate([](double x) { return x * gumbel_pdf(x); }, -inf, inf) ==
        doctest::Approx(0.5772156649).epsilon(1e-8));
}

TEST_CASE("quadrature: exhausting the budget raises with the best estimate") {
  QuadratureSpec spec;
  spec.abs_tol = 1e-13;
  spec.rel_tol = 1e-13;
  spec.max_subdivisions = 3;
  bool threw = false;
  try {
    integrate([](double x) { return std::cos(50.0 * x * x); }, 0.0, 3.0, spec);
  } catch (const ConvergenceError& e) {
    threw = true;
    CHECK(std::isfinite(e.best_estimate()));
    CHECK(e.error_bound() > 1e-13);
  }
  CHECK(threw);
}

TEST_CASE("quadrature: invalid spec rejected") {
  QuadratureSpec spec;
  spec.abs_tol = 0.0;
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, spec),
                  std::domain_error);
}

TEST_CASE("mc: mean/se of a uniform sample and worker-count independence") {
  RngStream s(5, 77);
  auto fn = [](RngStream& rng) { return rng.uniform01(); };
  const MeanSE serial = run_replications(200001, s, fn, 1);
  const MeanSE pooled = run_replications(200001, s, fn, 3);
  CHECK(serial.mean == pooled.mean);            // bitwise: same block layout
  CHECK(serial.std_error == pooled.std_error);
  CHECK(serial.mean == doctest::Approx(0.5).epsilon(0.01));
  CHECK(serial.std_error ==
        doctest::Approx(std::sqrt(1.0 / 12.0 / 200001.0)).epsilon(0.05));
  CHECK_THROWS_AS(run_replications(0, s, fn), std::domain_error);
}

TEST_CASE("probability and error model validation") {
  CHECK_THROWS_AS(Probability(-0.01), std::domain_error);
  CHECK_THROWS_AS(Probability(1.01), std::domain_error);
  CHECK(Probability(0.25).value() == 0.25);
  CHECK_THROWS_AS(ErrorModel::normal(-1.0), std::domain_error);

  const ErrorModel n = ErrorModel::normal(0.2);
  const ErrorModel u = ErrorModel::uniform(0.2);
  CHECK(n.variance() == doctest::Approx(0.04).epsilon(1e-14));
  CHECK(u.variance() == doctest::Approx(0.04 / 3.0).epsilon(1e-14));
  CHECK(n.rms() == doctest::Approx(0.2).epsilon(1e-14));
  CHECK(u.cdf(0.2) == 1.0);
  CHECK(u.cdf(-0.2) == 0.0);
  CHECK(u.cdf(0.0) == 0.5);
  CHECK(u.pdf(0.1) == doctest::Approx(2.5).epsilon(1e-14));
  for (double q : {0.1, 0.5, 0.9}) {
    CHECK(n.cdf(n.quantile(q)) == doctest::Approx(q).epsilon(1e-9));
    CHECK(u.cdf(u.quantile(q)) == doctest::Approx(q).epsilon(1e-12));
  }
  // Sampled variance agrees with the stated variance.
  RngStream s(3, 4);
  double acc = 0.0;
  const int reps = 100000;
  for (int i = 0; i < reps; ++i) {
    const double x = u.sample(s);
    REQUIRE(std::fabs(x) <= 0.2);
    acc += x * x;
  }
  CHECK(acc / reps == doctest::Approx(u.variance()).epsilon(0.02));
}

TEST_CASE("poisson process: descending order, truncation window, spacing law") {
  RngStream s(11, 13);
  std::vector<double> buf;
  double max_sum = 0.0, exp_sum = 0.0;
  const int reps = 20000;
  for (int i = 0; i < reps; ++i) {
    sample_poisson_descending(s, 6.0, buf);
    REQUIRE(!buf.empty());
    for (std::size_t k = 1; k < buf.size(); ++k) {
      REQUIRE(buf[k] < buf[k - 1]);
      REQUIRE(buf[k] > buf[0] - 6.0);
    }
    max_sum += buf[0];
    exp_sum += std::exp(-buf[0]);  // e^{-X_(1)} is Exp(1) exactly
  }
  // The largest point is Gumbel; its mean is the Euler-Mascheroni constant.
  CHECK(max_sum / reps == doctest::Approx(0.5772156649).epsilon(0.05));
  CHECK(exp_sum / reps == doctest::Approx(1.0).epsilon(0.03));
  CHECK_THROWS_AS(sample_poisson_descending(s, 0.0, buf), std::domain_error);
}
