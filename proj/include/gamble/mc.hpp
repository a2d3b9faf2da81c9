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

#include <atomic>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "gamble/rng.hpp"

namespace gamble {

struct MeanSE {
  double mean = 0.0;
  double std_error = 0.0;
};

namespace detail {

inline MeanSE finish_moments(double sum, double sum_sq, std::uint64_t n) {
  const double mean = sum / static_cast<double>(n);
  double var = 0.0;
  if (n > 1) {
    var = (sum_sq - sum * sum / static_cast<double>(n)) /
          static_cast<double>(n - 1);
    if (var < 0.0) var = 0.0;
  }
  return {mean, std::sqrt(var / static_cast<double>(n))};
}

}  // namespace detail

/// Replication Monte Carlo with a fixed block layout: reps are partitioned
/// into blocks of 65536, block k uses stream.substream(k), and block sums
/// are reduced in index order.  Results therefore do not depend on the
/// worker count, only on (seed, stream_id, reps).
///
/// fn: RngStream& -> double (one replication).
template <typename Fn>
MeanSE run_replications(std::uint64_t reps, const RngStream& stream, Fn&& fn,
                        unsigned workers = 0) {
  if (reps < 1) throw std::domain_error("run_replications: reps must be >= 1");
  constexpr std::uint64_t kBlock = 65536;
  const std::uint64_t n_blocks = (reps + kBlock - 1) / kBlock;

  std::vector<double> block_sum(n_blocks, 0.0);
  std::vector<double> block_sum_sq(n_blocks, 0.0);

  auto run_block = [&](std::uint64_t k) {
    RngStream sub = stream.substream(k);
    const std::uint64_t lo = k * kBlock;
    const std::uint64_t hi = std::min(reps, lo + kBlock);
    double s = 0.0, s2 = 0.0;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const double v = fn(sub);
      s += v;
      s2 += v * v;
    }
    block_sum[k] = s;
    block_sum_sq[k] = s2;
  };

  if (workers == 0) workers = std::thread::hardware_concurrency();
  if (workers <= 1 || n_blocks == 1) {
    for (std::uint64_t k = 0; k < n_blocks; ++k) run_block(k);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::uint64_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::uint64_t k; (k = next.fetch_add(1)) < n_blocks;) run_block(k);
      });
    for (auto& t : pool) t.join();
  }

  double sum = 0.0, sum_sq = 0.0;
  for (std::uint64_t k = 0; k < n_blocks; ++k) {
    sum += block_sum[k];
    sum_sq += block_sum_sq[k];
  }
  return detail::finish_moments(sum, sum_sq, reps);
}

}  // namespace gamble
