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
#include <functional>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gamble/error_model.hpp"
#include "gamble/mc.hpp"
#include "gamble/rng.hpp"

namespace gamble::tournament {

/// One question: stated forecast q, true probability p, and the binary
/// outcome once resolved.
struct TournamentRecord {
  Probability q;
  Probability p;
  std::optional<bool> outcome;
};

/// Forecaster with RMS probability error `rms`; forecasts are p + xi
/// clamped to [0.01, 0.99] when `clamp` is set.
struct ContestantModel {
  double rms;
  ErrorModel noise;
  bool clamp = true;

  ContestantModel(double r, ErrorModel n, bool c = true)
      : rms(r), noise(n), clamp(c) {
    if (!(rms >= 0.0))
      throw std::domain_error("ContestantModel: rms must be >= 0");
    if (std::fabs(noise.rms() - rms) > 1e-12)
      throw std::domain_error("ContestantModel: rms must equal the noise rms");
  }

  static ContestantModel normal(double rms) {
    return ContestantModel(rms, ErrorModel::normal(rms));
  }
};

/// Quadratic scoring rule: (1-q)^2 on a hit, q^2 on a miss.  Lower is better.
inline double brier_score(Probability q, bool happened) {
  const double v = q.value();
  return happened ? (1.0 - v) * (1.0 - v) : v * v;
}

/// Exact expectation of the total Brier score under independent
/// Bernoulli(p_i) outcomes: sum p_i (1-p_i) + sum (q_i - p_i)^2.
inline double expected_score(std::span<const TournamentRecord> records) {
  double irreducible = 0.0, miscalibration = 0.0;
  for (const auto& r : records) {
    const double p = r.p.value();
    const double d = r.q.value() - p;
    irreducible += p * (1.0 - p);
    miscalibration += d * d;
  }
  return irreducible + miscalibration;
}

struct ScoreGap {
  double gap;          // E[your score] - E[rival score]
  double sigma_you;    // RMS forecast error, sqrt(n^-1 sum (q_i - p_i)^2)
  double sigma_rival;
};

/// Relative-ability identity: with both contestants on the same questions,
/// the expected-score gap equals n (sigma^2 - sigma_hat^2) exactly.
inline ScoreGap score_gap_identity(std::span<const TournamentRecord> you,
                                   std::span<const TournamentRecord> rival) {
  const std::size_t n = you.size();
  if (n == 0 || rival.size() != n)
    throw std::domain_error("score_gap_identity: need equal nonzero lengths");
  double se_you = 0.0, se_rival = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (you[i].p.value() != rival[i].p.value())
      throw std::domain_error(
          "score_gap_identity: contestants must address the same questions");
    const double dy = you[i].q.value() - you[i].p.value();
    const double dr = rival[i].q.value() - rival[i].p.value();
    se_you += dy * dy;
    se_rival += dr * dr;
  }
  const double gap = expected_score(you) - expected_score(rival);
  return {gap, std::sqrt(se_you / static_cast<double>(n)),
          std::sqrt(se_rival / static_cast<double>(n))};
}

/// Win probability of the lower-rms contestant over repeated simulated
/// tournaments.  Per replication: draw p_i, both forecasts p_i + xi clamped
/// to [0.01, 0.99], Bernoulli outcomes, total the scores; ties count 1/2.
inline MeanSE simulate_tournament(
    std::uint64_t n_questions, const ContestantModel& you,
    const ContestantModel& rival,
    const std::function<double(RngStream&)>& p_sampler, std::uint64_t reps,
    const RngStream& stream) {
  if (n_questions < 1)
    throw std::domain_error("simulate_tournament: n_questions must be >= 1");
  const bool you_sharper = you.rms <= rival.rms;
  auto forecast = [](const ContestantModel& c, double p, RngStream& rng) {
    double q = p + c.noise.sample(rng);
    if (c.clamp) q = std::clamp(q, 0.01, 0.99);
    return q;
  };
  return run_replications(reps, stream, [&](RngStream& rng) {
    double score_you = 0.0, score_rival = 0.0;
    for (std::uint64_t i = 0; i < n_questions; ++i) {
      const double p = p_sampler(rng);
      const double qy = forecast(you, p, rng);
      const double qr = forecast(rival, p, rng);
      const bool hit = rng.uniform01() <= p;
      score_you += brier_score(Probability(qy), hit);
      score_rival += brier_score(Probability(qr), hit);
    }
    double you_win =
        score_you < score_rival ? 1.0 : (score_you == score_rival ? 0.5 : 0.0);
    return you_sharper ? you_win : 1.0 - you_win;
  });
}

struct FileScore {
  double total = 0.0;
  std::size_t n = 0;
};

/// Scores a resolved forecast file: one `q,outcome` pair per line, outcome
/// in {0,1}, optional header, '#' comments ignored.
inline FileScore score_records(std::istream& in) {
  FileScore out;
  std::string line;
  bool first = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::string l = line;
    std::replace(l.begin(), l.end(), ',', ' ');
    std::istringstream ss(l);
    double q = 0.0;
    int outcome = 0;
    if (!(ss >> q >> outcome)) {
      if (first) {  // tolerate a single header row
        first = false;
        continue;
      }
      throw std::runtime_error("score_records: malformed line " +
                               std::to_string(line_no) + ": " + line);
    }
    first = false;
    if (outcome != 0 && outcome != 1)
      throw std::runtime_error("score_records: outcome must be 0 or 1 on line " +
                               std::to_string(line_no));
    out.total += brier_score(Probability(q), outcome == 1);
    ++out.n;
  }
  return out;
}

}  // namespace gamble::tournament
