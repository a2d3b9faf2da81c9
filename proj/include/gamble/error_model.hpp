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

#include "gamble/rng.hpp"
#include "gamble/special.hpp"

namespace gamble {

/// Probability value, checked to lie in [0,1].
class Probability {
 public:
  Probability(double value) : value_(value) {  // NOLINT: implicit by design
    if (!(value >= 0.0 && value <= 1.0))
      throw std::domain_error("Probability: value outside [0,1]");
  }
  double value() const { return value_; }
  operator double() const { return value_; }

 private:
  double value_;
};

/// Zero-mean perception-noise distribution: the xi in p_perc = p_true + xi.
/// `scale` is sigma for Normal, the half-width for Uniform.
struct ErrorModel {
  enum class Kind { Normal, Uniform };

  Kind kind = Kind::Normal;
  double scale = 0.0;

  static ErrorModel normal(double sigma) {
    check_scale(sigma);
    return {Kind::Normal, sigma};
  }
  static ErrorModel uniform(double half_width) {
    check_scale(half_width);
    return {Kind::Uniform, half_width};
  }

  double variance() const {
    return kind == Kind::Normal ? scale * scale : scale * scale / 3.0;
  }
  double rms() const { return std::sqrt(variance()); }

  /// Smallest |bound| with P(|xi| > bound) < 1e-9 (exact for Uniform).
  double support_bound() const {
    return kind == Kind::Normal ? 6.2 * scale : scale;
  }

  double sample(RngStream& stream) const {
    if (scale == 0.0) return 0.0;
    return kind == Kind::Normal ? stream.normal(scale)
                                : stream.uniform(-scale, scale);
  }

  double pdf(double x) const {
    if (scale == 0.0)
      throw std::domain_error("ErrorModel::pdf: degenerate (scale 0)");
    if (kind == Kind::Normal) return normal_pdf(x, scale);
    return std::fabs(x) <= scale ? 0.5 / scale : 0.0;
  }

  double cdf(double x) const {
    if (scale == 0.0) return x < 0.0 ? 0.0 : 1.0;
    if (kind == Kind::Normal) return normal_cdf(x, scale);
    if (x <= -scale) return 0.0;
    if (x >= scale) return 1.0;
    return 0.5 * (x / scale + 1.0);
  }

  /// Quantile transform, used by the Gaussian-copula dependence hook.
  double quantile(double u) const {
    if (!(u > 0.0 && u < 1.0))
      throw std::domain_error("ErrorModel::quantile: u outside (0,1)");
    if (scale == 0.0) return 0.0;
    if (kind == Kind::Normal) return scale * normal_quantile(u);
    return scale * (2.0 * u - 1.0);
  }

 private:
  static void check_scale(double s) {
    if (!(s >= 0.0) || !std::isfinite(s))
      throw std::domain_error("ErrorModel: scale must be nonnegative");
  }
};

}  // namespace gamble
