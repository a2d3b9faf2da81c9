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
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace gamble {

struct QuadratureSpec {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_subdivisions = 2000;
};

/// Thrown when the subdivision budget runs out before the error bound
/// drops below tolerance.  Carries the best estimate so far.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   double error_bound)
      : std::runtime_error(what),
        best_estimate_(best_estimate),
        error_bound_(error_bound) {}
  double best_estimate() const { return best_estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

namespace detail {

template <typename F>
struct SimpsonState {
  const F& f;
  int subdivisions = 0;
  int max_subdivisions;
  double leftover_error = 0.0;  // error bound on intervals we gave up on
};

// One adaptive step on [a,b] with midpoint m and cached f values.
// whole = Simpson estimate on [a,b].
template <typename F>
double simpson_step(SimpsonState<F>& st, double a, double b, double fa,
                    double fm, double fb, double whole, double tol,
                    int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = st.f(lm);
  const double frm = st.f(rm);
  const double h6 = (b - a) / 12.0;
  const double left = h6 * (fa + 4.0 * flm + fm);
  const double right = h6 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth > 0 && std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  if (++st.subdivisions > st.max_subdivisions || depth > 48) {
    st.leftover_error += std::fabs(delta) / 15.0;
    return left + right;
  }
  return simpson_step(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_step(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

template <typename F>
double integrate_finite(const F& f, double lo, double hi,
                        const QuadratureSpec& spec, double tol) {
  SimpsonState<F> st{f, 0, spec.max_subdivisions, 0.0};
  const double m = 0.5 * (lo + hi);
  const double fa = f(lo), fm = f(m), fb = f(hi);
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  const double result = simpson_step(st, lo, hi, fa, fm, fb, whole, tol, 0);
  const double allowed =
      std::max(spec.abs_tol, spec.rel_tol * std::fabs(result));
  if (st.leftover_error > allowed)
    throw ConvergenceError("integrate: max_subdivisions exceeded", result,
                           st.leftover_error);
  return result;
}

}  // namespace detail

/// Adaptive Simpson quadrature on [lo, hi]; infinite or semi-infinite limits
/// are mapped to [0,1] with the rational substitution x = a + t/(1-t).  The
/// integrand must decay fast enough at infinite endpoints for the
/// transformed integrand to vanish there.
template <typename F>
double integrate(const F& f, double lo, double hi, const QuadratureSpec& spec = {}) {
  if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0) ||
      spec.max_subdivisions <= 0)
    throw std::domain_error("integrate: invalid QuadratureSpec");
  const double inf = std::numeric_limits<double>::infinity();
  if (lo == -inf && hi == inf) {
    QuadratureSpec half = spec;
    half.abs_tol = 0.5 * spec.abs_tol;
    return integrate(f, -inf, 0.0, half) + integrate(f, 0.0, inf, half);
  }
  if (hi == inf) {
    auto g = [&f, lo](double t) {
      if (t >= 1.0) return 0.0;
      const double om = 1.0 - t;
      const double v = f(lo + t / om) / (om * om);
      return std::isfinite(v) ? v : 0.0;
    };
    return detail::integrate_finite(g, 0.0, 1.0, spec, spec.abs_tol);
  }
  if (lo == -inf) {
    auto g = [&f, hi](double t) {
      if (t >= 1.0) return 0.0;
      const double om = 1.0 - t;
      const double v = f(hi - t / om) / (om * om);
      return std::isfinite(v) ? v : 0.0;
    };
    return detail::integrate_finite(g, 0.0, 1.0, spec, spec.abs_tol);
  }
  if (!(lo < hi)) return 0.0;
  return detail::integrate_finite(f, lo, hi, spec, spec.abs_tol);
}

}  // namespace gamble
