// Copyright 2026 The betafrac Authors
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

// Double-exponential (tanh-sinh) quadrature for integrands with algebraic or
// logarithmic endpoint singularities.

#ifndef BETAFRAC_QUADRATURE_HPP_
#define BETAFRAC_QUADRATURE_HPP_

#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>

namespace betafrac {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

namespace detail {

// One pass of the trapezoid rule in t at step h, restricted to odd multiples
// of h when `odd_only` is set. f receives (x, distance to lo, distance to hi).
template <class F>
double tanh_sinh_pass(F& f, double lo, double hi, double h, bool odd_only,
                      std::size_t& evals) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  constexpr double kTMax = 6.5;
  const double half = 0.5 * (hi - lo);
  double sum = 0.0;
  const long long n = static_cast<long long>(std::ceil(kTMax / h));
  for (long long k = odd_only ? 1 : 0; k <= n; k += odd_only ? 2 : 1) {
    const double t = static_cast<double>(k) * h;
    const double u = kHalfPi * std::sinh(t);
    const double ch = std::cosh(u);
    const double weight = kHalfPi * std::cosh(t) / (ch * ch);
    if (!(weight > 0.0)) continue;
    // Distance from the nearer endpoint, computed without cancellation.
    const double gap = half / (std::exp(u) * ch);
    if (k == 0) {
      sum += weight * f(lo + half, half, half);
      ++evals;
      continue;
    }
    if (gap > 0.0) {
      const double fr = f(hi - gap, 2.0 * half - gap, gap);
      const double fl = f(lo + gap, gap, 2.0 * half - gap);
      evals += 2;
      if (std::isfinite(fr)) sum += weight * fr;
      if (std::isfinite(fl)) sum += weight * fl;
    }
  }
  return sum * half;
}

}  // namespace detail

// Integrates f over [lo, hi]. The integrand is called as f(x, x - lo, hi - x)
// so that singular factors at either endpoint can be evaluated from exact
// offsets. Falls back to bisection when the level refinement stalls.
template <class F>
QuadratureResult tanh_sinh(F&& f, double lo, double hi, double rel_tol = 1e-12,
                           int max_level = 9, int depth = 0) {
  QuadratureResult res;
  if (!(hi > lo)) return res;
  double h = 1.0;
  double estimate = detail::tanh_sinh_pass(f, lo, hi, h, false, res.evaluations) * h;
  double previous = estimate;
  double sum_trap = estimate / h;
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    sum_trap += detail::tanh_sinh_pass(f, lo, hi, h, true, res.evaluations);
    estimate = sum_trap * h;
    const double diff = std::abs(estimate - previous);
    if (level >= 3 && diff <= rel_tol * std::abs(estimate)) {
      res.value = estimate;
      res.abs_error = diff;
      res.converged = true;
      return res;
    }
    previous = estimate;
  }
  if (depth < 6) {
    const double mid = lo + 0.5 * (hi - lo);
    QuadratureResult left = tanh_sinh(f, lo, mid, rel_tol, max_level, depth + 1);
    QuadratureResult right = tanh_sinh(f, mid, hi, rel_tol, max_level, depth + 1);
    res.value = left.value + right.value;
    res.abs_error = left.abs_error + right.abs_error;
    res.evaluations += left.evaluations + right.evaluations;
    res.converged = left.converged && right.converged;
    return res;
  }
  res.value = estimate;
  res.abs_error = std::abs(estimate - previous);
  res.converged = false;
  return res;
}

// Eight-point Gauss-Legendre rule on [lo, hi], for short smooth pieces.
template <class F>
double gauss_legendre8(F&& f, double lo, double hi) {
  static constexpr double kNodes[4] = {0.18343464249564978, 0.525532409916329,
                                       0.7966664774136267, 0.9602898564975362};
  static constexpr double kWeights[4] = {0.36268378337836177, 0.31370664587788705,
                                         0.22238103445337434, 0.10122853629037669};
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  double sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    sum += kWeights[i] * (f(mid - half * kNodes[i]) + f(mid + half * kNodes[i]));
  }
  return sum * half;
}

}  // namespace betafrac

#endif  // BETAFRAC_QUADRATURE_HPP_
