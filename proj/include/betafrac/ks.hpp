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

// Kolmogorov-Smirnov distances with asymptotic critical values.

#ifndef BETAFRAC_KS_HPP_
#define BETAFRAC_KS_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace betafrac {

struct KsResult {
  double statistic = 0.0;
  double threshold = 0.0;
  bool passed() const { return statistic <= threshold; }
};

inline constexpr double kDefaultKsAlpha = 1e-3;

// c(alpha) = sqrt(-ln(alpha/2) / 2).
inline double ks_critical_value(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error("ks: alpha outside (0,1)");
  return std::sqrt(-0.5 * std::log(0.5 * alpha));
}

template <class Cdf>
KsResult ks_one_sample(std::vector<double> samples, Cdf&& cdf, double alpha = kDefaultKsAlpha) {
  if (samples.empty()) throw std::domain_error("ks: no samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return {d, ks_critical_value(alpha) / std::sqrt(n)};
}

inline KsResult ks_two_sample(std::vector<double> x, std::vector<double> y,
                              double alpha = kDefaultKsAlpha) {
  if (x.empty() || y.empty()) throw std::domain_error("ks: no samples");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size()), ny = static_cast<double>(y.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double t = std::min(x[i], y[j]);
    while (i < x.size() && x[i] <= t) ++i;
    while (j < y.size() && y[j] <= t) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return {d, ks_critical_value(alpha) * std::sqrt((nx + ny) / (nx * ny))};
}

}  // namespace betafrac

#endif  // BETAFRAC_KS_HPP_
