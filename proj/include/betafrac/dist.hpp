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

// Beta-hypergeometric laws on (0,1): density, normalizing constant, moments,
// a tabulated CDF with exact refinement, quantiles and sampling.

#ifndef BETAFRAC_DIST_HPP_
#define BETAFRAC_DIST_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "betafrac/params.hpp"
#include "betafrac/quadrature.hpp"
#include "betafrac/random.hpp"
#include "betafrac/specfun.hpp"

namespace betafrac {

// The unnormalized density x^{a-1}(1-x)^{b-1} 2F1(p,q;r;x), evaluated from x
// and 1-x. When r-p-q < 0 or r-p, r-q is in -N the Euler form is used, so the
// hypergeometric factor stays bounded near x = 1.
class BhDensity {
 public:
  explicit BhDensity(const ClassicParams& v) : v_(v), rep_(pick(v)), f_(rep_.p, rep_.q, rep_.r) {}

  const ClassicParams& params() const { return v_; }
  // The representative actually evaluated: v or its Euler image.
  const ClassicParams& representative() const { return rep_; }

  double operator()(double x, double xc) const {
    if (!(x > 0.0) || !(xc > 0.0)) return 0.0;
    const SeriesResult f = f_.evaluate(x, xc);
    double fv = f.value;
    if (fv < 0.0) {
      if (fv < -1e-12) {
        throw DomainError("density: 2F1(p,q;r;x) < 0 at x=" + std::to_string(x) +
                          "; (p,q,r) satisfies none of the four positivity cases");
      }
      fv = 0.0;
    }
    if (fv == 0.0) return 0.0;
    const double log_h = (rep_.a - 1.0) * std::log(x) + (rep_.b - 1.0) * std::log(xc) + std::log(fv);
    return std::exp(log_h);
  }
  double operator()(double x) const { return (*this)(x, 1.0 - x); }

 private:
  static ClassicParams pick(const ClassicParams& v) {
    if (is_nonpositive_integer(v.r)) throw DomainError("density: r in -N");
    const bool lower_poly = is_nonpositive_integer(v.p) || is_nonpositive_integer(v.q);
    const bool upper_poly = is_nonpositive_integer(v.r - v.p) || is_nonpositive_integer(v.r - v.q);
    const ClassicParams s = apply_transform(v, TransformKind::kS);
    if (lower_poly && upper_poly) return s.b > v.b ? s : v;
    if (upper_poly) return s;
    if (lower_poly) return v;
    return v.r - v.p - v.q < 0.0 ? s : v;
  }

  ClassicParams v_;
  ClassicParams rep_;
  GaussHypergeometric f_;
};

inline double unnormalized_density(const ClassicParams& v, double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("density: x outside (0,1)");
  return BhDensity(v)(x, 1.0 - x);
}

// I = B(a,b) 3F2(p,q,a; r,a+b; 1), the integral of the unnormalized density.
inline double norm_const(const ClassicParams& v) {
  const ExistenceReport rep = existence_report(v);
  if (!rep.integrable) throw DomainError("norm_const: density is not integrable");
  const ClassicParams s = apply_transform(v, TransformKind::kS);
  auto terminating = [](const ClassicParams& w) {
    return is_nonpositive_integer(w.p) || is_nonpositive_integer(w.q);
  };
  auto usable = [&](const ClassicParams& w) {
    return w.a > 0 && w.b > 0 && (terminating(w) || w.euler_b() > 0);
  };
  const ClassicParams* use = nullptr;
  if (usable(v) && usable(s)) {
    use = terminating(v) ? &v : terminating(s) ? &s : (s.euler_b() > v.euler_b() ? &s : &v);
  } else if (usable(v)) {
    use = &v;
  } else if (usable(s)) {
    use = &s;
  } else {
    throw DomainError("norm_const: no convergent series representation");
  }
  const SeriesResult f = hyp3f2_at_1(use->p, use->q, use->a, use->r, use->a + use->b);
  return log_beta(use->a, use->b).value() * f.value;
}

// E[X^s (1-X)^t] under BH(v).
inline double mellin_moment(const ClassicParams& v, double s, double t) {
  const ClassicParams shifted{v.a + s, v.b + t, v.p, v.q, v.r};
  if (!existence_report(shifted).integrable) {
    throw DomainError("mellin_moment: shifted parameters are not integrable");
  }
  return norm_const(shifted) / norm_const(v);
}

namespace detail {

// Cubic Hermite table over increasing abscissae t with values f and
// derivatives df; f is increasing.
struct HermiteTable {
  std::vector<double> t, f, df;

  bool empty() const { return t.size() < 2; }

  double eval(double tt) const {
    if (tt <= t.front()) return f.front() + df.front() * (tt - t.front());
    if (tt >= t.back()) return f.back() + df.back() * (tt - t.back());
    const std::size_t i = cell_of(t, tt);
    return cubic(i, (tt - t[i]) / (t[i + 1] - t[i]));
  }

  double invert(double target) const {
    if (target <= f.front()) {
      return df.front() > 0.0 ? t.front() + (target - f.front()) / df.front() : t.front();
    }
    if (target >= f.back()) {
      return df.back() > 0.0 ? t.back() + (target - f.back()) / df.back() : t.back();
    }
    const std::size_t i = cell_of(f, target);
    const double h = t[i + 1] - t[i];
    double lo = 0.0, hi = 1.0;
    double s = (f[i + 1] > f[i]) ? (target - f[i]) / (f[i + 1] - f[i]) : 0.5;
    for (int it = 0; it < 100; ++it) {
      const double g = cubic(i, s) - target;
      if (g > 0) hi = s; else lo = s;
      const double dg = cubic_slope(i, s);
      double next = dg > 0.0 ? s - g / dg : 0.5 * (lo + hi);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - s) <= 1e-16 || hi - lo <= 1e-16) {
        s = next;
        break;
      }
      s = next;
    }
    return t[i] + s * h;
  }

 private:
  static std::size_t cell_of(const std::vector<double>& xs, double v) {
    auto it = std::upper_bound(xs.begin(), xs.end(), v);
    std::size_t i = static_cast<std::size_t>(it - xs.begin());
    i = std::clamp<std::size_t>(i, 1, xs.size() - 1);
    return i - 1;
  }
  double cubic(std::size_t i, double s) const {
    const double h = t[i + 1] - t[i];
    const double s2 = s * s, s3 = s2 * s;
    return (2 * s3 - 3 * s2 + 1) * f[i] + (s3 - 2 * s2 + s) * h * df[i] +
           (-2 * s3 + 3 * s2) * f[i + 1] + (s3 - s2) * h * df[i + 1];
  }
  // Derivative with respect to s.
  double cubic_slope(std::size_t i, double s) const {
    const double h = t[i + 1] - t[i];
    const double s2 = s * s;
    return (6 * s2 - 6 * s) * f[i] + (3 * s2 - 4 * s + 1) * h * df[i] +
           (-6 * s2 + 6 * s) * f[i + 1] + (3 * s2 - 2 * s) * h * df[i + 1];
  }
};

}  // namespace detail

// A BH law with a precomputed CDF table. The table has three parts: the
// interior [0.01, 0.99] on a grid uniform in logit(x), and the two tails on
// grids uniform in log x and log(1-x), where log-CDF is nearly linear.
// Draws are returned as doubles, so mass closer to 1 than the spacing of
// doubles below 1 is reported at nextafter(1, 0).
class BhDistribution {
 public:
  static constexpr double kTailSplit = 0.01;
  static constexpr std::size_t kInteriorCells = 1024;
  static constexpr double kTailNodesPerDecade = 8.0;
  static constexpr double kTailMassFloor = 1e-22;

  explicit BhDistribution(const ClassicParams& v) : v_(v), density_(v) {
    const ExistenceReport rep = existence_report(v);
    if (!rep.integrable) throw DomainError("BhDistribution: parameters are not integrable");
    norm_ = betafrac::norm_const(v);
    if (!(norm_ > 0.0) || !std::isfinite(norm_)) throw DomainError("BhDistribution: bad normalizer");
    build_table();
  }

  const ClassicParams& params() const { return v_; }
  double norm_const() const { return norm_; }
  // Integral of the unnormalized density as seen by the CDF table.
  double table_mass() const { return table_mass_; }

  double pdf(double x) const { return pdf(x, 1.0 - x); }
  double pdf(double x, double xc) const {
    if (!(x > 0.0) || !(xc > 0.0)) return 0.0;
    return density_(x, xc) / norm_;
  }

  double cdf(double x) const {
    if (!(x > 0.0)) return 0.0;
    if (!(x < 1.0)) return 1.0;
    if (x > 1.0 - kTailSplit) return 1.0 - survival_tail(1.0 - x);
    if (x < kTailSplit) return left_tail_cdf(x);
    const std::size_t i = interior_cell(x);
    const double add = gauss_legendre8([&](double t) { return density_(t, 1.0 - t); },
                                       interior_x_[i], x) / table_mass_;
    return std::clamp(interior_.f[i] + add, interior_.f[i], interior_.f[i + 1]);
  }

  // 1 - cdf(1 - y), accurate for small y.
  double survival(double y) const {
    if (!(y > 0.0)) return 0.0;
    if (!(y < 1.0)) return 1.0;
    if (y < kTailSplit) return survival_tail(y);
    return 1.0 - cdf(1.0 - y);
  }

  double quantile(double u) const {
    if (!(u > 0.0 && u < 1.0)) throw DomainError("quantile: u outside (0,1)");
    double x = invert_table(u);
    const double below = interior_.f.front();
    const double above = 1.0 - interior_.f.back();
    if (u < below) {
      for (int it = 0; it < 6 && !left_.empty(); ++it) {
        const double d = density_(x, 1.0 - x) / table_mass_;
        if (!(d > 0.0)) break;
        const double step = (left_tail_cdf(x) - u) / d;
        x = std::clamp(x - step, 0.5 * x, std::min(2.0 * x, kTailSplit));
        if (std::abs(step) <= 1e-15 * x) break;
      }
    } else if (1.0 - u < above) {
      const double s = 1.0 - u;
      double y = 1.0 - x;
      for (int it = 0; it < 6 && !right_.empty() && y > 0.0; ++it) {
        const double d = density_(1.0 - y, y) / table_mass_;
        if (!(d > 0.0)) break;
        const double step = (survival_tail(y) - s) / d;
        y = std::clamp(y - step, 0.5 * y, std::min(2.0 * y, kTailSplit));
        if (std::abs(step) <= 1e-15 * y) break;
      }
      x = std::clamp(1.0 - y, kTailSplit, std::nextafter(1.0, 0.0));
    } else {
      for (int it = 0; it < 6; ++it) {
        const double d = density_(x, 1.0 - x) / table_mass_;
        if (!(d > 0.0)) break;
        const double step = (cdf(x) - u) / d;
        x = std::clamp(x - step, kTailSplit, 1.0 - kTailSplit);
        if (std::abs(step) < 1e-15) break;
      }
    }
    return x;
  }

  // Inverse CDF from the table alone.
  double sample_from_uniform(double u) const { return invert_table(u); }

  std::vector<double> sample(std::size_t n, std::uint64_t seed, std::uint64_t stream = 0) const {
    CounterRng rng(seed, stream);
    std::vector<double> out(n);
    for (double& x : out) x = invert_table(rng.uniform());
    return out;
  }

  // Table nodes as (u, x) pairs, increasing in both coordinates.
  std::vector<std::pair<double, double>> quantile_grid() const {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < left_.t.size(); ++i) {
      out.emplace_back(std::exp(left_.f[i]), std::exp(left_.t[i]));
    }
    for (std::size_t i = 1; i + 1 < interior_x_.size(); ++i) {
      out.emplace_back(interior_.f[i], interior_x_[i]);
    }
    for (std::size_t i = right_.t.size(); i-- > 0;) {
      const double u = 1.0 - std::exp(right_.f[i]);
      const double x = 1.0 - std::exp(right_.t[i]);
      // Nodes that round onto an earlier one in double precision are dropped.
      if (!out.empty() && !(u > out.back().first && x > out.back().second)) continue;
      out.emplace_back(u, x);
    }
    return out;
  }

  // Density of arcsin(sqrt(X)) on (0, pi/2).
  double arcsin_sqrt_pdf(double theta) const {
    if (!(theta > 0.0 && theta < std::numbers::pi / 2)) return 0.0;
    const double s = std::sin(theta), c = std::cos(theta);
    return pdf(s * s, c * c) * 2.0 * s * c;
  }

 private:
  void build_table() {
    const ClassicParams& w = density_.representative();
    auto h = [this](double x, double xc) { return density_(x, xc); };
    auto h_left = [&](double x) { return h(x, 1.0 - x); };
    auto h_right = [&](double y) { return h(1.0 - y, y); };
    const double log_norm = std::log(norm_);
    const double step = std::pow(10.0, -1.0 / kTailNodesPerDecade);

    // Tail abscissae, from the split point down to where the estimated mass
    // x^e / (e I) drops below kTailMassFloor.
    auto tail_nodes = [&](double exponent) {
      std::vector<double> nodes{kTailSplit};
      const double floor = std::log(kTailMassFloor);
      while (nodes.size() < 20000) {
        const double next = nodes.back() * step;
        if (next < 1e-300) break;
        const double est = exponent * std::log(next) - std::log(std::max(exponent, 1e-300)) - log_norm;
        nodes.push_back(next);
        if (est < floor) break;
      }
      return nodes;
    };
    const std::vector<double> lx = tail_nodes(w.a);
    const std::vector<double> ly = tail_nodes(w.b);

    // Raw cumulative masses at the tail nodes, innermost first.
    auto tail_masses = [&](const std::vector<double>& nodes, auto&& g) {
      std::vector<double> mass(nodes.size());
      const double innermost = nodes.back();
      // With lo = 0 the offset x - lo passed by tanh_sinh is x itself, exact
      // even when x is subnormal.
      mass.back() =
          tanh_sinh([&](double, double x, double) { return g(x); }, 0.0, innermost, 1e-13).value;
      for (std::size_t k = nodes.size() - 1; k-- > 0;) {
        mass[k] = mass[k + 1] + gauss_legendre8(g, nodes[k + 1], nodes[k]);
      }
      return mass;
    };
    const std::vector<double> cl = tail_masses(lx, h_left);
    const std::vector<double> sr = tail_masses(ly, h_right);

    // Interior.
    std::vector<double> xi(kInteriorCells + 1), ci(kInteriorCells + 1), ti(kInteriorCells + 1);
    const double t_lo = std::log(kTailSplit / (1.0 - kTailSplit));
    const double width = -2.0 * t_lo / static_cast<double>(kInteriorCells);
    ci[0] = cl.front();
    for (std::size_t i = 0; i <= kInteriorCells; ++i) {
      ti[i] = t_lo + width * static_cast<double>(i);
      xi[i] = 1.0 / (1.0 + std::exp(-ti[i]));
    }
    xi.front() = kTailSplit;
    xi.back() = 1.0 - kTailSplit;
    for (std::size_t i = 1; i <= kInteriorCells; ++i) {
      ci[i] = ci[i - 1] + gauss_legendre8(h_left, xi[i - 1], xi[i]);
    }
    table_mass_ = ci.back() + sr.front();

    interior_x_ = xi;
    interior_.t = ti;
    interior_.f.resize(xi.size());
    interior_.df.resize(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
      interior_.f[i] = ci[i] / table_mass_;
      interior_.df[i] = h(xi[i], 1.0 - xi[i]) * xi[i] * (1.0 - xi[i]) / table_mass_;
    }
    interior_.f.back() = 1.0 - sr.front() / table_mass_;

    auto fill_tail = [&](detail::HermiteTable& tab, const std::vector<double>& nodes,
                         const std::vector<double>& mass, auto&& g) {
      tab = {};
      for (std::size_t k = nodes.size(); k-- > 0;) {
        const double m = mass[k] / table_mass_;
        if (!(m > 0.0)) continue;
        tab.t.push_back(std::log(nodes[k]));
        tab.f.push_back(std::log(m));
        tab.df.push_back(nodes[k] * g(nodes[k]) / table_mass_ / m);
      }
    };
    fill_tail(left_, lx, cl, h_left);
    fill_tail(right_, ly, sr, h_right);
    left_exponent_ = w.a;
    right_exponent_ = std::max(w.b, 1e-300);
  }

  std::size_t interior_cell(double x) const {
    const auto it = std::upper_bound(interior_x_.begin(), interior_x_.end(), x);
    const std::size_t i = static_cast<std::size_t>(it - interior_x_.begin());
    return std::clamp<std::size_t>(i, 1, interior_x_.size() - 1) - 1;
  }

  // Exact tail CDF for x < kTailSplit: table node plus a short integral.
  double left_tail_cdf(double x) const {
    if (left_.empty()) {
      return interior_.f.front() * std::pow(x / kTailSplit, left_exponent_);
    }
    const double lx = std::log(x);
    if (lx <= left_.t.front()) return std::exp(left_.eval(lx));
    const auto it = std::upper_bound(left_.t.begin(), left_.t.end(), lx);
    const std::size_t k = static_cast<std::size_t>(it - left_.t.begin()) - 1;
    const double x0 = std::exp(left_.t[k]);
    const double add = gauss_legendre8([&](double t) { return density_(t, 1.0 - t); }, x0, x);
    return std::exp(left_.f[k]) + add / table_mass_;
  }

  double survival_tail(double y) const {
    if (right_.empty()) {
      return (1.0 - interior_.f.back()) * std::pow(y / kTailSplit, right_exponent_);
    }
    const double ly = std::log(y);
    if (ly <= right_.t.front()) return std::exp(right_.eval(ly));
    const auto it = std::upper_bound(right_.t.begin(), right_.t.end(), ly);
    const std::size_t k = static_cast<std::size_t>(it - right_.t.begin()) - 1;
    const double y0 = std::exp(right_.t[k]);
    const double add = gauss_legendre8([&](double t) { return density_(1.0 - t, t); }, y0, y);
    return std::exp(right_.f[k]) + add / table_mass_;
  }

  double invert_table(double u) const {
    constexpr double kTiny = std::numeric_limits<double>::min();
    const double below = interior_.f.front();
    const double above = 1.0 - interior_.f.back();
    double x;
    if (u < below) {
      x = left_.empty() ? kTailSplit * std::pow(u / below, 1.0 / left_exponent_)
                        : std::exp(left_.invert(std::log(u)));
    } else if (1.0 - u < above) {
      const double s = 1.0 - u;
      const double y = right_.empty() ? kTailSplit * std::pow(s / above, 1.0 / right_exponent_)
                                      : std::exp(right_.invert(std::log(s)));
      x = 1.0 - y;
    } else {
      x = 1.0 / (1.0 + std::exp(-interior_.invert(u)));
    }
    return std::clamp(x, kTiny, std::nextafter(1.0, 0.0));
  }

  ClassicParams v_;
  BhDensity density_;
  double norm_ = 0.0;
  double table_mass_ = 0.0;
  double left_exponent_ = 1.0, right_exponent_ = 1.0;
  std::vector<double> interior_x_;
  detail::HermiteTable left_, interior_, right_;
};

// Beta and tilted-beta densities that some parameter choices reduce to.
inline double beta_pdf(double a, double u, double x) {
  return std::exp((a - 1) * std::log(x) + (u - 1) * std::log1p(-x) - log_beta(a, u).log_abs);
}

inline double quasibeta_pdf(double a, double u, double slope, double x) {
  // Normalizer: B(a,u) (1 - slope a/(a+u)).
  const double z = 1.0 - slope * a / (a + u);
  return beta_pdf(a, u, x) * (1.0 - slope * x) / z;
}

struct ClosedFormFixture {
  enum class Kind { kGauss, kDensity };
  std::string id;
  Kind kind = Kind::kGauss;
  ClassicParams params;
  std::function<double(double)> closed_form;
  // The form as printed in the source, when it differs from closed_form.
  std::function<double(double)> printed_form;
};

// Elementary evaluations of 2F1 and two explicit BH densities.
inline std::vector<ClosedFormFixture> closed_form_fixtures(double p = 0.3) {
  using Kind = ClosedFormFixture::Kind;
  auto theta = [](double x) { return std::asin(std::sqrt(x)); };
  std::vector<ClosedFormFixture> out;
  auto gauss = [&](std::string id, double pp, double qq, double rr, std::function<double(double)> f,
                   std::function<double(double)> printed = {}) {
    out.push_back({std::move(id), Kind::kGauss, {1, 1, pp, qq, rr}, std::move(f), std::move(printed)});
  };
  gauss("cos", p, -p, 0.5, [=](double x) { return std::cos(2 * p * theta(x)); });
  gauss("cos-ratio", p, 1 - p, 0.5,
        [=](double x) { return std::cos((2 * p - 1) * theta(x)) / std::cos(theta(x)); });
  gauss("sin-ratio", p, 1 - p, 1.5, [=](double x) {
    return std::sin((2 * p - 1) * theta(x)) / ((2 * p - 1) * std::sin(theta(x)));
  });
  gauss("sin-double", 1 + p, 1 - p, 1.5, [=](double x) {
    return std::sin(2 * p * theta(x)) / (p * std::sin(2 * theta(x)));
  });
  gauss(
      "cos-half", p, 0.5 + p, 1 + 2 * p,
      [=](double x) { return std::pow(std::cos(theta(x) / 2), -4 * p); },
      [=](double x) { return std::pow(std::cos(theta(x) / 2), -2 * p); });
  gauss(
      "cos-half-2", p, 0.5 + p, 2 * p,
      [=](double x) { return 1.0 / (std::cos(theta(x)) * std::pow(std::cos(theta(x) / 2), 4 * p - 2)); },
      [=](double x) { return 1.0 / (std::cos(theta(x)) * std::pow(std::cos(theta(x) / 2), 2 * p - 1)); });
  gauss("arcsin", 0.5, 0.5, 1.5, [=](double x) { return theta(x) / std::sin(theta(x)); });
  gauss("arcsin-double", 1, 1, 1.5, [=](double x) { return 2 * theta(x) / std::sin(2 * theta(x)); });
  gauss("sqrt-sum", p, 0.5 + p, 0.5, [=](double x) {
    const double s = std::sqrt(x);
    return 0.5 * std::pow(1 + s, -2 * p) + 0.5 * std::pow(1 - s, -2 * p);
  });
  gauss(
      "sqrt-diff", p, 0.5 + p, 1.5,
      [=](double x) {
        const double s = std::sqrt(x);
        return (std::pow(1 + s, 1 - 2 * p) - std::pow(1 - s, 1 - 2 * p)) / (2 * (1 - 2 * p) * s);
      },
      [=](double x) {
        const double s = std::sqrt(x);
        return (std::pow(1 - s, -(1 - 2 * p)) - std::pow(1 + s, -(1 - 2 * p))) / (2 * (1 - 2 * p) * s);
      });
  gauss("sqrt-log", 1, 0.5, 1.5, [](double x) {
    const double s = std::sqrt(x);
    return std::log((1 + s) / (1 - s)) / (2 * s);
  });
  gauss("log", 1, 1, 2, [](double x) { return -std::log1p(-x) / x; });

  constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
  out.push_back({"bh-one", Kind::kDensity, {1, 1, 1, 1, 2},
                 [=](double x) { return 6.0 / (kPi2 * x) * -std::log1p(-x); }, {}});
  auto bracket = [](double x) { return (2 - x) / (x * x * x) * -std::log1p(-x) - 2 / (x * x); };
  out.push_back({"bh-two", Kind::kDensity, {2, 2, 2, 2, 4},
                 [=](double x) { return 2.0 / (10.0 - kPi2) * x * (1 - x) * bracket(x); },
                 [=](double x) { return 2.0 / (10.0 - kPi2) * bracket(x); }});
  return out;
}

// The library-side evaluation a fixture is compared against.
inline std::function<double(double)> fixture_model(const ClosedFormFixture& f) {
  const ClassicParams v = f.params;
  if (f.kind == ClosedFormFixture::Kind::kGauss) {
    return [v](double x) { return hyp2f1(v.p, v.q, v.r, x).value; };
  }
  const double c = norm_const(v);
  return [v, c](double x) { return unnormalized_density(v, x) / c; };
}

// Evenly spaced interior grid (i + 1/2) / n, i = 0..n-1.
inline std::vector<double> midpoint_grid(std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
  return out;
}

}  // namespace betafrac

#endif  // BETAFRAC_DIST_HPP_
