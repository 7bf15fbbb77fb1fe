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

// Real-argument special functions: signed log-gamma, Pochhammer symbols,
// digamma, the Gauss function 2F1 on (0,1) and 3F2 at unit argument.

#ifndef BETAFRAC_SPECFUN_HPP_
#define BETAFRAC_SPECFUN_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace betafrac {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr double kIntegerTolerance = 1e-9;
inline constexpr double kDefaultSeriesTolerance = 1e-13;
inline constexpr std::size_t kMaxSeriesTerms = 1'000'000;

inline bool is_nonpositive_integer(double x) {
  const double n = std::round(x);
  return n <= 0.0 && std::abs(x - n) <= kIntegerTolerance;
}

inline bool is_integer(double x) {
  return std::isfinite(x) && std::abs(x - std::round(x)) <= kIntegerTolerance;
}

// sign * exp(log_abs); sign == 0 encodes an exact zero.
struct SignedLog {
  int sign = 1;
  double log_abs = 0.0;

  double value() const {
    return sign == 0 ? 0.0 : sign * std::exp(log_abs);
  }
  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return {0, -std::numeric_limits<double>::infinity()};
    return {sign * o.sign, log_abs + o.log_abs};
  }
  SignedLog operator/(const SignedLog& o) const {
    if (o.sign == 0) throw DomainError("division by an exact zero");
    if (sign == 0) return *this;
    return {sign * o.sign, log_abs - o.log_abs};
  }
  SignedLog inverse() const { return SignedLog{1, 0.0} / *this; }
};

// log|Gamma(x)| with the sign of Gamma(x). At poles (x in -N within
// kIntegerTolerance) the result has sign 0, i.e. it represents 1/Gamma = 0
// when inverted with reciprocal_gamma.
inline SignedLog signed_lgamma(double x) {
  if (std::isnan(x)) throw DomainError("signed_lgamma: NaN argument");
  if (is_nonpositive_integer(x)) {
    return {0, std::numeric_limits<double>::infinity()};
  }
  int sgn = 1;
#if defined(__GLIBC__) || defined(__APPLE__)
  const double lg = ::lgamma_r(x, &sgn);
#else
  const double lg = std::lgamma(x);
  if (x < 0.0) sgn = (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
#endif
  return {sgn, lg};
}

// 1/Gamma(x) in signed-log form; zero at the poles of Gamma.
inline SignedLog reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return {0, -std::numeric_limits<double>::infinity()};
  const SignedLog g = signed_lgamma(x);
  return {g.sign, -g.log_abs};
}

inline SignedLog log_beta(double a, double b) {
  return signed_lgamma(a) * signed_lgamma(b) * reciprocal_gamma(a + b);
}

inline double pochhammer(double t, std::size_t n) {
  double out = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    out *= t + static_cast<double>(k);
    if (!std::isfinite(out)) throw std::overflow_error("pochhammer: overflow");
  }
  return out;
}

inline SignedLog log_pochhammer(double t, std::size_t n) {
  SignedLog out{1, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const double f = t + static_cast<double>(k);
    if (f == 0.0) return {0, -std::numeric_limits<double>::infinity()};
    out.log_abs += std::log(std::abs(f));
    if (f < 0.0) out.sign = -out.sign;
  }
  return out;
}

inline double digamma(double x) {
  if (is_nonpositive_integer(x)) throw DomainError("digamma: pole");
  double result = 0.0;
  if (x < 0.5) {
    // Reflection.
    result -= std::numbers::pi / std::tan(std::numbers::pi * x);
    x = 1.0 - x;
  }
  while (x < 10.0) {
    result -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Asymptotic tail with Bernoulli coefficients B_{2k}/(2k).
  const double tail =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760))))));
  return result + std::log(x) - 0.5 * inv - tail;
}

namespace detail {

// Continued fraction for I_x(a, b) / (x^a (1-x)^b / (a B(a,b))), modified Lentz.
inline double incomplete_beta_fraction(double a, double b, double x) {
  constexpr double kFloor = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kFloor) d = kFloor;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFloor) d = kFloor;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFloor) c = kFloor;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFloor) d = kFloor;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFloor) c = kFloor;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h;
  }
  throw DomainError("regularized_beta: continued fraction did not converge");
}

}  // namespace detail

// Regularized incomplete beta function I_x(a, b) for a, b > 0.
inline double regularized_beta(double a, double b, double x) {
  if (!(a > 0.0 && b > 0.0)) throw DomainError("regularized_beta: a, b must be positive");
  if (!(x > 0.0)) return 0.0;
  if (!(x < 1.0)) return 1.0;
  const double log_front =
      a * std::log(x) + b * std::log1p(-x) - log_beta(a, b).log_abs;
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return std::exp(log_front) * detail::incomplete_beta_fraction(a, b, x) / a;
  }
  return 1.0 - std::exp(log_front) * detail::incomplete_beta_fraction(b, a, 1.0 - x) / b;
}

struct SeriesResult {
  double value = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
  double est_rel_error = 0.0;
};

namespace detail {

// Combine a truncation estimate and a rounding estimate.
inline double relative_error(double truncation, double abs_sum, double sum) {
  const double eps = std::numeric_limits<double>::epsilon();
  if (sum == 0.0) return abs_sum == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return truncation + 2.0 * eps * abs_sum / std::abs(sum);
}

// Sum_n (p)_n (q)_n / ((r)_n n!) z^n for |z| < 1, or any z when the series
// terminates because p or q is in -N.
inline SeriesResult gauss_series(double p, double q, double r, double z, double tol,
                                 std::size_t max_terms = kMaxSeriesTerms) {
  if (is_nonpositive_integer(r)) throw DomainError("2F1: lower parameter in -N");
  SeriesResult res;
  std::size_t terminate_at = std::numeric_limits<std::size_t>::max();
  if (is_nonpositive_integer(p)) {
    p = std::round(p);
    terminate_at = static_cast<std::size_t>(-p);
  }
  if (is_nonpositive_integer(q)) {
    q = std::round(q);
    terminate_at = std::min(terminate_at, static_cast<std::size_t>(-q));
  }
  const bool terminating = terminate_at != std::numeric_limits<std::size_t>::max();
  if (!terminating && !(std::abs(z) < 1.0)) throw DomainError("2F1 series: |z| >= 1");
  const std::size_t start_checks =
      static_cast<std::size_t>(std::max({std::abs(p), std::abs(q), std::abs(r)})) + 2;
  double term = 1.0, sum = 1.0, abs_sum = 1.0;
  int quiet = 0;
  std::size_t n = 0;
  double truncation = 0.0;
  bool done = false;
  while (!done) {
    if (n >= max_terms) break;
    if (terminating && n == terminate_at) {
      done = true;
      truncation = 0.0;
      break;
    }
    const double dn = static_cast<double>(n);
    const double ratio = (p + dn) * (q + dn) / ((r + dn) * (dn + 1.0));
    term *= ratio * z;
    sum += term;
    abs_sum += std::abs(term);
    ++n;
    if (!std::isfinite(sum)) throw std::overflow_error("2F1 series: overflow");
    if (terminating) continue;
    if (n > start_checks) {
      // Remaining ratios approach |z|; once past the parameters they are bounded
      // by max(current ratio, |z|).
      const double dn1 = static_cast<double>(n);
      const double next = std::abs((p + dn1) * (q + dn1) / ((r + dn1) * (dn1 + 1.0)) * z);
      const double rho = std::max(next, std::abs(z));
      const double tail = rho < 1.0 ? std::abs(term) * rho / (1.0 - rho)
                                    : std::numeric_limits<double>::infinity();
      if (tail <= tol * std::abs(sum)) {
        if (++quiet >= 3) {
          truncation = sum == 0.0 ? 0.0 : tail / std::abs(sum);
          done = true;
        }
      } else {
        quiet = 0;
      }
    }
  }
  res.value = sum;
  res.terms_used = n + 1;
  res.est_rel_error = done ? relative_error(truncation, abs_sum, sum)
                           : std::numeric_limits<double>::infinity();
  res.converged = done && res.est_rel_error <= tol;
  return res;
}

// Logarithmic connection case of 2F1(a, b; a+b+m; x) with m >= 0 an integer,
// in terms of y = 1 - x.
inline SeriesResult gauss_log_connection(double a, double b, int m, double y, double tol) {
  const double c = a + b + m;
  const SignedLog g_c = signed_lgamma(c);
  double finite_part = 0.0, finite_abs = 0.0;
  const SignedLog front1 = g_c * reciprocal_gamma(a + m) * reciprocal_gamma(b + m);
  if (front1.sign != 0 && m > 0) {
    // sum_{k<m} (a)_k (b)_k (m-k-1)!/k! (-y)^k
    double t = std::tgamma(static_cast<double>(m));  // k = 0 term: (m-1)!
    for (int k = 0; k < m; ++k) {
      finite_part += t;
      finite_abs += std::abs(t);
      if (k + 1 < m) {
        t *= (a + k) * (b + k) / static_cast<double>(k + 1) / static_cast<double>(m - k - 1) * (-y);
      }
    }
    finite_abs *= std::exp(front1.log_abs);
    finite_part *= front1.value();
  }
  const SignedLog front2 = g_c * reciprocal_gamma(a) * reciprocal_gamma(b);
  double log_part = 0.0, log_abs = 0.0;
  std::size_t k = 0;
  bool done = true;
  double truncation = 0.0;
  if (front2.sign != 0) {
    done = false;
    const double ly = std::log(y);
    const double euler = std::numbers::egamma;
    double psi_k1 = -euler;  // psi(k+1)
    double psi_km1 = -euler;  // psi(k+m+1)
    for (int j = 1; j <= m; ++j) psi_km1 += 1.0 / j;
    double psi_a = digamma(a + m), psi_b = digamma(b + m);
    // coefficient (a+m)_k (b+m)_k / (k! (k+m)!) y^k, starting at 1/m!
    double coef = 1.0 / std::tgamma(static_cast<double>(m) + 1.0);
    const std::size_t start_checks =
        static_cast<std::size_t>(std::max({std::abs(a), std::abs(b), double(m)})) + 2;
    int quiet = 0;
    for (; k < kMaxSeriesTerms; ++k) {
      const double t = coef * (ly - psi_k1 - psi_km1 + psi_a + psi_b);
      log_part += t;
      log_abs += std::abs(t);
      const double dk = static_cast<double>(k);
      coef *= (a + m + dk) * (b + m + dk) / ((dk + 1.0) * (dk + 1.0 + m)) * y;
      psi_k1 += 1.0 / (dk + 1.0);
      psi_km1 += 1.0 / (dk + 1.0 + m);
      psi_a += 1.0 / (a + m + dk);
      psi_b += 1.0 / (b + m + dk);
      if (k > start_checks) {
        const double tail_bound = std::abs(coef) * (std::abs(ly) + 4.0 * std::log(dk + 2.0) +
                                                     std::abs(psi_a) + std::abs(psi_b)) /
                                  (1.0 - std::min(0.99, 2.0 * y));
        if (tail_bound <= tol * std::abs(log_part) || coef == 0.0) {
          if (++quiet >= 3) {
            truncation = log_part == 0.0 ? 0.0 : tail_bound / std::abs(log_part);
            done = true;
            ++k;
            break;
          }
        } else {
          quiet = 0;
        }
      }
    }
    const double ym = std::pow(-y, m);
    log_part *= -ym * front2.value();
    log_abs *= std::abs(ym) * std::exp(front2.log_abs);
  }
  SeriesResult res;
  res.value = finite_part + log_part;
  res.terms_used = static_cast<std::size_t>(m) + k;
  const double scale = std::abs(res.value);
  const double trunc_abs = truncation * std::abs(log_part);
  res.est_rel_error = done ? relative_error(scale == 0.0 ? 0.0 : trunc_abs / scale,
                                            finite_abs + log_abs, res.value)
                           : std::numeric_limits<double>::infinity();
  res.converged = done && res.est_rel_error <= tol;
  return res;
}

}  // namespace detail

// Direct power series of 2F1(p, q; r; x), valid for |x| < 1. Exposed for
// testing transformation identities independently of the evaluator below.
inline SeriesResult hyp2f1_series(double p, double q, double r, double x,
                                  double tol = kDefaultSeriesTolerance) {
  return detail::gauss_series(p, q, r, x, tol);
}

// Evaluator for 2F1(p, q; r; x) on 0 < x < 1 with fixed parameters. Chooses
// between the power series, the Euler transform and the connection formulas
// around x = 1; the coefficients of the latter are computed once.
class GaussHypergeometric {
 public:
  GaussHypergeometric(double p, double q, double r, double tol = kDefaultSeriesTolerance)
      : p_(p), q_(q), r_(r), tol_(tol), c_(r - p - q) {
    if (!std::isfinite(p) || !std::isfinite(q) || !std::isfinite(r)) {
      throw DomainError("2F1: non-finite parameter");
    }
    if (is_nonpositive_integer(r)) throw DomainError("2F1: lower parameter in -N");
    if (is_nonpositive_integer(p) || is_nonpositive_integer(q)) {
      route_ = Route::kPolynomial;
    } else if (is_nonpositive_integer(r - p) || is_nonpositive_integer(r - q)) {
      route_ = Route::kEulerPolynomial;
    } else if (is_integer(c_)) {
      route_ = Route::kLogConnection;
      m_ = static_cast<int>(std::round(c_));
    } else {
      route_ = Route::kConnection;
      // A&S 15.3.6
      const SignedLog g_r = signed_lgamma(r);
      coef1_ = g_r * signed_lgamma(c_) * reciprocal_gamma(r - p) * reciprocal_gamma(r - q);
      coef2_ = g_r * signed_lgamma(-c_) * reciprocal_gamma(p) * reciprocal_gamma(q);
    }
  }

  double p() const { return p_; }
  double q() const { return q_; }
  double r() const { return r_; }

  SeriesResult operator()(double x) const { return evaluate(x, 1.0 - x); }

  // xc must equal 1 - x; passing it separately keeps precision when x is
  // within rounding of 1.
  SeriesResult evaluate(double x, double xc) const {
    if (!(x > 0.0 && x < 1.0) && !(xc > 0.0 && xc < 1.0 && x == 1.0)) {
      if (x == 0.0) return {1.0, 1, true, 0.0};
      throw DomainError("2F1: argument outside (0,1)");
    }
    switch (route_) {
      case Route::kPolynomial:
        return detail::gauss_series(p_, q_, r_, x, tol_);
      case Route::kEulerPolynomial: {
        SeriesResult s = detail::gauss_series(r_ - p_, r_ - q_, r_, x, tol_);
        s.value *= std::pow(xc, c_);
        return s;
      }
      default:
        break;
    }
    if (x <= kSplit) return near_zero(x, xc);
    SeriesResult out = near_one(x, xc);
    if (out.est_rel_error > tol_ && x <= kSeriesFallback) {
      // Cancellation between the two connection terms; the power series
      // still converges geometrically here.
      const SeriesResult alt = near_zero(x, xc);
      if (alt.est_rel_error < out.est_rel_error) out = alt;
    }
    return out;
  }

 private:
  enum class Route { kPolynomial, kEulerPolynomial, kConnection, kLogConnection };
  static constexpr double kSplit = 0.5;
  static constexpr double kSeriesFallback = 0.9;

  SeriesResult near_zero(double x, double xc) const {
    if (c_ >= 0.0) return detail::gauss_series(p_, q_, r_, x, tol_);
    SeriesResult s = detail::gauss_series(r_ - p_, r_ - q_, r_, x, tol_);
    s.value *= std::pow(xc, c_);
    return s;
  }

  SeriesResult near_one(double x, double xc) const {
    (void)x;
    if (route_ == Route::kLogConnection) {
      if (m_ >= 0) return detail::gauss_log_connection(p_, q_, m_, xc, tol_);
      SeriesResult s = detail::gauss_log_connection(r_ - p_, r_ - q_, -m_, xc, tol_);
      s.value *= std::pow(xc, c_);
      return s;
    }
    SeriesResult s1{0.0, 0, true, 0.0};
    SeriesResult s2{0.0, 0, true, 0.0};
    if (coef1_.sign != 0) s1 = detail::gauss_series(p_, q_, 1.0 - c_, xc, tol_);
    if (coef2_.sign != 0) s2 = detail::gauss_series(r_ - p_, r_ - q_, 1.0 + c_, xc, tol_);
    const double t1 = coef1_.value() * s1.value;
    const double t2 = coef2_.value() * std::pow(xc, c_) * s2.value;
    SeriesResult out;
    out.value = t1 + t2;
    out.terms_used = s1.terms_used + s2.terms_used;
    const double eps = std::numeric_limits<double>::epsilon();
    const double scale = std::abs(out.value);
    const double err = std::abs(t1) * (s1.est_rel_error + 8 * eps) +
                       std::abs(t2) * (s2.est_rel_error + 8 * eps);
    out.est_rel_error = scale == 0.0 ? std::numeric_limits<double>::infinity() : err / scale;
    out.converged = s1.converged && s2.converged && out.est_rel_error <= tol_;
    return out;
  }

  double p_, q_, r_, tol_, c_;
  Route route_ = Route::kConnection;
  int m_ = 0;
  SignedLog coef1_{0, 0.0}, coef2_{0, 0.0};
};

inline SeriesResult hyp2f1(double p, double q, double r, double x,
                           double tol = kDefaultSeriesTolerance) {
  return GaussHypergeometric(p, q, r, tol)(x);
}

inline SeriesResult hyp2f1(double p, double q, double r, double x, double xc, double tol) {
  return GaussHypergeometric(p, q, r, tol).evaluate(x, xc);
}

// lim_{x->1} 2F1(p,q;r;x) = Gamma(r)Gamma(r-p-q)/(Gamma(r-p)Gamma(r-q)), r-p-q > 0.
inline double hyp2f1_limit_at_1(double p, double q, double r) {
  if (!(r - p - q > 0.0)) throw DomainError("2F1 limit at 1 requires r-p-q > 0");
  if (is_nonpositive_integer(r)) throw DomainError("2F1: lower parameter in -N");
  return (signed_lgamma(r) * signed_lgamma(r - p - q) * reciprocal_gamma(r - p) *
          reciprocal_gamma(r - q))
      .value();
}

namespace detail {

inline constexpr std::array<double, 16> kBernoulli = {
    1.0, -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42, 0.0, -1.0 / 30, 0.0,
    5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0};

inline double bernoulli_polynomial(int n, double x) {
  double out = 0.0, binom = 1.0;
  for (int k = 0; k <= n; ++k) {
    out += binom * kBernoulli[k] * std::pow(x, n - k);
    binom = binom * (n - k) / (k + 1);
  }
  return out;
}

// Hurwitz zeta(s, N) for s > 1 and N >= 20 by Euler-Maclaurin at N.
inline double hurwitz_zeta_tail(double s, double n) {
  double out = std::pow(n, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(n, -s);
  double rising = s;                 // s (s+1) ... (s+2j-2)
  double fact = 2.0;                 // (2j)!
  double npow = std::pow(n, -s - 1.0);
  for (int j = 1; j <= 7; ++j) {
    out += kBernoulli[2 * j] / fact * rising * npow;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    npow /= n * n;
  }
  return out;
}

}  // namespace detail

// 3F2(A, B, C; D, E; 1). Terminating series (an upper parameter in -N) are
// summed exactly. Otherwise requires s = D + E - A - B - C > 0; the tail past
// the directly summed part uses the large-n expansion of the term ratio,
// summed with Hurwitz zeta functions.
inline SeriesResult hyp3f2_at_1(double A, double B, double C, double D, double E,
                                double tol = kDefaultSeriesTolerance) {
  for (double v : {A, B, C, D, E}) {
    if (!std::isfinite(v)) throw DomainError("3F2: non-finite parameter");
  }
  if (is_nonpositive_integer(D) || is_nonpositive_integer(E)) {
    throw DomainError("3F2: lower parameter in -N");
  }
  std::size_t terminate_at = std::numeric_limits<std::size_t>::max();
  for (double* v : {&A, &B, &C}) {
    if (is_nonpositive_integer(*v)) {
      *v = std::round(*v);
      terminate_at = std::min(terminate_at, static_cast<std::size_t>(-*v));
    }
  }
  auto ratio = [&](double n) { return (A + n) * (B + n) * (C + n) / ((D + n) * (E + n) * (n + 1.0)); };
  SeriesResult res;
  if (terminate_at != std::numeric_limits<std::size_t>::max()) {
    double t = 1.0, sum = 1.0, abs_sum = 1.0;
    for (std::size_t n = 0; n < terminate_at; ++n) {
      t *= ratio(static_cast<double>(n));
      sum += t;
      abs_sum += std::abs(t);
    }
    if (!std::isfinite(sum)) throw std::overflow_error("3F2: overflow");
    res.value = sum;
    res.terms_used = terminate_at + 1;
    res.est_rel_error = detail::relative_error(0.0, abs_sum, sum);
    res.converged = res.est_rel_error <= tol;
    return res;
  }
  const double s = D + E - A - B - C;
  if (!(s > 0.0)) throw DomainError("3F2 at 1 diverges: D+E-A-B-C <= 0");
  const double scale = std::max({std::abs(A), std::abs(B), std::abs(C), std::abs(D), std::abs(E), 1.0});
  const std::size_t n_direct = static_cast<std::size_t>(std::ceil(10.0 * scale)) + 40;
  double t = 1.0, sum = 1.0, abs_sum = 1.0;
  for (std::size_t n = 0; n + 1 < n_direct; ++n) {
    t *= ratio(static_cast<double>(n));
    sum += t;
    abs_sum += std::abs(t);
  }
  if (!std::isfinite(sum)) throw std::overflow_error("3F2: overflow");
  // t is now the term of index N = n_direct - 1; the tail starts at N + 1.
  const double big_n = static_cast<double>(n_direct);
  const double t_next = t * ratio(big_n - 1.0);
  // log of t_n ~ log K - (1+s) log n + sum_j d_j n^{-j}
  constexpr int kOrder = 12;
  std::array<double, kOrder + 1> d{}, e{};
  for (int j = 1; j <= kOrder; ++j) {
    const double b = detail::bernoulli_polynomial(j + 1, A) + detail::bernoulli_polynomial(j + 1, B) +
                     detail::bernoulli_polynomial(j + 1, C) - detail::bernoulli_polynomial(j + 1, 1.0) -
                     detail::bernoulli_polynomial(j + 1, D) - detail::bernoulli_polynomial(j + 1, E);
    d[j] = ((j % 2 == 1) ? 1.0 : -1.0) * b / (j * (j + 1.0));
  }
  e[0] = 1.0;
  for (int k = 1; k <= kOrder; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * d[j] * e[k - j];
    e[k] = acc / k;
  }
  double shape_at_n = 0.0;
  for (int k = 0; k <= kOrder; ++k) shape_at_n += e[k] * std::pow(big_n, -k);
  const double norm = t_next / (std::pow(big_n, -1.0 - s) * shape_at_n);
  double tail = 0.0, last = 0.0, prev = 0.0;
  for (int k = 0; k <= kOrder; ++k) {
    const double piece = norm * e[k] * detail::hurwitz_zeta_tail(1.0 + s + k, big_n);
    tail += piece;
    prev = last;
    last = piece;
  }
  res.value = sum + tail;
  res.terms_used = n_direct;
  const double trunc = (std::abs(last) + std::abs(prev)) / std::abs(res.value);
  res.est_rel_error = detail::relative_error(trunc, abs_sum + std::abs(tail), res.value);
  res.converged = res.est_rel_error <= tol;
  return res;
}

// The Thomae-invariant combination Gamma(C) 3F2(A,B,C;D,E;1) / (Gamma(D) Gamma(E)).
inline double thomae_T(double A, double B, double C, double D, double E) {
  const SeriesResult f = hyp3f2_at_1(A, B, C, D, E);
  const SignedLog front = signed_lgamma(C) * reciprocal_gamma(D) * reciprocal_gamma(E);
  return front.value() * f.value;
}

// The argument map under which thomae_T is invariant.
inline std::array<double, 5> thomae_image(double A, double B, double C, double D, double E) {
  const double s = D + E - A - B - C;
  return {D - C, E - C, s, s + B, s + A};
}

}  // namespace betafrac

#endif  // BETAFRAC_SPECFUN_HPP_
