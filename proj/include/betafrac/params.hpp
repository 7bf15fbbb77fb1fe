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

// Parameter domains of the beta-hypergeometric family: positivity of the
// Gauss function, integrability, the theta coordinates, and the integer
// matrices acting on parameter vectors.

#ifndef BETAFRAC_PARAMS_HPP_
#define BETAFRAC_PARAMS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "betafrac/specfun.hpp"

namespace betafrac {

// Shape parameters of x^{a-1} (1-x)^{b-1} 2F1(p,q;r;x) on (0,1).
struct ClassicParams {
  double a = 0, b = 0, p = 0, q = 0, r = 0;

  std::array<double, 5> to_array() const { return {a, b, p, q, r}; }
  static ClassicParams from_array(const std::array<double, 5>& v) {
    return {v[0], v[1], v[2], v[3], v[4]};
  }
  // r + b - p - q, the exponent of (1-x) after the Euler transform.
  double euler_b() const { return r + b - p - q; }
  bool operator==(const ClassicParams&) const = default;
  auto operator<=>(const ClassicParams&) const = default;
};

struct ThetaParams {
  std::array<double, 5> theta{};

  double operator[](int i) const { return theta[i]; }
  bool operator==(const ThetaParams&) const = default;
};

inline ThetaParams theta_from_classic(const ClassicParams& v) {
  return {{0.5 * (v.a + 2 * v.b - v.p - v.q), 0.5 * (-v.a - v.p - v.q + 2 * v.r),
           0.5 * (-v.a + v.p + v.q), 0.5 * (v.a - v.p + v.q), 0.5 * (v.a + v.p - v.q)}};
}

inline ClassicParams classic_from_theta(const ThetaParams& t) {
  const auto& th = t.theta;
  return {th[3] + th[4], th[0] + th[2], th[2] + th[4], th[2] + th[3],
          th[1] + th[2] + th[3] + th[4]};
}

// Klein's count: the number of zeros of 2F1(p,q;r;.) on (0,1) is X or X+1.
inline int klein_index(double p, double q, double r) {
  const double arg = 0.5 * (std::abs(p - q) - std::abs(r - 1) - std::abs(r - p - q) + 1);
  if (arg <= 1.0) return 0;
  return static_cast<int>(std::ceil(arg)) - 1;
}

// Sign of 1/Gamma(x): 0 on -N, -1 on (-2k-1, -2k), +1 otherwise.
inline int recip_gamma_sign(double x) {
  if (is_nonpositive_integer(x)) return 0;
  if (x > 0) return 1;
  return (static_cast<long long>(std::floor(x)) % 2 == 0) ? 1 : -1;
}

inline bool in_set_S(double x, double y, double z) {
  return recip_gamma_sign(x) * recip_gamma_sign(y) * recip_gamma_sign(z) >= 0;
}

namespace detail {

// Index (1..4) of the positivity case that holds, or 0.
inline int positivity_case(double p, double q, double r) {
  const double c = r - p - q;
  if (r >= 1) {
    if (c <= 0 && p >= 0 && q >= 0) return 1;
    if (c >= 0 && r - p >= 0 && r - q >= 0) return 2;
    return 0;
  }
  if (c <= 0 && r - p <= 1 && r - q <= 1 && in_set_S(p, q, r)) return 3;
  if (c >= 0 && p <= 1 && q <= 1 && in_set_S(r - p, r - q, r)) return 4;
  return 0;
}

}  // namespace detail

// True when 2F1(p,q;r;x) > 0 on (0,1).
inline bool positivity_membership(double p, double q, double r) {
  if (is_nonpositive_integer(r)) throw DomainError("positivity: r in -N");
  return detail::positivity_case(p, q, r) != 0;
}

struct ExistenceReport {
  bool in_positivity = false;
  int klein_index = 0;
  bool in_P = false;
  bool in_Theta = false;
  bool integrable = false;
  std::vector<std::string> reasons;
};

// Membership of a theta vector (pairs in any order) in the image of P.
inline bool theta_exists(const ThetaParams& t) {
  double t1 = t[0], t2 = t[1], t3 = t[2], t4 = t[3], t5 = t[4];
  if (t2 > t3) std::swap(t2, t3);
  if (t4 > t5) std::swap(t4, t5);
  const double r = t2 + t3 + t4 + t5;
  if (is_nonpositive_integer(r)) return false;
  if (!(t1 + t2 > 0 && t4 + t5 > 0)) return false;
  if (r >= 1) return t3 + t4 > 0;
  return t2 + t5 <= 1 && in_set_S(t3 + t4, t3 + t5, r);
}

inline ExistenceReport existence_report(const ClassicParams& v) {
  ExistenceReport rep;
  if (is_nonpositive_integer(v.r)) {
    rep.klein_index = klein_index(v.p, v.q, v.r);
    rep.reasons.push_back("r in -N");
    return rep;
  }
  rep.klein_index = klein_index(v.p, v.q, v.r);
  const int pos_case = detail::positivity_case(v.p, v.q, v.r);
  rep.in_positivity = pos_case != 0;
  if (rep.in_positivity) {
    rep.reasons.push_back("positivity.case" + std::to_string(pos_case));
  } else {
    rep.reasons.push_back(rep.klein_index > 0 ? "positivity violated: klein index > 0"
                                              : "positivity violated: no case holds");
  }
  const double c = v.r - v.p - v.q;
  const bool generic_ok = v.a > 0 && v.b > 0 && v.euler_b() > 0;
  if (!(v.a > 0)) rep.reasons.push_back("a>0 violated");
  if (!(v.b > 0)) rep.reasons.push_back("b>0 violated");
  if (!(v.euler_b() > 0)) rep.reasons.push_back("r+b-p-q>0 violated");
  rep.in_P = rep.in_positivity && generic_ok;
  if (rep.in_positivity) {
    const bool upper_exceptional =
        c >= 0 && (is_nonpositive_integer(v.r - v.p) || is_nonpositive_integer(v.r - v.q));
    const bool lower_exceptional =
        c <= 0 && (is_nonpositive_integer(v.p) || is_nonpositive_integer(v.q));
    if (upper_exceptional) {
      rep.integrable = v.a > 0 && v.euler_b() > 0;
      rep.reasons.push_back("integrable.exceptional_upper");
    } else if (lower_exceptional) {
      rep.integrable = v.a > 0 && v.b > 0;
      rep.reasons.push_back("integrable.exceptional_lower");
    } else {
      rep.integrable = generic_ok;
      rep.reasons.push_back("integrable.generic");
    }
  } else {
    rep.reasons.push_back("integrable: density changes sign");
  }
  rep.in_Theta = theta_exists(theta_from_classic(v));
  if (!rep.in_Theta) rep.reasons.push_back("theta existence violated");
  return rep;
}

enum class TransformKind { kIdentity, kM, kPi, kT, kS, kTS };

using Matrix5 = std::array<std::array<int, 5>, 5>;
using Matrix25 = std::array<std::array<int, 5>, 2>;

// Image of the basic identity: X ~ BH(v), W ~ beta2(Pi v) gives
// 1/(1+XW) ~ BH(M v).
inline constexpr Matrix5 kMatrixM = {{{-1, 0, 0, 0, 1},
                                      {1, 1, -1, 0, 0},
                                      {0, 1, -1, -1, 1},
                                      {0, 1, 0, 0, 0},
                                      {0, 1, 0, -1, 1}}};
inline constexpr Matrix25 kMatrixPi = {{{1, 1, -1, 0, 0}, {-1, 0, 0, 0, 1}}};
// Swap of p and q.
inline constexpr Matrix5 kMatrixT = {{{1, 0, 0, 0, 0},
                                      {0, 1, 0, 0, 0},
                                      {0, 0, 0, 1, 0},
                                      {0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 1}}};
// Euler transform (a, b, p, q, r) -> (a, r+b-p-q, r-p, r-q, r).
inline constexpr Matrix5 kMatrixS = {{{1, 0, 0, 0, 0},
                                      {0, 1, -1, -1, 1},
                                      {0, 0, -1, 0, 1},
                                      {0, 0, 0, -1, 1},
                                      {0, 0, 0, 0, 1}}};

inline constexpr Matrix5 kIdentity5 = {{{1, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0},
                                        {0, 0, 1, 0, 0},
                                        {0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 1}}};

inline constexpr Matrix5 matmul(const Matrix5& x, const Matrix5& y) {
  Matrix5 out{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

inline constexpr Matrix25 matmul(const Matrix25& x, const Matrix5& y) {
  Matrix25 out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

inline Matrix5 transform_matrix(TransformKind kind) {
  switch (kind) {
    case TransformKind::kM:
      return kMatrixM;
    case TransformKind::kT:
      return kMatrixT;
    case TransformKind::kS:
      return kMatrixS;
    case TransformKind::kTS:
      return matmul(kMatrixT, kMatrixS);
    case TransformKind::kIdentity:
      return kIdentity5;
    case TransformKind::kPi:
      break;
  }
  throw DomainError("transform_matrix: Pi is 2x5, use apply_pi");
}

inline ClassicParams apply_transform(const ClassicParams& v, TransformKind kind) {
  const Matrix5 m = transform_matrix(kind);
  const auto x = v.to_array();
  std::array<double, 5> out{};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) out[i] += m[i][j] * x[j];
  return ClassicParams::from_array(out);
}

// Shape pair (a+b-p, r-a) of the beta-prime variable in the basic identity.
inline std::pair<double, double> apply_pi(const ClassicParams& v) {
  return {v.a + v.b - v.p, v.r - v.a};
}

// Lexicographically smallest member of {v, Tv, Sv, TSv}.
inline ClassicParams canonicalize(const ClassicParams& v) {
  const ClassicParams s = apply_transform(v, TransformKind::kS);
  return std::min({v, apply_transform(v, TransformKind::kT), s,
                   apply_transform(s, TransformKind::kT)});
}

struct DegenerateForm {
  enum class Kind { kNone, kBeta, kQuasiBeta };
  Kind kind = Kind::kNone;
  double a = 0, u = 0, slope = 0;
};

// Densities that reduce to x^{a-1}(1-x)^{u-1} or x^{a-1}(1-x)^{u-1}(1-slope x).
inline DegenerateForm degenerate_form(const ClassicParams& v) {
  using Kind = DegenerateForm::Kind;
  auto eq = [](double x, double y) { return std::abs(x - y) <= kIntegerTolerance; };
  for (const auto& [p, q] : {std::pair{v.p, v.q}, std::pair{v.q, v.p}}) {
    if (eq(p, 0)) return {Kind::kBeta, v.a, v.b, 0};
    if (eq(p, v.r)) return {Kind::kBeta, v.a, v.b - q, 0};
  }
  for (const auto& [p, q] : {std::pair{v.p, v.q}, std::pair{v.q, v.p}}) {
    if (eq(p, -1)) return {Kind::kQuasiBeta, v.a, v.b, q / v.r};
    if (eq(p, v.r + 1)) return {Kind::kQuasiBeta, v.a, v.b - q - 1, (v.r - q) / v.r};
  }
  return {};
}

}  // namespace betafrac

#endif  // BETAFRAC_PARAMS_HPP_
