// Copyright 2026 The ergocap Authors.
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

#include "ergocap/specfun.hpp"

#include <cmath>
#include <utility>
#include <numbers>
#include <string>

#include "ergocap/errors.hpp"

namespace ergocap::specfun {

double ln_gamma(double x) {
  if (!(x > 0.0)) {
    throw DomainError("ln_gamma: argument must be positive, got " +
                      std::to_string(x));
  }
#if defined(__GLIBC__)
  int sign = 0;
  return ::lgamma_r(x, &sign);
#else
  return std::lgamma(x);
#endif
}

double ln_beta(double x, double y) {
  return ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y);
}

double pochhammer(double x, int k) {
  if (k < 0) throw DomainError("pochhammer: k must be non-negative");
  double p = 1.0;
  for (int i = 0; i < k; ++i) {
    p *= x + i;
    if (p == 0.0) break;
  }
  return p;
}

namespace {

bool is_nonpositive_integer(double v) {
  return v <= 0.0 && std::floor(v) == v;
}

// Plain power series, z assumed to satisfy |z| < 1.
double hyp2f1_series(double theta, double sigma, double gamma, double z,
                     const Hyp2f1Options& opts) {
  double sum = 1.0;
  double term = 1.0;
  double prev_sum = 1.0;
  int small_in_a_row = 0;
  for (long k = 0; k < opts.max_terms; ++k) {
    const double kd = static_cast<double>(k);
    term *= (theta + kd) * (sigma + kd) / ((gamma + kd) * (kd + 1.0)) * z;
    prev_sum = sum;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) <= opts.rtol * std::abs(sum)) {
      // Two consecutive small terms guard against a single accidental dip.
      if (++small_in_a_row >= 2) return sum;
    } else {
      small_in_a_row = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge within " +
                             std::to_string(opts.max_terms) + " terms",
                         sum, prev_sum);
}

// Terminating series 1 + sum_{k<m} prod (a+j)(b+j)/((c+j)(j+1)) z, summed in
// extended precision; returns the sum and the sum of |terms|.
std::pair<long double, long double> polynomial_sum(long degree, double a, double b, double c,
                                                   double z) {
  long double sum = 1.0L, abs_sum = 1.0L, term = 1.0L;
  for (long k = 0; k < degree; ++k) {
    const long double kd = static_cast<long double>(k);
    term *= (a + kd) * (b + kd) / ((c + kd) * (kd + 1.0L)) * static_cast<long double>(z);
    sum += term;
    abs_sum += std::abs(term);
  }
  return {sum, abs_sum};
}

double hyp2f1_polynomial(double theta, double sigma, double gamma, double z) {
  // Terminate on the parameter that ends the series first.
  double a = sigma, b = theta;
  if (is_nonpositive_integer(theta) && (!is_nonpositive_integer(sigma) || theta > sigma)) {
    a = theta;
    b = sigma;
  }
  const long degree = static_cast<long>(-a);
  const auto [direct, direct_abs] = polynomial_sum(degree, a, b, gamma, z);
  // The terms may alternate and cancel; the reflection
  //   F(-m, b; c; z) = (c-b)_m / (c)_m F(-m, b; b-c-m+1; 1-z)
  // is used instead when its terms are smaller.
  const double reflected_gamma = b - gamma - static_cast<double>(degree) + 1.0;
  if (z > 0.0 && !is_nonpositive_integer(reflected_gamma)) {
    const int m = static_cast<int>(degree);
    const long double scale =
        static_cast<long double>(pochhammer(gamma - b, m)) / pochhammer(gamma, m);
    const auto [refl, refl_abs] = polynomial_sum(degree, a, b, reflected_gamma, 1.0 - z);
    if (std::abs(scale) * refl_abs < direct_abs) return static_cast<double>(scale * refl);
  }
  return static_cast<double>(direct);
}

// Generalized binomial coefficient C(r, k) for real r.
double binomial(double r, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c *= (r - k + i) / i;
  return c;
}

// Explicit finite sum for P_q^{alpha,beta}(x); used only where the
// recurrence coefficients degenerate (alpha + beta a small negative integer).
double jacobi_explicit(int q, double alpha, double beta, double x) {
  const double lo = (x - 1.0) / 2.0;
  const double hi = (x + 1.0) / 2.0;
  double sum = 0.0;
  for (int s = 0; s <= q; ++s) {
    sum += binomial(q + alpha, q - s) * binomial(q + beta, s) *
           std::pow(lo, s) * std::pow(hi, q - s);
  }
  return sum;
}

// sum_{k>=1} sign^(k-1) y^k / k^2 for 0 <= y <= 1/2.
double dilog_series(double y, double sign) {
  double sum = 0.0;
  double power = 1.0;
  double s = 1.0;
  for (int k = 1; k < 200; ++k) {
    power *= y;
    const double term = s * power / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    s *= sign;
  }
  return sum;
}

}  // namespace

double gauss_2f1(const HypergeometricArgs& args, const Hyp2f1Options& opts) {
  const auto [theta, sigma, gamma, z] = args;
  if (is_nonpositive_integer(gamma)) {
    throw DomainError("gauss_2f1: gamma must not be a non-positive integer");
  }
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(theta) || is_nonpositive_integer(sigma)) {
    return hyp2f1_polynomial(theta, sigma, gamma, z);
  }
  if (z >= 1.0) {
    throw DomainError("gauss_2f1: z must be < 1, got " + std::to_string(z));
  }
  if (z <= -1.0) {
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -theta) *
           hyp2f1_series(theta, gamma - sigma, gamma, w, opts);
  }
  return hyp2f1_series(theta, sigma, gamma, z, opts);
}

double jacobi_p(int q, double alpha, double beta, double x) {
  if (q < 0) throw DomainError("jacobi_p: degree must be non-negative");
  if (q == 0) return 1.0;
  const double ab = alpha + beta;
  double p_prev = 1.0;
  double p = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
  for (int n = 2; n <= q; ++n) {
    const double c = 2.0 * n + ab;
    const double a1 = 2.0 * n * (n + ab) * (c - 2.0);
    if (a1 == 0.0) return jacobi_explicit(q, alpha, beta, x);
    const double a2 = (c - 1.0) * (alpha * alpha - beta * beta);
    const double a3 = (c - 2.0) * (c - 1.0) * c;
    const double a4 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c;
    const double next = ((a2 + a3 * x) * p - a4 * p_prev) / a1;
    p_prev = p;
    p = next;
  }
  return p;
}

double laguerre_l(int q, double alpha, double x) {
  if (q < 0) throw DomainError("laguerre_l: degree must be non-negative");
  if (q == 0) return 1.0;
  double l_prev = 1.0;
  double l = 1.0 + alpha - x;
  for (int n = 1; n < q; ++n) {
    const double next = ((2.0 * n + 1.0 + alpha - x) * l - (n + alpha) * l_prev) /
                        (n + 1.0);
    l_prev = l;
    l = next;
  }
  return l;
}

double dilog_inner(double t) {
  if (!(t >= 0.0)) {
    throw DomainError("dilog_inner: argument must be non-negative, got " +
                      std::to_string(t));
  }
  if (t <= 0.5) return dilog_series(t, -1.0);
  if (t <= 1.0) {
    // Landen: -Li2(-t) = Li2(t/(1+t)) + ln^2(1+t)/2, with t/(1+t) <= 1/2.
    const double l = std::log1p(t);
    return dilog_series(t / (1.0 + t), 1.0) + 0.5 * l * l;
  }
  // Inversion: -Li2(-t) = pi^2/6 + ln^2(t)/2 + Li2(-1/t).
  const double l = std::log(t);
  return std::numbers::pi * std::numbers::pi / 6.0 + 0.5 * l * l -
         dilog_inner(1.0 / t);
}

}  // namespace ergocap::specfun
