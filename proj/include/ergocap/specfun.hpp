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

// Scalar special functions: log-gamma, Pochhammer symbols, the Gauss
// hypergeometric function 2F1 on the real line, Jacobi and Laguerre
// polynomials, and the dilogarithm-type integral that appears inside both
// double-integral capacity formulas.

#ifndef ERGOCAP_SPECFUN_HPP_
#define ERGOCAP_SPECFUN_HPP_

namespace ergocap::specfun {

/// ln Gamma(x) for x > 0. Throws DomainError for x <= 0.
double ln_gamma(double x);

/// ln B(x, y) = ln Gamma(x) + ln Gamma(y) - ln Gamma(x + y).
double ln_beta(double x, double y);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1), with (x)_0 = 1.
///
/// Evaluated as the direct product, so for x = -q (q a non-negative
/// integer) the result is (-1)^k q!/(q-k)! when k <= q and exactly 0 once
/// k > q. Throws DomainError for k < 0.
double pochhammer(double x, int k);

struct HypergeometricArgs {
  double theta = 0.0;
  double sigma = 0.0;
  double gamma = 1.0;
  double z = 0.0;
};

struct Hyp2f1Options {
  double rtol = 1e-14;
  long max_terms = 1'000'000;
};

/// Real-argument Gauss hypergeometric function 2F1(theta, sigma; gamma; z).
///
/// - theta or sigma a non-positive integer: the terminating polynomial is
///   summed term by term in extended precision (any real z), switching to
///   the reflection z -> 1 - z when that form has smaller terms.
/// - |z| < 1: power series to relative tolerance `opts.rtol`.
/// - z <= -1: Pfaff transformation
///     2F1(t, s; g; z) = (1-z)^(-t) 2F1(t, g-s; g; z/(z-1)),
///   which maps z into [1/2, 1).
///
/// Throws DomainError if gamma is a non-positive integer or z >= 1 for a
/// non-terminating series, ConvergenceError if the series does not meet the
/// tolerance within `opts.max_terms` terms.
double gauss_2f1(const HypergeometricArgs& args, const Hyp2f1Options& opts = {});

/// Jacobi polynomial P_q^{alpha,beta}(x) by the three-term recurrence.
/// Valid for any real x; alpha > -1 is not required.
double jacobi_p(int q, double alpha, double beta, double x);

/// Generalized Laguerre polynomial L_q^{alpha}(x) by the three-term
/// recurrence.
double laguerre_l(int q, double alpha, double x);

/// Integral of ln(1+s)/s over [0, t], i.e. -Li2(-t). Throws DomainError for
/// t < 0.
double dilog_inner(double t);

}  // namespace ergocap::specfun

#endif  // ERGOCAP_SPECFUN_HPP_
