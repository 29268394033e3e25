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

#ifndef ERGOCAP_QUADRATURE_HPP_
#define ERGOCAP_QUADRATURE_HPP_

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace ergocap::quadrature {

/// Weight u^p (1-u)^q on [0, 1].
struct Jacobi01 {
  double p = 0.0;
  double q = 0.0;
};

/// Weight u^alpha e^{-u} on [0, inf).
struct Laguerre {
  double alpha = 0.0;
};

/// Composite rule for one of the weights above, graded geometrically toward
/// u = 0 at length scale `scale`. Each panel is a Gauss rule in its own local
/// weight; the remaining weight factor is folded into the panel weights, so
/// the rule still approximates the integral against the parent weight.
struct Graded {
  std::variant<Jacobi01, Laguerre> parent;
  double scale = 0.0;
  int panels = 0;
};

using RuleKind = std::variant<Jacobi01, Laguerre, Graded>;

struct QuadratureRule {
  RuleKind kind;
  std::vector<double> nodes;    // strictly increasing
  std::vector<double> weights;  // positive; may underflow to 0 far out on [0, inf)
  /// 2N-1 for Gauss rules; -1 for graded composites, whose folded weight
  /// factors are not polynomial.
  int exactness_degree = -1;

  std::size_t size() const noexcept { return nodes.size(); }

  template <class F>
  double integrate(F&& f) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
    return sum;
  }
};

/// N-point Gauss rule for u^p (1-u)^q on [0, 1] by Golub-Welsch on the
/// shifted-Jacobi recurrence, with Newton-polished nodes and weights from the
/// Christoffel function. Exact for polynomials of degree <= 2N-1. Rules are
/// cached per (p, q, N); the cache is shared across threads and readers do
/// not block each other. Throws DomainError for N < 1, p <= -1 or q <= -1.
QuadratureRule gauss_jacobi01(int n, double p, double q);

/// N-point generalized Gauss-Laguerre rule for u^alpha e^{-u}. From about
/// N = 200 the outermost weights fall below the double range and are 0.
/// Throws DomainError for N < 1 or alpha <= -1.
QuadratureRule gauss_laguerre(int n, double alpha);

/// Rule for u^p (1-u)^q that also resolves features of width ~`scale` at the
/// origin (e.g. the branch point of ln(1 + u/scale) at u = -scale). Returns
/// the plain gauss_jacobi01 rule when `scale` is not small compared to the
/// weight's mass scale; otherwise panels [0, s], [s, 4s], [4s, 16s], ... up
/// to the mass scale, then a Gauss-Jacobi tail panel to 1. Every panel uses
/// N nodes.
QuadratureRule graded_jacobi01(int n, double p, double q, double scale);

/// Laguerre counterpart of graded_jacobi01; the tail panel [T, inf) uses a
/// shifted Gauss-Laguerre rule.
QuadratureRule graded_laguerre(int n, double alpha, double scale);

using RuleFactory = std::function<QuadratureRule(int)>;

struct IntegrationOptions {
  int n_initial = 64;
  int n_max = 4096;
  double rtol = 1e-10;
};

struct IntegrationResult {
  double value = 0.0;
  double achieved_rtol = 0.0;
  int n_used = 0;
};

/// Evaluates sum_i w_i f(u_i) for rules of size N0, 2 N0, 4 N0, ... until
/// two successive values agree to `rtol` (or to the round-off floor of
/// sum_i w_i |f(u_i)|). Throws ConvergenceError carrying the last two values
/// if N would exceed `n_max`.
IntegrationResult integrate_converged(const RuleFactory& factory,
                                      const std::function<double(double)>& f,
                                      const IntegrationOptions& opts = {});

std::string describe(const RuleKind& kind);

}  // namespace ergocap::quadrature

#endif  // ERGOCAP_QUADRATURE_HPP_
