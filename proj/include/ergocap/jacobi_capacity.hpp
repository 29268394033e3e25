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

// Ergodic capacity of the Jacobi (optical SDM) MIMO channel.
//
// For a Haar-distributed m x m unitary, the m_r x m_t upper-left corner H
// has squared singular values distributed as the Jacobi ensemble with
// a = m_r - m_t + 1, b = m - m_t - m_r + 1, n = m_t (taking m_t <= m_r).
// The capacity E[ln det(I + rho H^dagger H)] is available here four ways:
//
//   theorem1       double integral, outer Gauss-Jacobi in u^{a-1}(1-u)^{b-2}
//   cd_reference   one-point density (Christoffel-Darboux kernel diagonal)
//   moment_series  power series in rho from the ensemble moments, rho < 1
//   decomposition  m < m_t + m_r: unit eigenvalues plus a smaller channel

#ifndef ERGOCAP_JACOBI_CAPACITY_HPP_
#define ERGOCAP_JACOBI_CAPACITY_HPP_

#include <span>

#include "ergocap/channel.hpp"
#include "ergocap/quadrature.hpp"

namespace ergocap::jacobi {

/// (a, b, n) for a channel with m >= m_t + m_r, swapping m_t and m_r if
/// needed. Throws DimensionError if m < m_t + m_r.
JacobiParams jacobi_params(const ChannelDims& dims);

/// A_{a,b,n} = (a+n-1) n! / (a+b+n-1)_n.
double const_A(const JacobiParams& p);

/// B_{a,b,n} = n! Gamma(a+b+n-1) / (Gamma(a+n-1) Gamma(n+b-1)). Throws
/// DomainError when a gamma argument is not positive.
double const_B(const JacobiParams& p);

/// ln of the Selberg normalization
///   Z = prod_{j=1}^n Gamma(a+j-1) Gamma(b+j-1) Gamma(1+j) / Gamma(a+b+n+j-2).
double selberg_log_norm(const JacobiParams& p);

/// Joint density of the ordered eigenvalues 0 < l_1 < ... < l_n < 1.
/// Throws DomainError if the input is not strictly ordered inside (0, 1).
double joint_density(const JacobiParams& p, std::span<const double> lambdas);

/// Double-integral capacity
///   C = -B int_0^1 u^{a-1} (1-u)^{b-2} P_{n-1}^{a-1,b}(1-2u) P_n^{a-1,b-2}(1-2u)
///             Li(rho u) du,     Li(t) = int_0^t ln(1+s)/s ds.
/// Requires a > 0 and b > 1 (DomainError otherwise; see capacity()).
CapacityEstimate capacity_theorem1(const JacobiParams& p, const Snr& snr,
                                   const quadrature::IntegrationOptions& opts = {});

/// int_0^1 ln(1 + rho l) K_n(l, l) l^{a-1} (1-l)^{b-1} dl with K_n the
/// Christoffel-Darboux kernel of the shifted Jacobi weight. Valid for b > 0,
/// including b = 1.
CapacityEstimate capacity_cd_reference(const JacobiParams& p, const Snr& snr,
                                       const quadrature::IntegrationOptions& opts = {});

/// sum_{k=1}^K (-1)^{k-1} rho^k M_k / k with M_k = E[sum_i l_i^k]. Requires
/// 0 <= rho_eff < 1. `err` is the tail bound n rho^{K+1} / ((K+1)(1-rho)).
CapacityEstimate capacity_moment_series(const JacobiParams& p, const Snr& snr, int terms);

/// The k-th moment E[sum_i l_i^k] of the ensemble.
double ensemble_moment(const JacobiParams& p, int k);

/// Right-hand side of the second-order identity
///   d/drho (rho dC/drho) = A rho^{n-1} P_{n-1}^{a-1,b}((rho+2)/rho)
///                          2F1(n+1, a+n; a+b+2n-1; -rho),
/// for 0 < rho < 1 (per-mode rho).
double prop1_rhs(const JacobiParams& p, double rho);

/// Channel with m < m_t + m_r: (m_t + m_r - m) ln(1 + rho_eff) plus the
/// capacity of the (m, m - m_r, m - m_t) channel at the same rho_eff,
/// evaluated with `inner` (theorem1 or cd_reference). Throws DimensionError
/// if m >= m_t + m_r.
CapacityEstimate capacity_decomposed(const ChannelDims& dims, const Snr& snr,
                                     const quadrature::IntegrationOptions& opts = {},
                                     Method inner = Method::kTheorem1);

/// Front door for integer channels. Routes m < m_t + m_r through
/// capacity_decomposed and b = 1 requests for theorem1 to cd_reference; every
/// rerouting is recorded in meta.note. `method` is kTheorem1 or
/// kCdReference.
CapacityEstimate capacity(const ChannelDims& dims, const Snr& snr,
                          Method method = Method::kTheorem1,
                          const quadrature::IntegrationOptions& opts = {});

}  // namespace ergocap::jacobi

#endif  // ERGOCAP_JACOBI_CAPACITY_HPP_
