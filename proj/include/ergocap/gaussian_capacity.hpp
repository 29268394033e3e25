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

// Ergodic capacity of the i.i.d. Rayleigh (complex Gaussian) MIMO channel,
// E[ln det(I + rho H^dagger H)] with H an m_r x m_t matrix of CN(0,1)
// entries. Both routes use the Laguerre weight u^alpha e^{-u},
// alpha = |m_r - m_t|, and n = min(m_t, m_r).

#ifndef ERGOCAP_GAUSSIAN_CAPACITY_HPP_
#define ERGOCAP_GAUSSIAN_CAPACITY_HPP_

#include "ergocap/channel.hpp"
#include "ergocap/quadrature.hpp"

namespace ergocap::gaussian {

/// -(n!/(n+alpha-1)!) int_0^inf u^alpha e^{-u} L_{n-1}^alpha(u) L_n^alpha(u)
///  Li(rho u) du, the large-b limit of the Jacobi double integral.
CapacityEstimate capacity_theorem2(const GaussianDims& dims, const Snr& snr,
                                   const quadrature::IntegrationOptions& opts = {});

/// One-point Laguerre density route:
///   int_0^inf ln(1 + rho l) sum_{k<n} k!/(k+alpha)! L_k^alpha(l)^2 l^alpha e^{-l} dl.
CapacityEstimate capacity_laguerre_reference(const GaussianDims& dims, const Snr& snr,
                                             const quadrature::IntegrationOptions& opts = {});

}  // namespace ergocap::gaussian

#endif  // ERGOCAP_GAUSSIAN_CAPACITY_HPP_
