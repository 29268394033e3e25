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

// Value types shared by the capacity engines, the Monte Carlo oracle and
// the CLI.

#ifndef ERGOCAP_CHANNEL_HPP_
#define ERGOCAP_CHANNEL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace ergocap {

/// Optical SDM channel: m fiber modes, m_t addressed at the transmitter and
/// m_r at the receiver.
struct ChannelDims {
  int m = 0;
  int m_t = 0;
  int m_r = 0;

  /// Throws DimensionError unless 1 <= m_t, m_r <= m.
  void validate() const;
};

/// Wireless MIMO channel with i.i.d. CN(0,1) gains.
struct GaussianDims {
  int m_t = 0;
  int m_r = 0;

  void validate() const;
  int n() const noexcept { return m_t < m_r ? m_t : m_r; }
  int alpha() const noexcept { return m_t < m_r ? m_r - m_t : m_t - m_r; }
};

/// Jacobi ensemble parameters (a, b, n). `transmit_modes` remembers the
/// caller's m_t before the m_t <= m_r canonicalization, for total-power SNR.
struct JacobiParams {
  double a = 1.0;
  double b = 1.0;
  int n = 1;
  int transmit_modes = 0;  // 0 means "same as n"

  int transmit() const noexcept { return transmit_modes > 0 ? transmit_modes : n; }
};

enum class SnrScaling {
  kPerMode,     // ln det(I + rho H^dagger H)
  kTotalPower,  // ln det(I + (rho / m_t) H^dagger H)
};

struct Snr {
  double rho = 0.0;  // linear
  SnrScaling scaling = SnrScaling::kPerMode;

  /// The factor that multiplies H^dagger H for a channel with `m_t`
  /// transmit modes.
  double effective(int m_t) const noexcept {
    return scaling == SnrScaling::kTotalPower ? rho / m_t : rho;
  }
};

enum class Method {
  kTheorem1,
  kCdReference,
  kMomentSeries,
  kDecomposition,
  kMc,
  kTheorem2,
  kLaguerreReference,
};

struct EstimateMeta {
  int n_used = 0;             // quadrature size (per panel)
  int terms = 0;              // series terms
  long samples = 0;           // Monte Carlo draws
  std::uint64_t seed = 0;
  double rho_eff = 0.0;
  SnrScaling scaling = SnrScaling::kPerMode;
  Method inner = Method::kTheorem1;  // analytic route behind kDecomposition
  std::string note;           // fallbacks and routing diagnostics
};

/// Ergodic capacity in nats. `err` is an absolute error indicator: the last
/// quadrature doubling change, the series tail bound, or the MC standard
/// error.
struct CapacityEstimate {
  double nats = 0.0;
  Method method = Method::kTheorem1;
  double err = 0.0;
  EstimateMeta meta;
};

std::string_view to_string(Method m);
std::string_view to_string(SnrScaling s);

}  // namespace ergocap

#endif  // ERGOCAP_CHANNEL_HPP_
