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

#include "ergocap/channel.hpp"

#include "ergocap/errors.hpp"

namespace ergocap {

void ChannelDims::validate() const {
  if (m < 1 || m_t < 1 || m_r < 1) {
    throw DimensionError("channel dimensions must be positive (m=" + std::to_string(m) +
                         ", m_t=" + std::to_string(m_t) + ", m_r=" + std::to_string(m_r) + ")");
  }
  if (m_t > m || m_r > m) {
    throw DimensionError("need m_t <= m and m_r <= m (m=" + std::to_string(m) +
                         ", m_t=" + std::to_string(m_t) + ", m_r=" + std::to_string(m_r) + ")");
  }
}

void GaussianDims::validate() const {
  if (m_t < 1 || m_r < 1) {
    throw DimensionError("antenna counts must be positive (m_t=" + std::to_string(m_t) +
                         ", m_r=" + std::to_string(m_r) + ")");
  }
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::kTheorem1: return "theorem1";
    case Method::kCdReference: return "cd_reference";
    case Method::kMomentSeries: return "moment_series";
    case Method::kDecomposition: return "decomposition";
    case Method::kMc: return "mc";
    case Method::kTheorem2: return "theorem2";
    case Method::kLaguerreReference: return "laguerre_reference";
  }
  return "unknown";
}

std::string_view to_string(SnrScaling s) {
  return s == SnrScaling::kTotalPower ? "total_power" : "per_mode";
}

}  // namespace ergocap
