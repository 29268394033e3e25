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

#ifndef ERGOCAP_RNG_HPP_
#define ERGOCAP_RNG_HPP_

#include <complex>
#include <cstdint>
#include <random>

namespace ergocap {

/// Seedable pseudo-random stream. The pair (seed, stream_id) fully
/// determines the sequence; distinct stream ids are seeded through
/// std::seed_seq so parallel chunks get decorrelated engines.
///
/// Uniforms are built from the top 53 bits of std::mt19937_64 and normals by
/// Box-Muller, so the output is bit-identical on every conforming standard
/// library (std::*_distribution is implementation-defined and is avoided).
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Uniform on [0, 1).
  double uniform();

  /// Standard normal N(0, 1). Box-Muller produces pairs; the second value is
  /// cached for the next call.
  double normal();

  /// Circularly-symmetric complex Gaussian CN(0, 1): real and imaginary
  /// parts independent N(0, 1/2).
  std::complex<double> complex_normal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double cached_normal_ = 0.0;
  bool has_cached_ = false;
};

}  // namespace ergocap

#endif  // ERGOCAP_RNG_HPP_
