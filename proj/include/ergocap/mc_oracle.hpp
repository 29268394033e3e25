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

// Seeded Monte Carlo estimators of ergodic capacity, computed from random
// channel realizations rather than eigenvalue densities.
//
// Samples are split into fixed-size chunks; chunk i draws from
// RngStream(seed, i) and keeps its own running mean and sum of squared
// deviations. Chunks may run on any number of threads, but they are merged
// in ascending index order, so an estimate depends only on (seed, samples,
// chunk_size).

#ifndef ERGOCAP_MC_ORACLE_HPP_
#define ERGOCAP_MC_ORACLE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "ergocap/channel.hpp"

namespace ergocap::mc {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(samples)
  long samples = 0;
  std::uint64_t seed = 0;
  long resampled = 0;      // degenerate draws that were discarded
};

struct McOptions {
  long samples = 100'000;
  std::uint64_t seed = 42;
  long chunk_size = 1'000;
  int threads = 0;  // 0: ERGOCAP_THREADS if set, else hardware concurrency
};

/// ERGOCAP_THREADS when it holds a positive integer, otherwise
/// std::thread::hardware_concurrency() (at least 1).
int default_thread_count();

/// Corner of a Haar unitary: per sample U = haar_unitary(m), H = the
/// m_r x m_t upper-left block, value ln det(I + rho_eff H^dagger H). Any
/// m >= max(m_t, m_r) is accepted.
McEstimate mc_capacity_jacobi_haar(const ChannelDims& dims, const Snr& snr,
                                   const McOptions& opts = {});

/// Wishart ratio: X = A^dagger A, Y = B^dagger B with A (m1 x n), B (m2 x n)
/// Gaussian; value ln det(X + Y + rho X) - ln det(X + Y). Samples the same
/// eigenvalue law as the Haar corner with a = m1 - n + 1, b = m2 - n + 1.
/// `snr` is applied per mode with n transmit modes.
McEstimate mc_capacity_jacobi_wishart(int m1, int m2, int n, const Snr& snr,
                                      const McOptions& opts = {});

/// i.i.d. CN(0,1) m_r x m_t channel.
McEstimate mc_capacity_gaussian(const GaussianDims& dims, const Snr& snr,
                                const McOptions& opts = {});

/// One (m_t, m_r, rho_eff) evaluation point inside a batched run.
struct Probe {
  int m_t = 1;
  int m_r = 1;
  double rho_eff = 0.0;
};

/// Evaluates every probe on the same Haar draws (common random numbers).
/// Each result equals what mc_capacity_jacobi_haar returns for that probe
/// with the same options.
std::vector<McEstimate> mc_haar_batch(int m, std::span<const Probe> probes,
                                      const McOptions& opts = {});

/// Gaussian counterpart: each sample draws one max(m_r) x max(m_t) matrix and
/// every probe reads its upper-left block (itself i.i.d. Gaussian).
std::vector<McEstimate> mc_gaussian_batch(std::span<const Probe> probes,
                                          const McOptions& opts = {});

}  // namespace ergocap::mc

#endif  // ERGOCAP_MC_ORACLE_HPP_
