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

#include "ergocap/mc_oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "ergocap/errors.hpp"
#include "ergocap/linalg.hpp"
#include "ergocap/rng.hpp"

namespace ergocap::mc {

namespace {

// Welford running moments; merged pairwise with Chan's update.
struct Moments {
  long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double delta = x - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double n = static_cast<double>(count + o.count);
    const double delta = o.mean - mean;
    mean += delta * static_cast<double>(o.count) / n;
    m2 += o.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(o.count) / n;
    count += o.count;
  }
};

void check_options(const McOptions& opts) {
  if (opts.samples < 2) throw DomainError("Monte Carlo: need at least 2 samples");
  if (opts.chunk_size < 1) throw DomainError("Monte Carlo: chunk size must be positive");
}

// `sample(rng, values)` fills one value per probe and returns how many
// degenerate draws it discarded.
template <class SampleFn>
std::vector<McEstimate> run_chunks(std::size_t num_probes, const McOptions& opts,
                                   SampleFn&& sample) {
  check_options(opts);
  const long num_chunks = (opts.samples + opts.chunk_size - 1) / opts.chunk_size;
  std::vector<std::vector<Moments>> chunk_moments(num_chunks,
                                                  std::vector<Moments>(num_probes));
  std::vector<long> chunk_resampled(num_chunks, 0);

  std::atomic<long> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    std::vector<double> values(num_probes);
    try {
      for (long c = next++; c < num_chunks; c = next++) {
        RngStream rng(opts.seed, static_cast<std::uint64_t>(c));
        const long begin = c * opts.chunk_size;
        const long end = std::min(opts.samples, begin + opts.chunk_size);
        auto& moments = chunk_moments[c];
        for (long s = begin; s < end; ++s) {
          chunk_resampled[c] += sample(rng, std::span<double>(values));
          for (std::size_t p = 0; p < num_probes; ++p) moments[p].add(values[p]);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next = num_chunks;
    }
  };

  const int threads = static_cast<int>(std::min<long>(
      opts.threads > 0 ? opts.threads : default_thread_count(), num_chunks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<McEstimate> out(num_probes);
  long resampled = 0;
  for (long c = 0; c < num_chunks; ++c) resampled += chunk_resampled[c];
  for (std::size_t p = 0; p < num_probes; ++p) {
    Moments total;
    for (long c = 0; c < num_chunks; ++c) total.merge(chunk_moments[c][p]);
    McEstimate& e = out[p];
    e.mean = total.mean;
    e.samples = total.count;
    e.seed = opts.seed;
    e.resampled = resampled;
    const double var = total.m2 / static_cast<double>(total.count - 1);
    e.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(total.count));
  }
  return out;
}

void check_probe(const Probe& p) {
  if (p.m_t < 1 || p.m_r < 1) throw DimensionError("Monte Carlo probe: dimensions must be positive");
  if (!(p.rho_eff >= 0.0)) throw DomainError("Monte Carlo probe: rho must be >= 0");
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("ERGOCAP_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<McEstimate> mc_haar_batch(int m, std::span<const Probe> probes,
                                      const McOptions& opts) {
  if (m < 1) throw DimensionError("mc_haar_batch: m must be positive");
  for (const auto& p : probes) {
    check_probe(p);
    if (p.m_t > m || p.m_r > m) {
      throw DimensionError("mc_haar_batch: probe (" + std::to_string(p.m_t) + "," +
                           std::to_string(p.m_r) + ") does not fit in m=" + std::to_string(m));
    }
  }
  const auto um = static_cast<std::size_t>(m);
  return run_chunks(probes.size(), opts, [&](RngStream& rng, std::span<double> values) {
    const auto u = linalg::haar_unitary(um, rng);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const auto h = linalg::corner(u, probes[i].m_r, probes[i].m_t);
      values[i] = linalg::logdet_id_plus_scaled_gram(h, probes[i].rho_eff);
    }
    return 0L;
  });
}

std::vector<McEstimate> mc_gaussian_batch(std::span<const Probe> probes, const McOptions& opts) {
  std::size_t rows = 1, cols = 1;
  for (const auto& p : probes) {
    check_probe(p);
    rows = std::max<std::size_t>(rows, p.m_r);
    cols = std::max<std::size_t>(cols, p.m_t);
  }
  return run_chunks(probes.size(), opts, [&](RngStream& rng, std::span<double> values) {
    const auto g = linalg::complex_gaussian(rows, cols, rng);
    for (std::size_t i = 0; i < probes.size(); ++i) {
      const auto h = linalg::corner(g, probes[i].m_r, probes[i].m_t);
      values[i] = linalg::logdet_id_plus_scaled_gram(h, probes[i].rho_eff);
    }
    return 0L;
  });
}

McEstimate mc_capacity_jacobi_haar(const ChannelDims& dims, const Snr& snr,
                                   const McOptions& opts) {
  dims.validate();
  const Probe probe{dims.m_t, dims.m_r, snr.effective(dims.m_t)};
  return mc_haar_batch(dims.m, std::span(&probe, 1), opts).front();
}

McEstimate mc_capacity_gaussian(const GaussianDims& dims, const Snr& snr,
                                const McOptions& opts) {
  dims.validate();
  const Probe probe{dims.m_t, dims.m_r, snr.effective(dims.m_t)};
  return mc_gaussian_batch(std::span(&probe, 1), opts).front();
}

McEstimate mc_capacity_jacobi_wishart(int m1, int m2, int n, const Snr& snr,
                                      const McOptions& opts) {
  if (n < 1 || m1 < n || m2 < n) {
    throw DimensionError("mc_capacity_jacobi_wishart: needs m1 >= n, m2 >= n, n >= 1");
  }
  const double rho = snr.effective(n);
  if (!(rho >= 0.0)) throw DomainError("mc_capacity_jacobi_wishart: rho must be >= 0");
  const auto un = static_cast<std::size_t>(n);
  return run_chunks(1, opts, [&](RngStream& rng, std::span<double> values) {
    long discarded = 0;
    while (true) {
      const auto x = linalg::gram(linalg::complex_gaussian(m1, un, rng));
      const auto y = linalg::gram(linalg::complex_gaussian(m2, un, rng));
      linalg::ComplexMatrix s(un, un), t(un, un);
      for (std::size_t i = 0; i < un; ++i)
        for (std::size_t j = 0; j < un; ++j) {
          s(i, j) = x(i, j) + y(i, j);
          t(i, j) = s(i, j) + rho * x(i, j);
        }
      try {
        values[0] = rho == 0.0 ? 0.0 : linalg::cholesky_logdet(t) - linalg::cholesky_logdet(s);
        return discarded;
      } catch (const NumericalError&) {
        ++discarded;
      }
    }
  }).front();
}

}  // namespace ergocap::mc
