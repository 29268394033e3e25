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

#include "ergocap/jacobi_capacity.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ergocap/errors.hpp"
#include "ergocap/specfun.hpp"

namespace ergocap::jacobi {

using specfun::ln_gamma;

JacobiParams jacobi_params(const ChannelDims& dims) {
  dims.validate();
  if (dims.m < dims.m_t + dims.m_r) {
    throw DimensionError("jacobi_params: m < m_t + m_r (m=" + std::to_string(dims.m) +
                         ", m_t=" + std::to_string(dims.m_t) +
                         ", m_r=" + std::to_string(dims.m_r) + "); use the decomposition");
  }
  const int mt = std::min(dims.m_t, dims.m_r);
  const int mr = std::max(dims.m_t, dims.m_r);
  return {static_cast<double>(mr - mt + 1), static_cast<double>(dims.m - mt - mr + 1), mt,
          dims.m_t};
}

double const_A(const JacobiParams& p) {
  const double a = p.a, b = p.b;
  const int n = p.n;
  // (a+b+n-1)_n = Gamma(a+b+2n-1) / Gamma(a+b+n-1)
  return std::exp(std::log(a + n - 1.0) + ln_gamma(n + 1.0) -
                  (ln_gamma(a + b + 2.0 * n - 1.0) - ln_gamma(a + b + n - 1.0)));
}

double const_B(const JacobiParams& p) {
  const double a = p.a, b = p.b;
  const int n = p.n;
  if (!(a + n - 1.0 > 0.0) || !(n + b - 1.0 > 0.0)) {
    throw DomainError("const_B: needs a + n - 1 > 0 and n + b - 1 > 0");
  }
  return std::exp(ln_gamma(n + 1.0) + ln_gamma(a + b + n - 1.0) - ln_gamma(a + n - 1.0) -
                  ln_gamma(n + b - 1.0));
}

double selberg_log_norm(const JacobiParams& p) {
  double s = 0.0;
  for (int j = 1; j <= p.n; ++j) {
    s += ln_gamma(p.a + j - 1.0) + ln_gamma(p.b + j - 1.0) + ln_gamma(1.0 + j) -
         ln_gamma(p.a + p.b + p.n + j - 2.0);
  }
  return s;
}

double joint_density(const JacobiParams& p, std::span<const double> lambdas) {
  if (static_cast<int>(lambdas.size()) != p.n) {
    throw DimensionError("joint_density: expected " + std::to_string(p.n) + " eigenvalues");
  }
  // Z normalizes over the unordered cube; the ordered simplex carries n! of it.
  double log_f = ln_gamma(p.n + 1.0) - selberg_log_norm(p);
  for (std::size_t j = 0; j < lambdas.size(); ++j) {
    const double l = lambdas[j];
    if (!(l > 0.0 && l < 1.0) || (j > 0 && !(lambdas[j - 1] < l))) {
      throw DomainError("joint_density: eigenvalues must satisfy 0 < l_1 < ... < l_n < 1");
    }
    log_f += (p.a - 1.0) * std::log(l) + (p.b - 1.0) * std::log1p(-l);
    for (std::size_t k = 0; k < j; ++k) log_f += 2.0 * std::log(l - lambdas[k]);
  }
  return std::exp(log_f);
}

namespace {

CapacityEstimate finish(Method method, double value, const quadrature::IntegrationResult& r,
                        double rho_eff, SnrScaling scaling) {
  CapacityEstimate est;
  est.method = method;
  est.err = r.achieved_rtol * std::abs(value);
  if (value < 0.0) {
    // Only round-off may push a capacity below zero.
    if (value < -std::max(est.err, 1e-14)) {
      throw NumericalError(std::string(to_string(method)) + ": negative capacity " +
                           std::to_string(value));
    }
    value = 0.0;
  }
  est.nats = value;
  est.meta.n_used = r.n_used;
  est.meta.rho_eff = rho_eff;
  est.meta.scaling = scaling;
  return est;
}

CapacityEstimate zero_capacity(Method method, double rho_eff, SnrScaling scaling) {
  CapacityEstimate est;
  est.method = method;
  est.meta.rho_eff = rho_eff;
  est.meta.scaling = scaling;
  return est;
}

}  // namespace

CapacityEstimate capacity_theorem1(const JacobiParams& p, const Snr& snr,
                                   const quadrature::IntegrationOptions& opts) {
  if (!(p.a > 0.0) || !(p.b > 1.0) || p.n < 1) {
    throw DomainError("capacity_theorem1: needs a > 0, b > 1, n >= 1 (a=" + std::to_string(p.a) +
                      ", b=" + std::to_string(p.b) + ")");
  }
  const double rho = snr.effective(p.transmit());
  if (!(rho >= 0.0)) throw DomainError("capacity_theorem1: rho must be >= 0");
  if (rho == 0.0) return zero_capacity(Method::kTheorem1, rho, snr.scaling);

  const double a = p.a, b = p.b;
  const int n = p.n;
  const auto integrand = [=](double u) {
    const double x = 1.0 - 2.0 * u;
    return specfun::jacobi_p(n - 1, a - 1.0, b, x) * specfun::jacobi_p(n, a - 1.0, b - 2.0, x) *
           specfun::dilog_inner(rho * u);
  };
  const auto factory = [=](int nq) {
    return quadrature::graded_jacobi01(nq, a - 1.0, b - 2.0, 1.0 / rho);
  };
  const auto r = quadrature::integrate_converged(factory, integrand, opts);
  return finish(Method::kTheorem1, -const_B(p) * r.value, r, rho, snr.scaling);
}

CapacityEstimate capacity_cd_reference(const JacobiParams& p, const Snr& snr,
                                       const quadrature::IntegrationOptions& opts) {
  if (!(p.a > 0.0) || !(p.b > 0.0) || p.n < 1) {
    throw DomainError("capacity_cd_reference: needs a > 0, b > 0, n >= 1");
  }
  const double rho = snr.effective(p.transmit());
  if (!(rho >= 0.0)) throw DomainError("capacity_cd_reference: rho must be >= 0");
  if (rho == 0.0) return zero_capacity(Method::kCdReference, rho, snr.scaling);

  const double a = p.a, b = p.b;
  const int n = p.n;
  // 1 / h_k for the [0,1] norms h_k = int l^{a-1}(1-l)^{b-1} P_k^{a-1,b-1}(1-2l)^2 dl.
  std::vector<double> inv_norm(n);
  for (int k = 0; k < n; ++k) {
    const double ln_h = k == 0 ? specfun::ln_beta(a, b)
                               : ln_gamma(k + a) + ln_gamma(k + b) -
                                     std::log(2.0 * k + a + b - 1.0) - ln_gamma(k + a + b - 1.0) -
                                     ln_gamma(k + 1.0);
    inv_norm[k] = std::exp(-ln_h);
  }
  const auto integrand = [=, &inv_norm](double l) {
    const double x = 1.0 - 2.0 * l;
    double kernel = 0.0;
    for (int k = 0; k < n; ++k) {
      const double pk = specfun::jacobi_p(k, a - 1.0, b - 1.0, x);
      kernel += pk * pk * inv_norm[k];
    }
    return std::log1p(rho * l) * kernel;
  };
  const auto factory = [=](int nq) {
    return quadrature::graded_jacobi01(nq, a - 1.0, b - 1.0, 1.0 / rho);
  };
  const auto r = quadrature::integrate_converged(factory, integrand, opts);
  return finish(Method::kCdReference, r.value, r, rho, snr.scaling);
}

double ensemble_moment(const JacobiParams& p, int k) {
  if (k < 1) throw DomainError("ensemble_moment: k must be >= 1");
  const double a = p.a, b = p.b;
  const int n = p.n;
  // Terms with i >= n contain the factor (n + j) at j = -n and vanish; for
  // i < n every factor of the product is positive, so the product is summed
  // as a logarithm.
  double sum = 0.0;
  const double ln_k_fact = ln_gamma(k + 1.0);
  for (int i = 0; i < std::min(k, n); ++i) {
    double ln_term = ln_gamma(static_cast<double>(k)) - ln_gamma(i + 1.0) -
                     ln_gamma(static_cast<double>(k - i)) - ln_k_fact;
    for (int j = -i; j <= k - i - 1; ++j) {
      ln_term += std::log(n + j) + std::log(a + n + j - 1.0) - std::log(a + b + 2.0 * n + j - 2.0);
    }
    const double term = std::exp(ln_term);
    sum += (i % 2 == 0) ? term : -term;
  }
  return sum;
}

CapacityEstimate capacity_moment_series(const JacobiParams& p, const Snr& snr, int terms) {
  const double rho = snr.effective(p.transmit());
  if (!(rho >= 0.0 && rho < 1.0)) {
    throw DomainError("capacity_moment_series: needs 0 <= rho_eff < 1, got " +
                      std::to_string(rho));
  }
  if (terms < 1) throw DomainError("capacity_moment_series: need at least one term");
  CapacityEstimate est;
  est.method = Method::kMomentSeries;
  est.meta.terms = terms;
  est.meta.rho_eff = rho;
  est.meta.scaling = snr.scaling;
  if (rho == 0.0) return est;

  double sum = 0.0;
  double rho_k = 1.0;
  for (int k = 1; k <= terms; ++k) {
    rho_k *= rho;
    const double term = rho_k * ensemble_moment(p, k) / k;
    sum += (k % 2 == 1) ? term : -term;
  }
  est.nats = std::max(sum, 0.0);
  est.err = p.n * std::pow(rho, terms + 1) / ((terms + 1.0) * (1.0 - rho));
  return est;
}

double prop1_rhs(const JacobiParams& p, double rho) {
  if (!(rho > 0.0 && rho < 1.0)) {
    throw DomainError("prop1_rhs: needs 0 < rho < 1, got " + std::to_string(rho));
  }
  const int n = p.n;
  const double poly = specfun::jacobi_p(n - 1, p.a - 1.0, p.b, (rho + 2.0) / rho);
  const double hyp =
      specfun::gauss_2f1({n + 1.0, p.a + n, p.a + p.b + 2.0 * n - 1.0, -rho});
  return const_A(p) * std::pow(rho, n - 1) * poly * hyp;
}

CapacityEstimate capacity_decomposed(const ChannelDims& dims, const Snr& snr,
                                     const quadrature::IntegrationOptions& opts, Method inner) {
  dims.validate();
  if (dims.m >= dims.m_t + dims.m_r) {
    throw DimensionError("capacity_decomposed: needs m < m_t + m_r");
  }
  if (inner != Method::kTheorem1 && inner != Method::kCdReference) {
    throw DomainError("capacity_decomposed: inner method must be theorem1 or cd_reference");
  }
  const double rho = snr.effective(dims.m_t);
  if (!(rho >= 0.0)) throw DomainError("capacity_decomposed: rho must be >= 0");
  const int unit = dims.m_t + dims.m_r - dims.m;
  const ChannelDims rest{dims.m, dims.m - dims.m_r, dims.m - dims.m_t};

  CapacityEstimate est;
  est.method = Method::kDecomposition;
  est.meta.rho_eff = rho;
  est.meta.scaling = snr.scaling;
  est.meta.inner = inner;
  est.nats = unit * std::log1p(rho);
  if (rest.m_t == 0 || rest.m_r == 0) return est;

  // The complementary channel always has m > m_t + m_r (its b is >= 2).
  const JacobiParams p = jacobi_params(rest);
  const Snr inner_snr{rho, SnrScaling::kPerMode};
  const CapacityEstimate part = inner == Method::kTheorem1
                                    ? capacity_theorem1(p, inner_snr, opts)
                                    : capacity_cd_reference(p, inner_snr, opts);
  est.nats += part.nats;
  est.err = part.err;
  est.meta.n_used = part.meta.n_used;
  return est;
}

CapacityEstimate capacity(const ChannelDims& dims, const Snr& snr, Method method,
                          const quadrature::IntegrationOptions& opts) {
  if (method != Method::kTheorem1 && method != Method::kCdReference) {
    throw DomainError("jacobi::capacity: method must be theorem1 or cd_reference");
  }
  dims.validate();
  if (dims.m < dims.m_t + dims.m_r) {
    auto est = capacity_decomposed(dims, snr, opts, method);
    est.meta.note = "m < m_t + m_r: decomposition into " +
                    std::to_string(dims.m_t + dims.m_r - dims.m) +
                    " unit eigenvalues plus channel (m=" + std::to_string(dims.m) +
                    ", m_t=" + std::to_string(dims.m - dims.m_r) +
                    ", m_r=" + std::to_string(dims.m - dims.m_t) + ") via " +
                    std::string(to_string(method));
    return est;
  }
  const JacobiParams p = jacobi_params(dims);
  if (method == Method::kTheorem1 && p.b <= 1.0) {
    auto est = capacity_cd_reference(p, snr, opts);
    est.meta.note = "b = 1 (m = m_t + m_r): theorem1 weight not integrable, used cd_reference";
    return est;
  }
  return method == Method::kTheorem1 ? capacity_theorem1(p, snr, opts)
                                     : capacity_cd_reference(p, snr, opts);
}

}  // namespace ergocap::jacobi
