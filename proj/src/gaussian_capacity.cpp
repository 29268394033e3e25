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

#include "ergocap/gaussian_capacity.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ergocap/errors.hpp"
#include "ergocap/specfun.hpp"

namespace ergocap::gaussian {

namespace {

CapacityEstimate make_estimate(Method method, double value,
                               const quadrature::IntegrationResult& r, double rho,
                               SnrScaling scaling) {
  CapacityEstimate est;
  est.method = method;
  est.err = r.achieved_rtol * std::abs(value);
  if (value < -std::max(est.err, 1e-14)) {
    throw NumericalError(std::string(to_string(method)) + ": negative capacity " +
                         std::to_string(value));
  }
  est.nats = std::max(value, 0.0);
  est.meta.n_used = r.n_used;
  est.meta.rho_eff = rho;
  est.meta.scaling = scaling;
  return est;
}

double checked_rho(const GaussianDims& dims, const Snr& snr) {
  dims.validate();
  const double rho = snr.effective(dims.m_t);
  if (!(rho >= 0.0)) throw DomainError("gaussian capacity: rho must be >= 0");
  return rho;
}

}  // namespace

CapacityEstimate capacity_theorem2(const GaussianDims& dims, const Snr& snr,
                                   const quadrature::IntegrationOptions& opts) {
  const double rho = checked_rho(dims, snr);
  if (rho == 0.0) {
    CapacityEstimate est;
    est.method = Method::kTheorem2;
    est.meta.scaling = snr.scaling;
    return est;
  }
  const int n = dims.n();
  const double alpha = dims.alpha();
  const double lead = std::exp(specfun::ln_gamma(n + 1.0) - specfun::ln_gamma(n + alpha));
  const auto integrand = [=](double u) {
    return specfun::laguerre_l(n - 1, alpha, u) * specfun::laguerre_l(n, alpha, u) *
           specfun::dilog_inner(rho * u);
  };
  const auto factory = [=](int nq) { return quadrature::graded_laguerre(nq, alpha, 1.0 / rho); };
  const auto r = quadrature::integrate_converged(factory, integrand, opts);
  return make_estimate(Method::kTheorem2, -lead * r.value, r, rho, snr.scaling);
}

CapacityEstimate capacity_laguerre_reference(const GaussianDims& dims, const Snr& snr,
                                             const quadrature::IntegrationOptions& opts) {
  const double rho = checked_rho(dims, snr);
  if (rho == 0.0) {
    CapacityEstimate est;
    est.method = Method::kLaguerreReference;
    est.meta.scaling = snr.scaling;
    return est;
  }
  const int n = dims.n();
  const double alpha = dims.alpha();
  std::vector<double> coef(n);
  for (int k = 0; k < n; ++k) {
    coef[k] = std::exp(specfun::ln_gamma(k + 1.0) - specfun::ln_gamma(k + alpha + 1.0));
  }
  const auto integrand = [=, &coef](double l) {
    double kernel = 0.0;
    for (int k = 0; k < n; ++k) {
      const double lk = specfun::laguerre_l(k, alpha, l);
      kernel += coef[k] * lk * lk;
    }
    return std::log1p(rho * l) * kernel;
  };
  const auto factory = [=](int nq) { return quadrature::graded_laguerre(nq, alpha, 1.0 / rho); };
  const auto r = quadrature::integrate_converged(factory, integrand, opts);
  return make_estimate(Method::kLaguerreReference, r.value, r, rho, snr.scaling);
}

}  // namespace ergocap::gaussian
