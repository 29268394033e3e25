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

#include "ergocap/selftest.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "ergocap/gaussian_capacity.hpp"
#include "ergocap/jacobi_capacity.hpp"
#include "ergocap/mc_oracle.hpp"
#include "ergocap/quadrature.hpp"
#include "ergocap/specfun.hpp"

namespace ergocap::selftest {

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Snr per_mode(double rho) { return {rho, SnrScaling::kPerMode}; }

Outcome jacobi_vs_hypergeometric() {
  double worst = 0.0;
  const double params[] = {0.0, 0.5, 1.0, 3.0};
  for (int q = 0; q <= 12; ++q) {
    double q_fact = 1.0;
    for (int i = 2; i <= q; ++i) q_fact *= i;
    for (double al : params)
      for (double be : params)
        for (int i = 0; i <= 20; ++i) {
          const double x = -1.0 + 0.1 * i;
          const double ref = specfun::pochhammer(al + 1.0, q) / q_fact *
                             specfun::gauss_2f1({-static_cast<double>(q), q + al + be + 1.0,
                                                 al + 1.0, 0.5 * (1.0 - x)});
          const double d = std::abs(specfun::jacobi_p(q, al, be, x) - ref) /
                           std::max(1.0, std::abs(ref));
          worst = std::max(worst, d);
        }
  }
  return {worst <= 1e-11, "max scaled deviation " + sci(worst)};
}

Outcome dilog_at_one() {
  const double d = std::abs(specfun::dilog_inner(1.0) - std::numbers::pi * std::numbers::pi / 12.0);
  return {d <= 1e-14, "deviation " + sci(d)};
}

// max_k |sum_i w_i u_i^k / M_k - 1| for k < 2N. ln M_0 comes from log-gamma
// and M_{k+1} / M_k = ratio(k) is exact; terms are formed in log space so
// large moments cannot overflow.
double moment_error(const quadrature::QuadratureRule& r, double ln_m0,
                    const std::function<long double(int)>& ratio) {
  double worst = 0.0;
  long double ln_m = ln_m0;
  for (int k = 0; k < 2 * static_cast<int>(r.size()); ++k) {
    long double sum = 0.0L;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r.weights[i] > 0.0)
        sum += std::exp(std::log(static_cast<long double>(r.weights[i])) +
                        k * std::log(static_cast<long double>(r.nodes[i])) - ln_m);
    }
    worst = std::max(worst, static_cast<double>(std::abs(sum - 1.0L)));
    ln_m += std::log(ratio(k));
  }
  return worst;
}

Outcome rule_exactness() {
  double worst = 0.0;
  for (int n : {8, 64, 128})
    for (double p : {0.0, 3.0})
      for (double q : {0.0, 11.0}) {
        worst = std::max(worst, moment_error(quadrature::gauss_jacobi01(n, p, q),
                                             specfun::ln_beta(p + 1, q + 1), [&](int k) {
                                               return (p + 1 + k) /
                                                      static_cast<long double>(p + q + 2 + k);
                                             }));
      }
  for (int n : {8, 64, 128})
    for (double al : {0.0, 4.0}) {
      worst = std::max(worst, moment_error(quadrature::gauss_laguerre(n, al),
                                           specfun::ln_gamma(al + 1), [&](int k) {
                                             return static_cast<long double>(al + 1 + k);
                                           }));
    }
  return {worst <= 1e-12, "max relative moment error " + sci(worst)};
}

Outcome theorem1_vs_cd() {
  double worst = 0.0;
  int n_max = 0;
  for (int i = 1; i <= 4; ++i)
    for (int db = 0; db <= 30; db += 5) {
      const auto p = jacobi::jacobi_params({20, i, i});
      const Snr snr = per_mode(std::pow(10.0, db / 10.0));
      const auto a = jacobi::capacity_theorem1(p, snr);
      const auto b = jacobi::capacity_cd_reference(p, snr);
      worst = std::max(worst, std::abs(a.nats - b.nats) / std::max(1.0, a.nats));
      n_max = std::max({n_max, a.meta.n_used, b.meta.n_used});
    }
  return {worst <= 1e-8, "max deviation " + sci(worst) + ", largest N " + std::to_string(n_max)};
}

Outcome theorem2_vs_laguerre() {
  double worst = 0.0;
  for (int mt = 1; mt <= 4; ++mt)
    for (int mr = mt; mr <= mt + 4; ++mr)
      for (double rho : {1.0, 10.0, 100.0, 1000.0}) {
        const auto a = gaussian::capacity_theorem2({mt, mr}, per_mode(rho));
        const auto b = gaussian::capacity_laguerre_reference({mt, mr}, per_mode(rho));
        worst = std::max(worst, std::abs(a.nats - b.nats) / std::max(1.0, a.nats));
      }
  return {worst <= 1e-8, "max deviation " + sci(worst)};
}

Outcome moment_series() {
  bool ok = true;
  double worst = 0.0;
  for (auto p : {JacobiParams{1, 13, 4}, JacobiParams{4, 17, 3}, JacobiParams{1, 3, 2}})
    for (double rho : {0.1, 0.5, 0.9}) {
      const auto s = jacobi::capacity_moment_series(p, per_mode(rho), 400);
      const double d = std::abs(s.nats - jacobi::capacity_theorem1(p, per_mode(rho)).nats);
      ok = ok && d <= std::max(1e-10, s.err);
      worst = std::max(worst, d);
    }
  return {ok, "max deviation " + sci(worst)};
}

Outcome differential_identity() {
  quadrature::IntegrationOptions tight;
  tight.rtol = 1e-14;
  double worst = 0.0;
  for (auto p : {JacobiParams{1, 13, 4}, JacobiParams{4, 17, 3}, JacobiParams{2, 3, 2}})
    for (double rho : {0.2, 0.3, 0.5}) {
      const double h = 1e-4;
      const auto c = [&](double r) { return jacobi::capacity_theorem1(p, per_mode(r), tight).nats; };
      const auto g = [&](double r) {
        return r * (c(r - 2 * h) - 8 * c(r - h) + 8 * c(r + h) - c(r + 2 * h)) / (12 * h);
      };
      const double lhs = (g(rho - 2 * h) - 8 * g(rho - h) + 8 * g(rho + h) - g(rho + 2 * h)) / (12 * h);
      const double rhs = jacobi::prop1_rhs(p, rho);
      worst = std::max(worst, std::abs(lhs / rhs - 1.0));
    }
  return {worst <= 1e-5, "max relative deviation " + sci(worst)};
}

Outcome large_b_limit() {
  const double rho = 0.5;
  const double g = gaussian::capacity_theorem2({2, 2}, per_mode(rho)).nats;
  std::vector<double> gaps;
  for (int b : {100, 1000, 10000}) {
    const auto p = jacobi::jacobi_params({2 + 2 - 1 + b, 2, 2});
    gaps.push_back(std::abs(jacobi::capacity_theorem1(p, per_mode(b * rho)).nats - g));
  }
  return {gaps[1] < gaps[0] && gaps[2] < gaps[1],
          "gaps " + sci(gaps[0]) + " " + sci(gaps[1]) + " " + sci(gaps[2])};
}

Outcome polynomial_limit() {
  double lo = 1.0, hi = 0.0;
  for (int q = 1; q <= 6; ++q)
    for (double al : {0.0, 1.0, 2.0})
      for (double x : {0.5, 1.0, 2.0}) {
        const double lag = specfun::laguerre_l(q, al, x);
        const auto e = [&](double be) {
          return std::abs(specfun::jacobi_p(q, al, be, 1.0 - 2.0 * x / be) - lag);
        };
        const double ratio = e(2e4) / e(1e4);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
  return {lo >= 0.45 && hi <= 0.55, "error ratios in [" + sci(lo) + ", " + sci(hi) + "]"};
}

Outcome degenerate_decomposition() {
  bool ok = true;
  for (int m : {1, 2, 4})
    ok = ok && jacobi::capacity_decomposed({m, m, m}, per_mode(5.0)).nats == m * std::log1p(5.0);
  return {ok, "m ln(1 + rho) reproduced exactly"};
}

Outcome mc_agreement(const char* what, const mc::McEstimate& e, double want) {
  const double z = (e.mean - want) / e.std_error;
  return {std::abs(z) <= 4.0, std::string(what) + ": z = " + sci(z)};
}

}  // namespace

bool run_all(std::ostream& out, const Options& opts) {
  mc::McOptions mco;
  mco.samples = opts.mc_samples;
  mco.seed = opts.seed;

  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"jacobi_p vs terminating 2F1", jacobi_vs_hypergeometric},
      {"dilog_inner(1) = pi^2/12", dilog_at_one},
      {"Gauss rule exactness", rule_exactness},
      {"theorem1 vs cd_reference", theorem1_vs_cd},
      {"theorem2 vs laguerre_reference", theorem2_vs_laguerre},
      {"moment series vs theorem1", moment_series},
      {"second-order identity in rho", differential_identity},
      {"large-b limit toward Gaussian", large_b_limit},
      {"Jacobi to Laguerre polynomial limit", polynomial_limit},
      {"degenerate decomposition", degenerate_decomposition},
      {"Haar MC vs theorem1",
       [&] {
         const ChannelDims d{20, 4, 4};
         return mc_agreement("(20,4,4) rho 10", mc::mc_capacity_jacobi_haar(d, per_mode(10.0), mco),
                             jacobi::capacity(d, per_mode(10.0)).nats);
       }},
      {"Haar MC vs decomposition",
       [&] {
         const ChannelDims d{3, 2, 2};
         return mc_agreement("(3,2,2) rho 5", mc::mc_capacity_jacobi_haar(d, per_mode(5.0), mco),
                             jacobi::capacity(d, per_mode(5.0)).nats);
       }},
      {"Gaussian MC vs theorem2",
       [&] {
         return mc_agreement("(2,2) rho 10", mc::mc_capacity_gaussian({2, 2}, per_mode(10.0), mco),
                             gaussian::capacity_theorem2({2, 2}, per_mode(10.0)).nats);
       }},
      {"Wishart ratio vs analytic",
       [&] {
         return mc_agreement("(4,16,4) rho 10",
                             mc::mc_capacity_jacobi_wishart(4, 16, 4, per_mode(10.0), mco),
                             jacobi::capacity({20, 4, 4}, per_mode(10.0)).nats);
       }},
      {"MC reproducibility",
       [&] {
         mc::McOptions small = mco;
         small.samples = 4000;
         const auto a = mc::mc_capacity_jacobi_haar({8, 2, 3}, per_mode(3.0), small);
         const auto b = mc::mc_capacity_jacobi_haar({8, 2, 3}, per_mode(3.0), small);
         return Outcome{a.mean == b.mean && a.std_error == b.std_error, "identical reruns"};
       }},
  };

  bool all = true;
  for (const auto& [name, check] : checks) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.ok;
    out << (o.ok ? "PASS  " : "FAIL  ") << name << ": " << o.detail << '\n';
  }
  out << (all ? "selftest: all checks passed\n" : "selftest: FAILED\n");
  return all;
}

}  // namespace ergocap::selftest
