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

// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ergocap/cli.hpp"
#include "ergocap/gaussian_capacity.hpp"
#include "ergocap/jacobi_capacity.hpp"
#include "ergocap/mc_oracle.hpp"
#include "ergocap/quadrature.hpp"
#include "ergocap/specfun.hpp"

using namespace ergocap;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Snr per_mode(double rho) { return {rho, SnrScaling::kPerMode}; }
double db(double d) { return std::pow(10.0, d / 10.0); }

mc::McOptions mc_opts() {
  mc::McOptions o;
  o.samples = 100'000;
  o.seed = 42;
  return o;
}

// Worst |a - b| / max(1, |a|) and worst |mc - analytic| / se over a set of
// probes on one Haar size.
struct Agreement {
  double analytic = 0.0;
  double z = 0.0;
  int n_used = 0;
  void add(double a, double b, const mc::McEstimate& e, int n) {
    analytic = std::max(analytic, std::abs(a - b) / std::max(1.0, std::abs(a)));
    z = std::max({z, std::abs(e.mean - a) / e.std_error, std::abs(e.mean - b) / e.std_error});
    n_used = std::max(n_used, n);
  }
  bool ok() const { return analytic <= 1e-8 && z <= 4.0; }
  std::string describe() const {
    return "max analytic rel diff " + sci(analytic) + ", max |z| vs MC " + sci(z) +
           ", largest N " + std::to_string(n_used);
  }
};

Verdict jacobi_snr_sweep() {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<mc::Probe> probes;
  for (int i = 1; i <= 4; ++i)
    for (int d = 0; d <= 30; d += 5) probes.push_back({i, i, db(d)});
  const auto mc = mc::mc_haar_batch(20, probes, mc_opts());
  Agreement ag;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const auto p = jacobi::jacobi_params({20, probes[k].m_t, probes[k].m_r});
    const auto a = jacobi::capacity_theorem1(p, per_mode(probes[k].rho_eff));
    const auto b = jacobi::capacity_cd_reference(p, per_mode(probes[k].rho_eff));
    ag.add(a.nats, b.nats, mc[k], std::max(a.meta.n_used, b.meta.n_used));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {ag.ok() && secs < 120.0, ag.describe() + ", " + sci(secs) + " s"};
}

Verdict jacobi_receive_sweep() {
  std::vector<mc::Probe> probes;
  for (int mt : {2, 3})
    for (int mr = mt; mr <= 10; ++mr) probes.push_back({mt, mr, 10.0});
  const auto mc = mc::mc_haar_batch(25, probes, mc_opts());
  Agreement ag;
  bool shape = true;
  std::vector<double> curve;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const auto p = jacobi::jacobi_params({25, probes[k].m_t, probes[k].m_r});
    const auto a = jacobi::capacity_theorem1(p, per_mode(10.0));
    const auto b = jacobi::capacity_cd_reference(p, per_mode(10.0));
    ag.add(a.nats, b.nats, mc[k], std::max(a.meta.n_used, b.meta.n_used));
    if (probes[k].m_r == probes[k].m_t) curve.clear();
    curve.push_back(a.nats);
    const std::size_t n = curve.size();
    if (n >= 2) shape = shape && curve[n - 1] > curve[n - 2];
    if (n >= 3) shape = shape && curve[n - 1] - curve[n - 2] < curve[n - 2] - curve[n - 3];
  }
  return {ag.ok() && shape, ag.describe() + (shape ? ", increasing and concave in m_r"
                                                    : ", NOT increasing/concave in m_r")};
}

Verdict gaussian_sweeps() {
  std::vector<mc::Probe> probes;
  for (int i = 1; i <= 4; ++i)
    for (int d = 0; d <= 30; d += 5) probes.push_back({i, i, db(d)});
  const auto mc = mc::mc_gaussian_batch(probes, mc_opts());
  Agreement ag;
  for (std::size_t k = 0; k < probes.size(); ++k) {
    const GaussianDims g{probes[k].m_t, probes[k].m_r};
    const auto a = gaussian::capacity_theorem2(g, per_mode(probes[k].rho_eff));
    const auto b = gaussian::capacity_laguerre_reference(g, per_mode(probes[k].rho_eff));
    ag.add(a.nats, b.nats, mc[k], std::max(a.meta.n_used, b.meta.n_used));
  }
  bool shape = true;
  for (int mt = 1; mt <= 4; ++mt) {
    std::vector<double> c;
    for (int mr = mt; mr <= 10; ++mr) c.push_back(gaussian::capacity_theorem2({mt, mr}, per_mode(10.0)).nats);
    for (std::size_t i = 1; i < c.size(); ++i) shape = shape && c[i] > c[i - 1];
    for (std::size_t i = 2; i < c.size(); ++i) shape = shape && c[i] - c[i - 1] < c[i - 1] - c[i - 2];
  }
  return {ag.ok() && shape, ag.describe() + (shape ? ", m_r sweep increasing and concave"
                                                    : ", m_r sweep NOT increasing/concave")};
}

Verdict differential_identity() {
  quadrature::IntegrationOptions tight;
  tight.rtol = 1e-14;
  double worst = 0.0;
  for (auto p : {JacobiParams{1, 13, 4}, JacobiParams{4, 17, 3}, JacobiParams{2, 3, 2}})
    for (double rho : {0.2, 0.3, 0.5}) {
      const double h = 1e-4;
      const auto c = [&](double r) { return jacobi::capacity_theorem1(p, per_mode(r), tight).nats; };
      // 5-point central differences, applied twice: d/drho (rho dC/drho).
      const auto g = [&](double r) {
        return r * (c(r - 2 * h) - 8 * c(r - h) + 8 * c(r + h) - c(r + 2 * h)) / (12 * h);
      };
      const double lhs = (g(rho - 2 * h) - 8 * g(rho - h) + 8 * g(rho + h) - g(rho + 2 * h)) / (12 * h);
      worst = std::max(worst, std::abs(lhs / jacobi::prop1_rhs(p, rho) - 1.0));
    }
  return {worst <= 1e-5, "max relative deviation " + sci(worst)};
}

Verdict moment_series() {
  bool ok = true;
  double worst = 0.0;
  std::vector<JacobiParams> params;
  for (int n = 1; n <= 4; ++n) params.push_back(jacobi::jacobi_params({20, n, n}));
  params.push_back({4, 17, 3});
  params.push_back({2, 3, 2});
  params.push_back({1, 3, 2});
  for (const auto& p : params)
    for (double rho : {0.1, 0.5, 0.9}) {
      const auto s = jacobi::capacity_moment_series(p, per_mode(rho), 400);
      const double d = std::abs(s.nats - jacobi::capacity_theorem1(p, per_mode(rho)).nats);
      ok = ok && d <= std::max(1e-10, s.err);
      worst = std::max(worst, d);
    }
  return {ok, "max |series - integral| " + sci(worst)};
}

Verdict large_b_limit() {
  const double rho = 0.5;
  const double g = gaussian::capacity_theorem2({2, 2}, per_mode(rho)).nats;
  std::vector<double> gaps;
  for (int b : {100, 1000, 10000}) {
    const auto p = jacobi::jacobi_params({2 + 2 - 1 + b, 2, 2});
    gaps.push_back(std::abs(jacobi::capacity_theorem1(p, per_mode(b * rho)).nats - g));
  }
  return {gaps[1] < gaps[0] && gaps[2] < gaps[1],
          "gaps at b = 1e2, 1e3, 1e4: " + sci(gaps[0]) + ", " + sci(gaps[1]) + ", " + sci(gaps[2])};
}

Verdict decomposition() {
  const ChannelDims d{3, 2, 2};
  const auto a = jacobi::capacity(d, per_mode(5.0));
  const auto e = mc::mc_capacity_jacobi_haar(d, per_mode(5.0), mc_opts());
  const double z = (e.mean - a.nats) / e.std_error;
  bool exact = true;
  for (int m : {1, 2, 3, 6}) {
    exact = exact && jacobi::capacity({m, m, m}, per_mode(5.0)).nats == m * std::log1p(5.0);
    const Snr tp{5.0, SnrScaling::kTotalPower};
    exact = exact && jacobi::capacity({m, m, m}, tp).nats == m * std::log1p(5.0 / m);
  }
  return {a.method == Method::kDecomposition && std::abs(z) <= 4.0 && exact,
          "z vs MC " + sci(z) + (exact ? ", m = m_t = m_r exact" : ", m = m_t = m_r NOT exact")};
}

Verdict ensemble_equivalence() {
  const auto h = mc::mc_capacity_jacobi_haar({20, 4, 4}, per_mode(10.0), mc_opts());
  const auto w = mc::mc_capacity_jacobi_wishart(4, 16, 4, per_mode(10.0), mc_opts());
  const double se = std::hypot(h.std_error, w.std_error);
  const double z = (h.mean - w.mean) / se;
  return {std::abs(z) <= 4.0, "Haar " + sci(h.mean) + ", Wishart " + sci(w.mean) +
                                  ", combined z " + sci(z) + ", resampled " +
                                  std::to_string(w.resampled)};
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

Verdict quadrature_exactness() {
  // Every (p, q) and alpha the capacity engines request in this run, at the
  // doubling sizes they use, plus small sizes.
  std::vector<std::pair<double, double>> jac = {{0, 0}};
  for (double a : {1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0})
    for (double b : {2.0, 3.0, 5.0, 13.0, 14.0, 15.0, 16.0, 17.0, 18.0, 19.0, 20.0}) {
      jac.push_back({a - 1, b - 2});
      jac.push_back({a - 1, b - 1});
    }
  const int sizes[] = {1, 2, 3, 5, 8, 16, 32, 64, 128, 256};
  double worst = 0.0;
  long rules = 0;
  bool positive = true;
  for (auto [p, q] : jac)
    for (int n : sizes) {
      const auto r = quadrature::gauss_jacobi01(n, p, q);
      ++rules;
      positive = positive && r.exactness_degree == 2 * n - 1;
      for (double w : r.weights) positive = positive && w > 0.0;
      const double e = moment_error(r, specfun::ln_beta(p + 1, q + 1), [&](int k) {
        return (p + 1 + k) / static_cast<long double>(p + q + 2 + k);
      });
      worst = std::max(worst, e);
    }
  for (double al : {0.0, 1.0, 2.0, 3.0, 4.0, 6.0, 8.0})
    for (int n : sizes) {
      if (n > 128) continue;  // larger rules have weights below the double range
      const auto r = quadrature::gauss_laguerre(n, al);
      ++rules;
      positive = positive && r.exactness_degree == 2 * n - 1;
      for (double w : r.weights) positive = positive && w > 0.0;
      const double e = moment_error(r, specfun::ln_gamma(al + 1),
                                    [&](int k) { return static_cast<long double>(al + 1 + k); });
      worst = std::max(worst, e);
    }
  return {worst <= 1e-12 && positive,
          std::to_string(rules) + " rules, max relative moment error " + sci(worst)};
}

Verdict polynomial_limit() {
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
  // q = 0 is excluded: both polynomials are identically 1 and the error is 0.
  return {lo >= 0.45 && hi <= 0.55, "error ratio range [" + sci(lo) + ", " + sci(hi) + "]"};
}

Verdict sweep_determinism() {
  const std::vector<std::string> args = {
      "sweep", "--channel", "jacobi", "--m", "20", "--mt", "4", "--mr", "4", "--axis", "snr_db",
      "--range", "0:30:5", "--methods", "theorem1,cd,mc", "--samples", "100000", "--seed", "42"};
  std::ostringstream a, b, ea, eb;
  const int ca = cli::run(args, a, ea);
  const int cb = cli::run(args, b, eb);
  const bool same = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  return {same, std::to_string(a.str().size()) + " bytes, exit codes " + std::to_string(ca) +
                    "/" + std::to_string(cb) + (a.str() == b.str() ? ", identical" : ", DIFFER")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 Jacobi m=20 SNR sweep: theorem1 / cd_reference / Haar MC", jacobi_snr_sweep},
      {"2 Jacobi m=25 receive-mode sweep: agreement and concave growth", jacobi_receive_sweep},
      {"3 Gaussian sweeps: theorem2 / laguerre_reference / MC and shape", gaussian_sweeps},
      {"4 second-order rho identity by finite differences", differential_identity},
      {"5 moment series (K=400) vs theorem1", moment_series},
      {"6 large-b limit toward the Gaussian capacity", large_b_limit},
      {"7 decomposition for m < m_t + m_r", decomposition},
      {"8 Haar corner vs Wishart ratio ensembles", ensemble_equivalence},
      {"9 Gauss rule exactness to degree 2N-1", quadrature_exactness},
      {"10 Jacobi to Laguerre polynomial limit is first order", polynomial_limit},
      {"11 sweep output is byte-identical across runs", sweep_determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!v.pass) ++failures;
    std::printf("[%s] criterion %s: %s (%.1f s)\n", v.pass ? "PASS" : "FAIL", name.c_str(),
                v.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
