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

#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "ergocap/errors.hpp"
#include "ergocap/quadrature.hpp"
#include "ergocap/specfun.hpp"
#include "oracles.hpp"

using namespace ergocap;
using namespace ergocap::quadrature;

namespace {

void check_structure(const QuadratureRule& r, double lo, double hi) {
  REQUIRE(r.nodes.size() == r.weights.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    CHECK(r.weights[i] > 0.0);
    CHECK(r.nodes[i] > lo);
    if (hi > lo) CHECK(r.nodes[i] < hi);
    if (i > 0) CHECK(r.nodes[i] > r.nodes[i - 1]);
  }
}

// Relative error of sum_i w_i u_i^k against the exact moment M_k, k = 0..2N-1.
// ln M_0 comes from log-gamma and M_{k+1} / M_k = ratio(k) is exact, so the
// reference does not lose digits to cancelling large log-gamma values. Terms
// are formed in log space so large Laguerre moments do not overflow.
double worst_moment_error(const QuadratureRule& r, double ln_m0, auto ratio) {
  double worst = 0.0;
  long double ln_m = ln_m0;
  const int top = 2 * static_cast<int>(r.size()) - 1;
  for (int k = 0; k <= top; ++k) {
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

}  // namespace

TEST_CASE("gauss_jacobi01 small rules") {
  const auto r = gauss_jacobi01(1, 0.0, 0.0);
  REQUIRE(r.size() == 1);
  CHECK(r.nodes[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.exactness_degree == 1);

  const auto r16 = gauss_jacobi01(16, 1.0, 2.0);
  CHECK(r16.exactness_degree == 31);
  const double v = r16.integrate([](double u) { return u * u * u; });
  CHECK(std::abs(v - 1.0 / 105.0) < 1e-15);
}

TEST_CASE("gauss_jacobi01 exactness on monomials") {
  const double ps[] = {0.0, 0.5, 3.0, 12.0};
  const double qs[] = {-0.5, 0.0, 2.0, 11.0, 15.0};
  for (int n : {1, 2, 5, 16, 64, 128})
    for (double p : ps)
      for (double q : qs) {
        const auto r = gauss_jacobi01(n, p, q);
        CAPTURE(n);
        CAPTURE(p);
        CAPTURE(q);
        check_structure(r, 0.0, 1.0);
        CHECK(r.exactness_degree == 2 * n - 1);
        CHECK(oracle::rel_err(r.integrate([](double) { return 1.0; }),
                              std::exp(specfun::ln_beta(p + 1, q + 1))) < 1e-13);
        const double err =
            worst_moment_error(r, specfun::ln_beta(p + 1, q + 1), [&](int k) {
              return (p + 1 + k) / static_cast<long double>(p + q + 2 + k);
            });
        CHECK(err < 1e-12);
      }
}

TEST_CASE("gauss_laguerre small rules") {
  const auto r = gauss_laguerre(1, 0.0);
  REQUIRE(r.size() == 1);
  CHECK(r.nodes[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(r.weights[0] == doctest::Approx(1.0).epsilon(1e-15));

  const auto r16 = gauss_laguerre(16, 0.0);
  CHECK(oracle::rel_err(r16.integrate([](double u) { return std::pow(u, 5); }), 120.0) < 1e-14);
}

TEST_CASE("gauss_laguerre exactness on monomials") {
  for (int n : {1, 2, 5, 16, 64, 128})
    for (double al : {0.0, 0.5, 1.0, 4.0, 10.0}) {
      const auto r = gauss_laguerre(n, al);
      CAPTURE(n);
      CAPTURE(al);
      check_structure(r, 0.0, 0.0);
      CHECK(oracle::rel_err(r.integrate([](double) { return 1.0; }),
                            std::exp(specfun::ln_gamma(al + 1))) < 1e-13);
      const double err =
          worst_moment_error(r, specfun::ln_gamma(al + 1),
                             [&](int k) { return static_cast<long double>(al + 1 + k); });
      CHECK(err < 1e-12);
    }
}

TEST_CASE("nodes interlace between N and N+1") {
  for (int n : {3, 10, 40}) {
    const auto a = gauss_jacobi01(n, 1.0, 4.0);
    const auto b = gauss_jacobi01(n + 1, 1.0, 4.0);
    for (int i = 0; i < n; ++i) {
      CHECK(b.nodes[i] < a.nodes[i]);
      CHECK(a.nodes[i] < b.nodes[i + 1]);
    }
    const auto la = gauss_laguerre(n, 2.0);
    const auto lb = gauss_laguerre(n + 1, 2.0);
    for (int i = 0; i < n; ++i) {
      CHECK(lb.nodes[i] < la.nodes[i]);
      CHECK(la.nodes[i] < lb.nodes[i + 1]);
    }
  }
}

TEST_CASE("rule parameter errors") {
  CHECK_THROWS_AS(gauss_jacobi01(0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(gauss_jacobi01(4, -1.0, 0.0), DomainError);
  CHECK_THROWS_AS(gauss_jacobi01(4, 0.0, -1.5), DomainError);
  CHECK_THROWS_AS(gauss_laguerre(0, 0.0), DomainError);
  CHECK_THROWS_AS(gauss_laguerre(4, -1.0), DomainError);
}

TEST_CASE("rule cache returns identical rules across threads") {
  const auto ref = gauss_jacobi01(96, 2.25, 7.5);
  std::vector<QuadratureRule> got(4);
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < 4; ++t)
      pool.emplace_back([&, t] { got[t] = gauss_jacobi01(96, 2.25, 7.5); });
  }
  for (const auto& g : got) {
    CHECK(g.nodes == ref.nodes);
    CHECK(g.weights == ref.weights);
  }
}

TEST_CASE("graded rules") {
  // Coarse scale falls back to the plain Gauss rule.
  const auto plain = graded_jacobi01(32, 1.0, 3.0, 0.5);
  CHECK(plain.exactness_degree == 63);
  CHECK(plain.nodes == gauss_jacobi01(32, 1.0, 3.0).nodes);

  for (double s : {1e-2, 1e-4, 1e-6}) {
    const double p = 1.0, q = 11.0;
    const auto r = graded_jacobi01(32, p, q, s);
    CAPTURE(s);
    CHECK(r.exactness_degree == -1);
    check_structure(r, 0.0, 1.0);
    CHECK(oracle::rel_err(r.integrate([](double) { return 1.0; }),
                          std::exp(specfun::ln_beta(p + 1, q + 1))) < 1e-13);
    // Near-singular factor ln(1 + u/s) against an adaptive Simpson oracle.
    auto f = [&](double u) { return u * std::pow(1.0 - u, q) * std::log1p(u / s); };
    double ref = 0.0;
    for (double lo = 0.0, hi = s; lo < 1.0; lo = hi, hi = std::min(1.0, 4.0 * hi))
      ref += oracle::adaptive_simpson(f, lo, hi, 1e-17);
    CHECK(oracle::rel_err(r.integrate([&](double u) { return std::log1p(u / s); }), ref) < 1e-11);
  }

  for (double s : {1e-2, 1e-5}) {
    const double al = 2.0;
    const auto r = graded_laguerre(32, al, s);
    CAPTURE(s);
    check_structure(r, 0.0, 0.0);
    CHECK(oracle::rel_err(r.integrate([](double) { return 1.0; }), 2.0) < 1e-13);
    auto f = [&](double u) { return u * u * std::exp(-u) * std::log1p(u / s); };
    double ref = 0.0;
    for (double lo = 0.0, hi = s; lo < 200.0; lo = hi, hi = std::min(200.0, 4.0 * hi))
      ref += oracle::adaptive_simpson(f, lo, hi, 1e-16);
    CHECK(oracle::rel_err(r.integrate([&](double u) { return std::log1p(u / s); }), ref) < 1e-11);
  }
}

TEST_CASE("integrate_converged") {
  IntegrationOptions opts;
  opts.n_initial = 8;
  const auto jac = [](int n) { return gauss_jacobi01(n, 1.0, 2.0); };

  // Polynomial of degree <= 2 N0 - 1: exact from the start.
  const auto poly = integrate_converged(jac, [](double u) { return 1.0 + u * u * u; }, opts);
  CHECK(poly.n_used == 16);
  CHECK(poly.achieved_rtol <= 1e-14);
  CHECK(oracle::rel_err(poly.value, 1.0 / 12.0 + 1.0 / 105.0) < 1e-14);

  // Self-consistency: one more doubling does not move the value.
  opts.n_initial = 64;
  const auto f = [](double u) { return specfun::dilog_inner(10.0 * u); };
  const auto res = integrate_converged(jac, f, opts);
  const auto finer = gauss_jacobi01(2 * res.n_used, 1.0, 2.0).integrate(f);
  CHECK(res.n_used <= 512);
  CHECK(std::abs(finer - res.value) <= 1e-10 * std::abs(res.value));

  CHECK_THROWS_AS(integrate_converged(jac, f, {64, 4096, 0.0}), DomainError);
}

TEST_CASE("integrate_converged reports failure with the last two values") {
  const auto leg = [](int n) { return gauss_jacobi01(n, 0.0, 0.0); };
  const auto kink = [](double u) { return std::sqrt(std::abs(u - 1.0 / 3.0)); };
  try {
    integrate_converged(leg, kink, {8, 64, 1e-14});
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    // Exact value: (2/3) [(1/3)^{3/2} + (2/3)^{3/2}].
    const double exact = (2.0 / 3.0) * (std::pow(1.0 / 3.0, 1.5) + std::pow(2.0 / 3.0, 1.5));
    CHECK(std::abs(e.last() - exact) < 1e-3);
    CHECK(std::abs(e.previous() - exact) < 1e-2);
    CHECK(e.last() != e.previous());
  }
}

TEST_CASE("describe") {
  CHECK_FALSE(describe(Jacobi01{1, 2}).empty());
  CHECK_FALSE(describe(Laguerre{0}).empty());
  CHECK_FALSE(describe(Graded{Laguerre{1}, 0.01, 4}).empty());
}
