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

#include "ergocap/quadrature.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "ergocap/errors.hpp"
#include "ergocap/linalg.hpp"
#include "ergocap/specfun.hpp"

namespace ergocap::quadrature {

namespace {

// Three-term recurrence x p_k = beta_{k+1} p_{k+1} + a_k p_k + beta_k p_{k-1}
// for the orthonormal polynomials of a weight, plus ln of its zeroth moment.
// Kept in extended precision for node polishing and Christoffel weights.
struct Recurrence {
  std::vector<long double> a;     // a_0 .. a_{n-1}
  std::vector<long double> beta;  // beta_0 (unused) .. beta_n
  double ln_mu0 = 0.0;
};

Recurrence jacobi01_recurrence(int n, double p_in, double q_in) {
  // [-1, 1] Jacobi coefficients with alpha = p, beta = q, mapped by
  // u = (1 - x) / 2.
  const long double p = p_in, q = q_in;
  Recurrence r;
  r.a.resize(n);
  r.beta.assign(n + 1, 0.0L);
  const long double ab = p + q;
  for (int k = 0; k < n; ++k) {
    if (k == 0) {
      r.a[0] = (p + 1.0L) / (ab + 2.0L);
    } else {
      const long double s = 2.0L * k + ab;
      // 1 - a_k written without the cancellation of (q^2 - p^2)/(s(s+2)) -> 1.
      const long double num = (2.0L * k + p) * (2.0L * k + p + 2.0L * q) + 2.0L * s + p * p;
      r.a[k] = 0.5L * num / (s * (s + 2.0L));
    }
  }
  for (int k = 1; k <= n; ++k) {
    long double b;
    if (k == 1) {
      b = 4.0L * (1.0L + p) * (1.0L + q) / ((2.0L + ab) * (2.0L + ab) * (3.0L + ab));
    } else {
      const long double s = 2.0L * k + ab;
      b = 4.0L * k * (k + p) * (k + q) * (k + ab) / (s * s * (s + 1.0L) * (s - 1.0L));
    }
    r.beta[k] = 0.5L * std::sqrt(b);
  }
  r.ln_mu0 = specfun::ln_beta(p_in + 1.0, q_in + 1.0);
  return r;
}

Recurrence laguerre_recurrence(int n, double alpha) {
  Recurrence r;
  r.a.resize(n);
  r.beta.assign(n + 1, 0.0L);
  for (int k = 0; k < n; ++k) r.a[k] = 2.0L * k + alpha + 1.0L;
  for (int k = 1; k <= n; ++k) r.beta[k] = std::sqrt(k * (k + static_cast<long double>(alpha)));
  r.ln_mu0 = specfun::ln_gamma(alpha + 1.0);
  return r;
}

constexpr long double kBig = 1e100L;
constexpr long double kSmall = 1e-100L;

// p_n(x) / p_n'(x) for the orthonormal p_n, rescaling to stay finite.
long double newton_ratio(const Recurrence& r, int n, long double x) {
  long double p_prev = 0.0L, p = 1.0L;
  long double d_prev = 0.0L, d = 0.0L;
  for (int k = 0; k < n; ++k) {
    const long double p_next = ((x - r.a[k]) * p - r.beta[k] * p_prev) / r.beta[k + 1];
    const long double d_next = ((x - r.a[k]) * d + p - r.beta[k] * d_prev) / r.beta[k + 1];
    p_prev = p;
    p = p_next;
    d_prev = d;
    d = d_next;
    if (std::abs(p) > kBig || std::abs(d) > kBig) {
      p *= kSmall;
      p_prev *= kSmall;
      d *= kSmall;
      d_prev *= kSmall;
    }
  }
  return p / d;
}

// ln( sum_{k<n} p_k(x)^2 ) with p_0 = 1.
long double ln_christoffel_sum(const Recurrence& r, int n, long double x) {
  long double p_prev = 0.0L, p = 1.0L;
  long double sum = 1.0L;
  long double ln_scale = 0.0L;
  for (int k = 0; k + 1 < n; ++k) {
    const long double p_next = ((x - r.a[k]) * p - r.beta[k] * p_prev) / r.beta[k + 1];
    p_prev = p;
    p = p_next;
    sum += p * p;
    if (std::abs(p) > kBig) {
      p *= kSmall;
      p_prev *= kSmall;
      sum *= kSmall * kSmall;
      ln_scale += 2.0L * std::log(kBig);
    }
  }
  return std::log(sum) + ln_scale;
}

QuadratureRule golub_welsch(RuleKind kind, const Recurrence& r, int n) {
  linalg::SymTridiagonal t;
  t.diag.assign(r.a.begin(), r.a.end());
  t.offdiag.assign(r.beta.begin() + 1, r.beta.begin() + n);
  const auto eig = linalg::tridiag_eigen(t);

  QuadratureRule rule;
  rule.kind = std::move(kind);
  rule.exactness_degree = 2 * n - 1;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double norm = 0.0;
  for (double v : t.diag) norm = std::max(norm, std::abs(v));
  for (double v : t.offdiag) norm = std::max(norm, 2.0 * std::abs(v));
  for (int i = 0; i < n; ++i) {
    long double x = eig.eigenvalues[i];
    for (int it = 0; it < 3; ++it) {
      const long double step = newton_ratio(r, n, x);
      if (!std::isfinite(step) || std::abs(step) > 1e-8L * norm) break;
      x -= step;
    }
    rule.nodes[i] = static_cast<double>(x);
    rule.weights[i] =
        static_cast<double>(std::exp(static_cast<long double>(r.ln_mu0) - ln_christoffel_sum(r, n, x)));
  }
  return rule;
}

enum class Family { kJacobi01, kLaguerre };
using CacheKey = std::tuple<Family, std::uint64_t, std::uint64_t, int>;

class RuleCache {
 public:
  template <class Build>
  QuadratureRule get(const CacheKey& key, Build&& build) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = rules_.find(key); it != rules_.end()) return *it->second;
    }
    auto rule = std::make_shared<const QuadratureRule>(build());
    std::unique_lock lock(mutex_);
    auto [it, inserted] = rules_.emplace(key, std::move(rule));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<CacheKey, std::shared_ptr<const QuadratureRule>> rules_;
};

RuleCache& cache() {
  static RuleCache c;
  return c;
}

struct Panel {
  double lo, hi;
};

// Geometric breakpoints scale, 4 scale, 16 scale, ... below `top`.
std::vector<Panel> graded_panels(double scale, double top) {
  std::vector<Panel> panels;
  double lo = 0.0;
  for (double c = scale; c < top / 2.0; c *= 4.0) {
    panels.push_back({lo, c});
    lo = c;
  }
  panels.push_back({lo, top});
  return panels;
}

void append_panel(QuadratureRule& out, const QuadratureRule& base, const Panel& panel,
                  double jacobian, const std::function<double(double)>& fold) {
  const double width = panel.hi - panel.lo;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const double u = panel.lo + width * base.nodes[i];
    out.nodes.push_back(u);
    out.weights.push_back(jacobian * base.weights[i] * fold(u));
  }
}

}  // namespace

QuadratureRule gauss_jacobi01(int n, double p, double q) {
  if (n < 1) throw DomainError("gauss_jacobi01: N must be >= 1");
  if (!(p > -1.0) || !(q > -1.0)) {
    throw DomainError("gauss_jacobi01: exponents must exceed -1");
  }
  const CacheKey key{Family::kJacobi01, std::bit_cast<std::uint64_t>(p),
                     std::bit_cast<std::uint64_t>(q), n};
  return cache().get(key, [&] {
    return golub_welsch(Jacobi01{p, q}, jacobi01_recurrence(n, p, q), n);
  });
}

QuadratureRule gauss_laguerre(int n, double alpha) {
  if (n < 1) throw DomainError("gauss_laguerre: N must be >= 1");
  if (!(alpha > -1.0)) throw DomainError("gauss_laguerre: alpha must exceed -1");
  const CacheKey key{Family::kLaguerre, std::bit_cast<std::uint64_t>(alpha), 0, n};
  return cache().get(key, [&] {
    return golub_welsch(Laguerre{alpha}, laguerre_recurrence(n, alpha), n);
  });
}

QuadratureRule graded_jacobi01(int n, double p, double q, double scale) {
  const double top = std::min(0.5, (p + 1.0) / (p + q + 2.0));
  if (!(scale > 0.0) || scale >= top / 2.0) return gauss_jacobi01(n, p, q);

  const auto panels = graded_panels(scale, top);
  QuadratureRule rule;
  rule.kind = Graded{Jacobi01{p, q}, scale, static_cast<int>(panels.size()) + 1};
  rule.exactness_degree = -1;
  const auto one_minus_u_pow = [q](double u) { return std::exp(q * std::log1p(-u)); };
  const auto u_pow = [p](double u) { return std::exp(p * std::log(u)); };

  const Panel& first = panels.front();
  append_panel(rule, gauss_jacobi01(n, p, 0.0), first, std::pow(first.hi, p + 1.0),
               one_minus_u_pow);
  const auto legendre = gauss_jacobi01(n, 0.0, 0.0);
  for (std::size_t k = 1; k < panels.size(); ++k) {
    append_panel(rule, legendre, panels[k], panels[k].hi - panels[k].lo,
                 [&](double u) { return u_pow(u) * one_minus_u_pow(u); });
  }
  append_panel(rule, gauss_jacobi01(n, 0.0, q), {top, 1.0},
               std::exp((q + 1.0) * std::log1p(-top)), u_pow);
  return rule;
}

QuadratureRule graded_laguerre(int n, double alpha, double scale) {
  const double top = alpha + 1.0;
  if (!(scale > 0.0) || scale >= top / 2.0) return gauss_laguerre(n, alpha);

  const auto panels = graded_panels(scale, top);
  QuadratureRule rule;
  rule.kind = Graded{Laguerre{alpha}, scale, static_cast<int>(panels.size()) + 1};
  rule.exactness_degree = -1;
  const auto u_pow = [alpha](double u) { return std::exp(alpha * std::log(u)); };

  const Panel& first = panels.front();
  append_panel(rule, gauss_jacobi01(n, alpha, 0.0), first, std::pow(first.hi, alpha + 1.0),
               [](double u) { return std::exp(-u); });
  const auto legendre = gauss_jacobi01(n, 0.0, 0.0);
  for (std::size_t k = 1; k < panels.size(); ++k) {
    append_panel(rule, legendre, panels[k], panels[k].hi - panels[k].lo,
                 [&](double u) { return u_pow(u) * std::exp(-u); });
  }
  const auto tail = gauss_laguerre(n, 0.0);
  const double e_top = std::exp(-top);
  for (std::size_t i = 0; i < tail.size(); ++i) {
    const double u = top + tail.nodes[i];
    rule.nodes.push_back(u);
    rule.weights.push_back(tail.weights[i] * e_top * u_pow(u));
  }
  return rule;
}

IntegrationResult integrate_converged(const RuleFactory& factory,
                                      const std::function<double(double)>& f,
                                      const IntegrationOptions& opts) {
  if (!(opts.rtol > 0.0)) throw DomainError("integrate_converged: rtol must be positive");
  if (opts.n_initial < 1 || opts.n_max < opts.n_initial) {
    throw DomainError("integrate_converged: need 1 <= n_initial <= n_max");
  }
  const auto evaluate = [&](int n, double& abs_sum) {
    const QuadratureRule rule = factory(n);
    double sum = 0.0;
    abs_sum = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
      const double term = rule.weights[i] * f(rule.nodes[i]);
      sum += term;
      abs_sum += std::abs(term);
    }
    return sum;
  };

  int n = opts.n_initial;
  double abs_sum = 0.0;
  double previous = evaluate(n, abs_sum);
  double older = previous;
  while (2L * n <= opts.n_max) {
    n *= 2;
    const double value = evaluate(n, abs_sum);
    const double diff = std::abs(value - previous);
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * abs_sum;
    if (diff <= opts.rtol * std::abs(value) || diff <= floor) {
      return {value, value != 0.0 ? diff / std::abs(value) : diff, n};
    }
    older = previous;
    previous = value;
  }
  throw ConvergenceError("integrate_converged: no agreement to rtol " +
                             std::to_string(opts.rtol) + " up to N = " + std::to_string(n),
                         previous, older);
}

std::string describe(const RuleKind& kind) {
  std::ostringstream os;
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Jacobi01>) {
          os << "jacobi01(" << k.p << "," << k.q << ")";
        } else if constexpr (std::is_same_v<T, Laguerre>) {
          os << "laguerre(" << k.alpha << ")";
        } else {
          os << "graded[" << k.panels << " panels, scale " << k.scale << "] ";
          os << describe(std::visit([](const auto& p) { return RuleKind{p}; }, k.parent));
        }
      },
      kind);
  return os.str();
}

}  // namespace ergocap::quadrature
