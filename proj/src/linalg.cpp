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

#include "ergocap/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ergocap/errors.hpp"

namespace ergocap::linalg {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = std::conj((*this)(i, j));
  return t;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  const std::size_t n = a.cols();
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < a.rows(); ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
  return g;
}

double unitarity_residual(const ComplexMatrix& u) {
  const ComplexMatrix g = gram(u);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

ComplexMatrix complex_gaussian(std::size_t rows, std::size_t cols, RngStream& rng) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.data()) z = rng.complex_normal();
  return m;
}

namespace {

// Householder QR of a square matrix in place. On success `vs[j]` holds the
// reflector for column j (acting on rows j..m-1) and `diag_r[j]` = R_jj.
// Returns false if a pivot column vanished.
bool householder_qr(ComplexMatrix& a, std::vector<std::vector<Complex>>& vs,
                    std::vector<Complex>& diag_r) {
  const std::size_t m = a.rows();
  vs.assign(m, {});
  diag_r.assign(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double norm2 = 0.0;
    for (std::size_t i = j; i < m; ++i) norm2 += std::norm(a(i, j));
    if (norm2 == 0.0) return false;
    const double norm = std::sqrt(norm2);
    const Complex x0 = a(j, j);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    const Complex alpha = -phase * norm;

    auto& v = vs[j];
    v.resize(m - j);
    for (std::size_t i = j; i < m; ++i) v[i - j] = a(i, j);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (const auto& vi : v) vnorm2 += std::norm(vi);

    for (std::size_t k = j; k < m; ++k) {
      Complex s = 0.0;
      for (std::size_t i = j; i < m; ++i) s += std::conj(v[i - j]) * a(i, k);
      s *= 2.0 / vnorm2;
      for (std::size_t i = j; i < m; ++i) a(i, k) -= s * v[i - j];
    }
    // Scale v so that H = I - v v^dagger.
    const double scale = std::sqrt(2.0 / vnorm2);
    for (auto& vi : v) vi *= scale;
    diag_r[j] = alpha;
  }
  return true;
}

}  // namespace

ComplexMatrix haar_unitary(std::size_t m, RngStream& rng) {
  if (m == 0) throw DimensionError("haar_unitary: size must be positive");
  std::vector<std::vector<Complex>> vs;
  std::vector<Complex> diag_r;
  ComplexMatrix g;
  do {
    g = complex_gaussian(m, m, rng);
  } while (!householder_qr(g, vs, diag_r));

  // Q = H_0 H_1 ... H_{m-1} applied to I, accumulated right to left. Before
  // H_j is applied, rows and columns < j are still those of the identity.
  ComplexMatrix q = ComplexMatrix::identity(m);
  for (std::size_t jj = m; jj-- > 0;) {
    const auto& v = vs[jj];
    for (std::size_t k = jj; k < m; ++k) {
      Complex s = 0.0;
      for (std::size_t i = jj; i < m; ++i) s += std::conj(v[i - jj]) * q(i, k);
      for (std::size_t i = jj; i < m; ++i) q(i, k) -= s * v[i - jj];
    }
  }
  for (std::size_t j = 0; j < m; ++j) {
    const Complex phase = diag_r[j] / std::abs(diag_r[j]);
    for (std::size_t i = 0; i < m; ++i) q(i, j) *= phase;
  }
  return q;
}

ComplexMatrix corner(const ComplexMatrix& u, std::size_t rows, std::size_t cols) {
  if (rows > u.rows() || cols > u.cols()) {
    throw DimensionError("corner: requested " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " block of a " +
                         std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                         " matrix");
  }
  ComplexMatrix c(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) c(i, j) = u(i, j);
  return c;
}

double cholesky_logdet(const ComplexMatrix& g) {
  const std::size_t n = g.rows();
  if (g.cols() != n) throw DimensionError("cholesky_logdet: matrix must be square");
  ComplexMatrix l(n, n);
  double logdet = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double d = g(j, j).real();
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw NumericalError("cholesky_logdet: non-positive pivot " + std::to_string(d) +
                           " at index " + std::to_string(j));
    }
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    logdet += std::log(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = g(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return logdet;
}

double logdet_id_plus_scaled_gram(const ComplexMatrix& h, double c) {
  if (!(c >= 0.0)) throw DomainError("logdet_id_plus_scaled_gram: c must be >= 0");
  if (c == 0.0) return 0.0;
  ComplexMatrix g = gram(h);
  for (auto& z : g.data()) z *= c;
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) += 1.0;
  return cholesky_logdet(g);
}

TridiagEigen tridiag_eigen(const SymTridiagonal& t, int max_sweeps) {
  const std::size_t n = t.diag.size();
  if (n == 0) throw DimensionError("tridiag_eigen: empty matrix");
  if (t.offdiag.size() + 1 != n) {
    throw DimensionError("tridiag_eigen: offdiag must have diag.size() - 1 entries");
  }
  std::vector<double> d = t.diag;
  std::vector<double> e(n, 0.0);
  std::copy(t.offdiag.begin(), t.offdiag.end(), e.begin());
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const auto nn = static_cast<long>(n);
  for (long l = 0; l < nn; ++l) {
    int sweeps = 0;
    long m;
    do {
      for (m = l; m < nn - 1; ++m) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (sweeps++ == max_sweeps) {
        throw ConvergenceError("tridiag_eigen: QL iteration did not converge for eigenvalue " +
                                   std::to_string(l),
                               d[l], e[l]);
      }
      // Wilkinson-type shift from the leading 2x2 block.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      long i;
      bool deflated = false;
      for (i = m - 1; i >= l; --i) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          deflated = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        f = z[i + 1];
        z[i + 1] = s * z[i] + c * f;
        z[i] = c * z[i] - s * f;
      }
      if (deflated) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    } while (m != l);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });
  TridiagEigen out;
  out.eigenvalues.reserve(n);
  out.first_components.reserve(n);
  for (auto k : order) {
    out.eigenvalues.push_back(d[k]);
    out.first_components.push_back(std::abs(z[k]));
  }
  return out;
}

}  // namespace ergocap::linalg
