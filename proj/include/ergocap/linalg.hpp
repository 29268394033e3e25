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

// Small dense complex linear algebra for the Monte Carlo samplers, plus the
// symmetric tridiagonal eigensolver behind Golub-Welsch quadrature.
//
// Haar sampling. If G has i.i.d. CN(0,1) entries and G = QR is any QR
// factorization, Q alone is not Haar distributed: the factorization is only
// unique up to G = (Q D)(D^* R) for a diagonal unitary D, and Householder
// picks a D that depends on G. Fixing the convention so that diag(R) is
// real positive makes (Q, R) a measurable function of G that commutes with
// left multiplication by any fixed unitary V (VG = (VQ)R). Because VG has
// the same law as G, VQ has the same law as Q, which is exactly left
// invariance, i.e. Haar measure. The convention is imposed after the fact by
// U = Q diag(R_jj / |R_jj|).

#ifndef ERGOCAP_LINALG_HPP_
#define ERGOCAP_LINALG_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ergocap/rng.hpp"

namespace ergocap::linalg {

using Complex = std::complex<double>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<Complex> data() noexcept { return data_; }
  std::span<const Complex> data() const noexcept { return data_; }

  ComplexMatrix adjoint() const;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// A^dagger A.
ComplexMatrix gram(const ComplexMatrix& a);

/// max_{ij} |(U^dagger U - I)_{ij}|.
double unitarity_residual(const ComplexMatrix& u);

/// i.i.d. CN(0, 1) entries, drawn in row-major order.
ComplexMatrix complex_gaussian(std::size_t rows, std::size_t cols, RngStream& rng);

/// Haar-distributed m x m unitary: Householder QR of a complex Gaussian
/// matrix followed by the phase correction described at the top of this
/// header. A Gaussian draw with a zero pivot column is discarded and redrawn.
ComplexMatrix haar_unitary(std::size_t m, RngStream& rng);

/// Upper-left rows x cols block. Throws DimensionError if it does not fit.
ComplexMatrix corner(const ComplexMatrix& u, std::size_t rows, std::size_t cols);

/// ln det(G) for Hermitian positive definite G via Cholesky. Throws
/// NumericalError if a pivot is not strictly positive.
double cholesky_logdet(const ComplexMatrix& g);

/// ln det(I + c H^dagger H) through Cholesky. Requires c >= 0.
double logdet_id_plus_scaled_gram(const ComplexMatrix& h, double c);

struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> offdiag;  // size diag.size() - 1
};

struct TridiagEigen {
  std::vector<double> eigenvalues;       // ascending
  std::vector<double> first_components;  // |v_0| of each unit eigenvector
};

/// All eigenvalues of a symmetric tridiagonal matrix and the first
/// component of each normalized eigenvector (implicit-shift QL). Only the
/// first row of the eigenvector matrix is accumulated, so the cost is
/// O(N^2). Throws ConvergenceError after `max_sweeps` QL sweeps on one
/// eigenvalue.
TridiagEigen tridiag_eigen(const SymTridiagonal& t, int max_sweeps = 60);

}  // namespace ergocap::linalg

#endif  // ERGOCAP_LINALG_HPP_
