// Copyright 2026 The ionsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force references for the tests. Nothing here calls into the library's
// series or block-rotation code.

#include <cmath>
#include <complex>

#include <Eigen/Dense>

namespace ionsynth::oracle {

// exp(i eta (a + a^dagger)) on a Fock space truncated at `dim` levels, via the
// eigendecomposition of the real symmetric position matrix.
inline Eigen::MatrixXcd displacement(double eta, int dim) {
  Eigen::MatrixXd x = Eigen::MatrixXd::Zero(dim, dim);
  for (int k = 0; k + 1 < dim; ++k) {
    x(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    x(k + 1, k) = x(k, k + 1);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(x);
  Eigen::VectorXcd phases(dim);
  for (int i = 0; i < dim; ++i) {
    phases(i) = std::polar(1.0, eta * eig.eigenvalues()(i));
  }
  const Eigen::MatrixXcd v = eig.eigenvectors().cast<std::complex<double>>();
  return v * phases.asDiagonal() * v.transpose();
}

// exp(-i H t) for Hermitian H.
inline Eigen::MatrixXcd unitary(const Eigen::MatrixXcd& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(h);
  Eigen::VectorXcd phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases(i) = std::polar(1.0, -eig.eigenvalues()(i) * t);
  }
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace ionsynth::oracle
