// Copyright 2026 The gaussbound Authors
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

#include "gaussbound/hat.hpp"

#include <cmath>
#include <sstream>

namespace gaussbound {

HatDecomposition hat(const Matrix& cov) {
  const SymplecticSpectrum ws = williamson(cov);
  const int s = static_cast<int>(ws.nu.size());
  const int dim = 2 * s;

  HatDecomposition out;
  out.hat_spectrum = Vector(s);
  for (int j = 0; j < s; ++j) {
    const double nu = ws.nu(j);
    double gap = nu * nu - 0.25;
    if (gap < tol::pure) gap = 0.0;
    out.hat_spectrum(j) = nu + std::sqrt(gap);
  }

  // hat = S Dhat S^T, symmetric by construction up to roundoff.
  Matrix dhat = Matrix::Zero(dim, dim);
  for (int j = 0; j < s; ++j) {
    dhat(2 * j, 2 * j) = out.hat_spectrum(j);
    dhat(2 * j + 1, 2 * j + 1) = out.hat_spectrum(j);
  }
  Matrix h = ws.S * dhat * ws.S.transpose();
  out.hat = 0.5 * (h + h.transpose());

  // Upsilon = alpha^{-1} hat - I, recovered by a symmetric solve.
  const Matrix sym = 0.5 * (cov + cov.transpose());
  out.upsilon = sym.ldlt().solve(out.hat) - Matrix::Identity(dim, dim);
  return out;
}

Matrix hat_times_upsilon(const HatDecomposition& dec, const Matrix& cov) {
  Matrix p = dec.hat - 0.5 * (cov + cov.transpose());
  return 0.5 * (p + p.transpose());
}

Matrix hat_gauge_invariant(const Matrix& cov) {
  const int dim = static_cast<int>(cov.rows());
  if (dim % 2 != 0 || dim == 0 || cov.cols() != dim)
    throw DimensionMismatch("covariance dimension must be even and positive");
  const Matrix delta = symplectic_form_matrix(dim / 2);
  const double comm = (cov * delta - delta * cov).norm();
  if (comm > tol::comm) {
    std::ostringstream msg;
    msg << "commutator norm " << comm << " exceeds " << tol::comm;
    throw CommutatorTooLarge(msg.str());
  }

  const Matrix operand = cov * cov - 0.25 * Matrix::Identity(dim, dim);
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (operand + operand.transpose()));
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("symmetric eigensolver did not converge");
  Vector lam = es.eigenvalues();
  if (lam(0) < -tol::psd) {
    std::ostringstream msg;
    msg << "alpha^2 - (1/4)I has eigenvalue " << lam(0);
    throw NegativeOperand(msg.str());
  }
  lam = lam.cwiseMax(0.0).cwiseSqrt();
  Matrix root = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
  return 0.5 * (root + root.transpose());
}

}  // namespace gaussbound
