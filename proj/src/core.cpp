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

#include "gaussbound/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace gaussbound {

namespace {

void require_finite(const Matrix& a, const char* what) {
  if (!a.allFinite()) throw NonFiniteInput(std::string(what) + " contains a non-finite entry");
}

// Symmetric PSD square root (and inverse root) by eigendecomposition.
// Throws NotPositiveDefinite if an eigenvalue is <= 0.
void spd_sqrt_pair(const Matrix& a, Matrix& root, Matrix& inv_root) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("symmetric eigensolver did not converge");
  const Vector& lam = es.eigenvalues();
  if (lam(0) <= 0.0) {
    std::ostringstream msg;
    msg << "matrix is not positive definite (min eigenvalue " << lam(0) << ")";
    throw NotPositiveDefinite(msg.str());
  }
  Vector sq = lam.cwiseSqrt();
  root = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().transpose();
  inv_root = es.eigenvectors() * sq.cwiseInverse().asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

SymplecticForm make_symplectic_form(int modes) {
  if (modes < 1) throw DimensionMismatch("mode count must be >= 1");
  SymplecticForm form;
  form.modes = modes;
  form.matrix = Matrix::Zero(2 * modes, 2 * modes);
  for (int j = 0; j < modes; ++j) {
    form.matrix(2 * j, 2 * j + 1) = 1.0;
    form.matrix(2 * j + 1, 2 * j) = -1.0;
  }
  return form;
}

Matrix symplectic_form_matrix(int modes) { return make_symplectic_form(modes).matrix; }

double min_uncertainty_eigenvalue(const Matrix& cov) {
  const int dim = static_cast<int>(cov.rows());
  ComplexMatrix h = cov.cast<Complex>();
  h += Complex(0.0, 0.5) * symplectic_form_matrix(dim / 2).cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("Hermitian eigensolver did not converge");
  return es.eigenvalues()(0);
}

GaussianState validate_state(const Vector& mean, const Matrix& cov) {
  if (cov.rows() != cov.cols()) throw DimensionMismatch("covariance matrix must be square");
  const auto dim = cov.rows();
  if (dim == 0 || dim % 2 != 0) throw DimensionMismatch("covariance dimension must be even and positive");
  if (mean.size() != dim) {
    std::ostringstream msg;
    msg << "mean length " << mean.size() << " does not match covariance dimension " << dim;
    throw DimensionMismatch(msg.str());
  }
  require_finite(cov, "covariance");
  if (!mean.allFinite()) throw NonFiniteInput("mean contains a non-finite entry");

  const double scale = std::max(1.0, cov.norm());
  const double asym = (cov - cov.transpose()).norm();
  if (asym > tol::sym * scale) {
    std::ostringstream msg;
    msg << "asymmetric part " << asym << " exceeds tolerance " << tol::sym * scale;
    throw AsymmetryBeyondTolerance(msg.str());
  }

  GaussianState state;
  state.modes = static_cast<int>(dim / 2);
  state.mean = mean;
  state.cov = 0.5 * (cov + cov.transpose());

  const double lam = min_uncertainty_eigenvalue(state.cov);
  if (lam < -tol::psd) {
    std::ostringstream msg;
    msg << "UncertaintyViolation: min eigenvalue of cov + (i/2)Delta is " << lam;
    throw UncertaintyViolation(msg.str());
  }
  return state;
}

SymplecticSpectrum williamson(const Matrix& cov) {
  const int dim = static_cast<int>(cov.rows());
  if (dim % 2 != 0 || dim == 0 || cov.cols() != dim)
    throw DimensionMismatch("covariance dimension must be even and positive");
  const int s = dim / 2;
  const Matrix sym = 0.5 * (cov + cov.transpose());

  Matrix root, inv_root;
  spd_sqrt_pair(sym, root, inv_root);

  // K = alpha^{-1/2} Delta alpha^{-1/2} is antisymmetric; iK is Hermitian
  // with eigenvalues -+ 1/nu_j. An orthonormal eigenvector u = x + i y of
  // iK for eigenvalue +1/nu carries the invariant plane: the real pair
  // (sqrt(2) y, sqrt(2) x) is orthonormal and brings K to its canonical
  // 2x2 block. This holds for degenerate nu as well because the +- kappa
  // eigenspaces are complex conjugate, hence u^T u' = 0 automatically.
  const Matrix delta = symplectic_form_matrix(s);
  Matrix k = inv_root * delta * inv_root;
  k = 0.5 * (k - k.transpose());
  ComplexMatrix ik = Complex(0, 1) * k.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(ik);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("Hermitian eigensolver did not converge in the symplectic diagonalization");

  // Eigenvalues come in -+ pairs; positive ones sit at the tail, sorted
  // ascending, i.e. kappa descending when walked backwards = nu ascending.
  struct ModePlane {
    double kappa;
    int index;
  };
  std::vector<ModePlane> planes;
  for (int i = 0; i < dim; ++i) {
    if (es.eigenvalues()(i) > 0) planes.push_back({es.eigenvalues()(i), i});
  }
  if (static_cast<int>(planes.size()) != s)
    throw ConvergenceFailure("symplectic spectrum is not paired; input is too close to singular");
  std::sort(planes.begin(), planes.end(),
            [](const ModePlane& a, const ModePlane& b) { return a.kappa > b.kappa; });

  SymplecticSpectrum out;
  out.nu = Vector(s);
  Matrix basis(dim, dim);  // orthogonal O with O^T K O in canonical form
  const double sqrt2 = std::sqrt(2.0);
  for (int j = 0; j < s; ++j) {
    out.nu(j) = 1.0 / planes[j].kappa;
    ComplexVector u = es.eigenvectors().col(planes[j].index);
    basis.col(2 * j) = sqrt2 * u.imag();
    basis.col(2 * j + 1) = sqrt2 * u.real();
  }

  out.D = Matrix::Zero(dim, dim);
  Matrix dinv_sqrt = Matrix::Zero(dim, dim);
  for (int j = 0; j < s; ++j) {
    out.D(2 * j, 2 * j) = out.nu(j);
    out.D(2 * j + 1, 2 * j + 1) = out.nu(j);
    const double inv_sq = 1.0 / std::sqrt(out.nu(j));
    dinv_sqrt(2 * j, 2 * j) = inv_sq;
    dinv_sqrt(2 * j + 1, 2 * j + 1) = inv_sq;
  }
  out.S = root * basis * dinv_sqrt;
  return out;
}

Vector symplectic_eigenvalues(const Matrix& cov) { return williamson(cov).nu; }

NormTriple norms(const Matrix& a) {
  require_finite(a, "matrix");
  NormTriple out;
  out.hs_norm = a.norm();
  if (a.size() == 0 || out.hs_norm == 0.0) return out;
  Eigen::JacobiSVD<Matrix> svd(a);
  out.trace_norm = svd.singularValues().sum();
  out.op_norm = svd.singularValues()(0);
  return out;
}

StateClass classify(const GaussianState& state) {
  StateClass cls;
  const Vector nu = symplectic_eigenvalues(state.cov);
  cls.pure = ((nu.array() - 0.5).abs() <= tol::pure).all();
  const Matrix delta = symplectic_form_matrix(state.modes);
  const double comm = (state.cov * delta - delta * state.cov).norm();
  cls.gauge_invariant = state.mean.norm() <= tol::comm && comm <= tol::comm;
  return cls;
}

}  // namespace gaussbound
