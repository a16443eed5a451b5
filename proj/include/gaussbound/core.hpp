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

#pragma once

#include "gaussbound/errors.hpp"
#include "gaussbound/types.hpp"

namespace gaussbound {

// Conventions used by the whole library:
//   - quadrature ordering (q1, p1, ..., qs, ps), hbar = 1;
//   - the vacuum covariance matrix is (1/2) I;
//   - a covariance matrix alpha is admissible iff the Hermitian matrix
//     alpha + (i/2) Delta is positive semidefinite, equivalently iff every
//     symplectic eigenvalue nu_j >= 1/2.

// The commutation matrix Delta: block diagonal with s copies of
// [[0,1],[-1,0]]. Delta^T = -Delta, Delta^2 = -I, Delta^{-1} = -Delta.
struct SymplecticForm {
  int modes = 0;
  Matrix matrix;
};

SymplecticForm make_symplectic_form(int modes);

// Plain 2s x 2s matrix of make_symplectic_form, for callers that only
// need Delta itself.
Matrix symplectic_form_matrix(int modes);

// A Gaussian state (m, alpha). The stored covariance is exactly symmetric.
struct GaussianState {
  int modes = 0;
  Vector mean;
  Matrix cov;
};

// Validates dimensions, symmetrizes cov and checks the uncertainty
// relation. Throws DimensionMismatch, AsymmetryBeyondTolerance,
// UncertaintyViolation or NonFiniteInput.
GaussianState validate_state(const Vector& mean, const Matrix& cov);

// Smallest eigenvalue of the Hermitian matrix cov + (i/2) Delta. Negative
// values beyond -tol::psd mean the uncertainty relation is violated.
double min_uncertainty_eigenvalue(const Matrix& cov);

// alpha = S D S^T with S symplectic (S Delta S^T = Delta) and
// D = diag(nu_1, nu_1, ..., nu_s, nu_s), nu sorted ascending.
struct SymplecticSpectrum {
  Vector nu;  // length s, ascending
  Matrix S;   // 2s x 2s symplectic
  Matrix D;   // diag(nu_j, nu_j)
};

// Requires a symmetric positive definite input; throws NotPositiveDefinite
// or ConvergenceFailure. The decomposition is unique only up to symplectic
// rotations of degenerate blocks; callers should rely on the invariants
// (S Delta S^T = Delta, S D S^T = alpha) rather than on entries of S.
SymplecticSpectrum williamson(const Matrix& cov);

// Convenience: just the symplectic eigenvalues, ascending.
Vector symplectic_eigenvalues(const Matrix& cov);

struct NormTriple {
  double trace_norm = 0;  // sum of singular values
  double hs_norm = 0;     // Frobenius
  double op_norm = 0;     // largest singular value
};

NormTriple norms(const Matrix& a);

struct StateClass {
  bool pure = false;
  bool gauge_invariant = false;
};

// pure  <=>  every nu_j within tol::pure of 1/2.
// gauge_invariant  <=>  zero mean and cov commutes with Delta.
StateClass classify(const GaussianState& state);

}  // namespace gaussbound
