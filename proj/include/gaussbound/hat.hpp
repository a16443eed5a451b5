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

#include "gaussbound/core.hpp"

namespace gaussbound {

// The hat transform of a covariance matrix,
//
//   hat(alpha) = alpha (I + Upsilon),  Upsilon = sqrt(I + (2 Delta^{-1} alpha)^{-2}),
//
// evaluated through the symplectic normal form: hat(alpha) = S Dhat S^T with
// Dhat = diag(a_j, a_j) and a_j = nu_j + sqrt(nu_j^2 - 1/4). The principal
// square-root branch is the one that keeps hat(alpha) a positive matrix with
// symplectic spectrum a_j >= 1/2; any other branch loses positivity.
//
// For a pure state (all nu_j = 1/2): Upsilon = 0 and hat(alpha) = alpha.
struct HatDecomposition {
  Matrix upsilon;       // Upsilon (not symmetric in general)
  Matrix hat;           // symmetric, hat - alpha is PSD
  Vector hat_spectrum;  // a_j, ascending together with nu_j
};

// Throws on non-admissible input via the williamson preconditions.
// nu_j^2 - 1/4 is clamped at zero when within tol::pure of zero so that
// near-pure inputs do not feed tiny negatives into the square root.
HatDecomposition hat(const Matrix& cov);

// Product alpha * Upsilon_alpha = hat(alpha) - alpha (symmetric PSD).
Matrix hat_times_upsilon(const HatDecomposition& dec, const Matrix& cov);

// Specialized route for covariances commuting with Delta: returns the
// symmetric PSD square root of alpha^2 - (1/4) I, which equals
// alpha * Upsilon_alpha on this class of inputs.
// Throws CommutatorTooLarge if ||alpha Delta - Delta alpha|| > tol::comm and
// NegativeOperand if alpha^2 - (1/4) I has an eigenvalue below -tol::psd.
Matrix hat_gauge_invariant(const Matrix& cov);

}  // namespace gaussbound
