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

#include <Eigen/Dense>
#include <complex>

namespace gaussbound {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

// Numerical tolerances used throughout. Values are calibrated to
// double-precision eigensolver accuracy with a safety margin.
namespace tol {
inline constexpr double psd = 1e-9;     // admissibility of a covariance matrix
inline constexpr double sym = 1e-12;    // relative symmetry defect
inline constexpr double pure = 1e-9;    // symplectic eigenvalue distance to 1/2
inline constexpr double comm = 1e-9;    // commutator norm for passive states
inline constexpr double symp = 1e-10;   // relative symplecticity defect
inline constexpr double recon = 1e-10;  // relative reconstruction defect
inline constexpr double hat = 1e-8;     // relative residual of the hat transform
inline constexpr double rel = 1e-9;     // generic relative slack on inequalities
inline constexpr double id = 1e-8;      // agreement of the two trace-delta routes
inline constexpr double trunc = 1e-6;   // formula vs truncated-basis oracle
}  // namespace tol

}  // namespace gaussbound
