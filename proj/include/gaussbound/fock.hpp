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

#include <string>
#include <vector>

#include "gaussbound/bounds.hpp"
#include "gaussbound/core.hpp"

namespace gaussbound::fock {

// Ground-truth engine: density matrices of concrete Gaussian states on a
// truncated number basis, exact overlap / fidelity / Bures / trace-norm
// distances, and the certification driver that compares the closed-form
// machinery against them.
//
// Quadrature convention: q = (a + a^dag)/sqrt(2), p = i(a^dag - a)/sqrt(2),
// so the vacuum covariance is (1/2) I and a coherent state |z> has mean
// (sqrt(2) Re z, sqrt(2) Im z).
//
// Squeezing convention: squeezed(r, phi=0) targets cov diag(e^{2r}/2,
// e^{-2r}/2), i.e. positive r anti-squeezes q; phi rotates the squeezing
// axes by phi/2. The builder picks the generator sign to match this target,
// which is the contract enforced by the moment round-trip tests.

struct StateBuilder {
  enum class Kind {
    vacuum,
    coherent,
    thermal,
    squeezed,
    displaced_squeezed_thermal,
    two_mode_squeezed,
    product,
  };

  Kind kind = Kind::vacuum;
  Complex z{0.0, 0.0};
  double r = 0.0;
  double phi = 0.0;
  double nbar = 0.0;
  std::vector<StateBuilder> factors;  // product only; single-mode factors

  static StateBuilder vacuum(int modes = 1);
  static StateBuilder coherent(Complex z);
  static StateBuilder thermal(double nbar);
  static StateBuilder squeezed(double r, double phi = 0.0);
  static StateBuilder displaced_squeezed_thermal(Complex z, double r, double phi, double nbar);
  static StateBuilder two_mode_squeezed(double r);
  static StateBuilder product(std::vector<StateBuilder> factors);

  int modes() const;

  // Closed-form (mean, cov) this builder targets; the Fock construction
  // must reproduce it within truncation tolerance.
  GaussianState target() const;

  std::string describe() const;
};

inline constexpr int dim_cap = 4096;

// Default per-mode cutoff: 60 for one mode, 24 for two.
int default_cutoff(int modes);

// 1e-9 for thermal/coherent content, 1e-7 once squeezing is involved.
double deficit_budget(const StateBuilder& builder);

struct FockDensityMatrix {
  int modes = 1;
  int dim_per_mode = 0;
  ComplexMatrix matrix;        // Hermitian, PSD, unit trace
  double trace_deficit = 0.0;  // 1 - trace before renormalization
};

// Throws CutoffTooSmall if the deficit exceeds the builder's budget and
// DimCapExceeded if cutoff^modes > dim_cap.
FockDensityMatrix build(const StateBuilder& builder, int cutoff);

// Truncated single-mode ladder operator a, a|n> = sqrt(n)|n-1>.
ComplexMatrix annihilation_operator(int dim);

// exp(z a^dag - conj(z) a) on the truncated basis. Exactly unitary up to
// eigensolver roundoff since the truncated generator stays anti-Hermitian.
ComplexMatrix displacement_unitary(Complex z, int dim);

// Squeeze unitary matching the squeezed(r, phi) covariance convention.
ComplexMatrix squeeze_unitary(double r, double phi, int dim);

// mean_i = Tr(rho R_i); cov_ij = (1/2) Tr(rho {R_i - m_i, R_j - m_j}).
std::pair<Vector, Matrix> extract_moments(const FockDensityMatrix& rho);

// Functional-calculus square root. Eigenvalues within [-1e-10, 0) are
// clamped to zero; anything lower throws NotPSD.
ComplexMatrix psd_sqrt(const ComplexMatrix& rho);

struct ExactMetrics {
  double overlap = 1;         // Tr sqrt(rho1) sqrt(rho2)
  double fidelity_root = 1;   // Tr |sqrt(rho1) sqrt(rho2)|
  double trace_distance = 0;  // ||rho1 - rho2||_1
  double bures = 0;           // sqrt(2 (1 - fidelity_root))
  double lambda_max = 1;      // largest eigenvalue of rho1
};

ExactMetrics exact_metrics(const FockDensityMatrix& rho1, const FockDensityMatrix& rho2);

struct InequalityRow;

// Consistency rows among exact metrics alone: overlap vs fidelity ordering
// and the trace-norm / Bures sandwich bounds.
std::vector<InequalityRow> chain_rows(const ExactMetrics& ex);

struct InequalityRow {
  std::string tag;  // identifier used in reports, e.g. "bur", "tnb", "E1"
  std::string description;
  double lhs = 0;
  double rhs = 0;
  double margin = 0;  // rhs - lhs; pass iff margin >= -tolerance
  double tolerance = 0;
  bool pass = true;
};

struct CertificateReport {
  StateBuilder builder1, builder2;
  int cutoff = 0;
  double deficit1 = 0, deficit2 = 0;
  ExactMetrics oracle;
  BoundReport bounds;
  double formula_overlap = 1;
  bool pair_is_pure = false;
  std::vector<InequalityRow> rows;
  bool all_pass = true;

  const InequalityRow* first_failure() const;
};

// Builds both states, checks the moment round trip, runs the closed-form
// bounds on the target moments and evaluates every inequality of the chain
// against the oracle values. cutoff <= 0 selects the per-mode default.
CertificateReport certify(const StateBuilder& b1, const StateBuilder& b2, int cutoff = 0);

}  // namespace gaussbound::fock
