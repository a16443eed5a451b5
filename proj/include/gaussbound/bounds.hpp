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

#include <optional>
#include <string>

#include "gaussbound/core.hpp"
#include "gaussbound/hat.hpp"

namespace gaussbound {

// Closed-form distance bounds between Gaussian states from their first and
// second moments, plus the conversion chain between states overlap
// Tr sqrt(rho1) sqrt(rho2), fidelity, Bures distance and trace-norm distance.

// states overlap = (det hat(a) det hat(b))^{1/4} / det(sigma)^{1/2}
//                  * exp(-(1/4) m^T sigma^{-1} m),
// sigma = (hat(a) + hat(b))/2, m = m1 - m2. Determinants are evaluated in
// log space via Cholesky so hot states cannot overflow.
struct OverlapResult {
  double overlap = 1.0;
  double log_prefactor = 0.0;  // log of the determinant factor, <= 0
  double exponent_term = 0.0;  // (1/4) m^T sigma^{-1} m, >= 0
  Matrix sigma;
};

OverlapResult overlap(const GaussianState& s1, const GaussianState& s2);

// The scalar trace_delta(a, b), computed along two algebraically equal
// routes that are kept as mutual checks:
//   via_definition = (1/4) Tr (hat(a)-hat(b)) (hat(b)^{-1}-hat(a)^{-1})
//   via_identity   = Tr[((a-b) Delta^{-1})^2] - Tr[((a Ua - b Ub) Delta^{-1})^2]
// with Ua, Ub the hat-transform square-root factors.
struct TraceDelta {
  double value = 0;  // = via_definition
  double via_definition = 0;
  double via_identity = 0;
};

TraceDelta trace_delta(const Matrix& cov1, const Matrix& cov2);

// ||a - b||_2^2 + ||a Ua - b Ub||_2^2, an upper bound on trace_delta.
double trace_delta_upper(const Matrix& cov1, const Matrix& cov2);

// m^T sigma^{-1} m with sigma = (hat(a)+hat(b))/2, plus the closed bound
// 2 (||a|| + ||b||) ||m||_2^2. The un-hatted variant m^T ((a+b)/2)^{-1} m
// is reported as well; it dominates the hatted value.
struct MeanTerm {
  double value = 0;           // hatted sigma
  double value_unhatted = 0;  // sigma built from a, b directly
  double bound = 0;
};

MeanTerm mean_term(const Vector& m, const Matrix& cov1, const Matrix& cov2);

enum class Specialization { none, pure, gauge_invariant, thermal_vacuum };

std::string to_string(Specialization s);

// Full bound breakdown for a state pair. bures_bound is the upper bound on
// the Bures distance d_B; the trace-norm distance obeys
// ||rho1 - rho2||_1 <= 2 d_B <= 2 * bures_bound.
struct BoundReport {
  double overlap = 1.0;
  double trace_delta = 0;
  double trace_delta_via_identity = 0;
  double trace_delta_upper = 0;
  double mean_term = 0;
  double mean_term_unhatted = 0;
  double mean_term_bound = 0;
  double one_minus_overlap_bound = 0;  // (1/4)(mean_term + trace_delta)
  double bures_bound = 0;              // sqrt((1/2)(mean_term + trace_delta))
  double trace_norm_bound = 0;         // 2 * bures_bound
  std::optional<double> specialized_bound;  // on 2 d_B, when a special form applies
  Specialization which_specialization = Specialization::none;
};

BoundReport proposition_bound(const GaussianState& s1, const GaussianState& s2);

// Pure pair: 2 d_B <= sqrt(2 (||a||+||b||) ||m1-m2||_2^2 + ||a-b||_2^2).
double pure_bound(const GaussianState& s1, const GaussianState& s2);

// Gauge-invariant (passive) pair:
// 2 d_B <= sqrt(2 [ (||a||+||b||) ||a-b||_1 - ||a-b||_2^2 ]).
double gauge_invariant_bound(const GaussianState& s1, const GaussianState& s2);

// Thermal-like state against the vacuum. Everything is closed form here:
//   bound            = sqrt(2 ||a - (1/2)I||_1)   (upper bound on 2 d_B)
//   lambda0          = det(a + (1/2)I)^{-1/2}     (largest eigenvalue of rho)
//   exact_trace_norm = 2 (1 - lambda0)
//   exact_bures      = sqrt(2 (1 - sqrt(lambda0)))
struct ThermalVacuumBound {
  double bound = 0;
  double lambda0 = 1;
  double exact_trace_norm = 0;
  double exact_bures = 0;
};

// s1 must be gauge invariant with cov - (1/2)I PSD; the second state is the
// vacuum. Throws NotGaugeInvariant / NotThermalLike.
ThermalVacuumBound thermal_vacuum_bound(const GaussianState& s1);

// Conversion chain seeded by an overlap value, optionally enriched with
// exact quantities. For pure pairs the chain collapses to equalities:
// trace norm = 2 sqrt(1-overlap), d_B = sqrt(2 (1-sqrt(overlap))).
struct ChainExact {
  std::optional<double> trace_norm;
  std::optional<double> fidelity_root;  // Tr |sqrt(rho1) sqrt(rho2)|
};

struct DistanceChain {
  double overlap = 1;
  std::optional<double> fidelity_root;
  double bures = 0;  // exact when derivable (fidelity known or pure), else upper bound
  bool bures_exact = false;
  double trace_lower = 0;  // 2 (1 - overlap)
  double trace_upper = 0;  // 2 sqrt(1 - overlap^2)
  std::optional<double> trace_norm;  // echo of the exact value when supplied (or pure)
};

// Throws OverlapOutOfRange unless overlap_value is in (0, 1]; throws
// CertificationFailure if a supplied exact value violates the chain.
DistanceChain chain(double overlap_value, const ChainExact& exact = {}, bool pure = false);

}  // namespace gaussbound
