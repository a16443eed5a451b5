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

#include <cstdint>
#include <utility>
#include <vector>

#include "gaussbound/fock.hpp"

namespace gaussbound::verify {

using BuilderPair = std::pair<fock::StateBuilder, fock::StateBuilder>;

// Fixed pairs exercising every special case: thermal, coherent, squeezed,
// displaced squeezed thermal, correlated two-mode states and products.
std::vector<BuilderPair> canonical_pairs();

struct PairOutcome {
  fock::StateBuilder builder1, builder2;
  bool ok = false;
  std::string error;  // non-empty if the pair could not be evaluated at all
  fock::CertificateReport report;
};

// Pairs run independently (OpenMP fan-out); outcomes keep input order.
std::vector<PairOutcome> run_pairs(const std::vector<BuilderPair>& pairs, int cutoff = 0);

std::vector<PairOutcome> run_canonical(int cutoff = 0);
std::vector<PairOutcome> run_random(std::uint64_t seed, int count);

// Closed-form sweep for alpha = (1/2 + t) I against the vacuum. The bound
// tracks 2 d_B to first order in t while the trace-norm distance scales
// like ||alpha - beta||_1 itself, a factor sqrt below the bound.
struct AsymptoticRow {
  double t = 0;
  double diff_trace_norm = 0;  // ||alpha - beta||_1 = 2t
  double bound = 0;            // sqrt(2 ||alpha - beta||_1)
  double exact_two_bures = 0;
  double exact_trace_norm = 0;
  double ratio_bures = 0;  // exact_two_bures / bound
  double ratio_trace = 0;  // exact_trace_norm / diff_trace_norm
  bool pass = true;        // |ratio_bures - 1| <= 0.4 t and |ratio_trace - 1| <= t
};

std::vector<AsymptoticRow> run_asymptotic(const std::vector<double>& grid = {1e-1, 1e-2, 1e-3});

// Closed-form sweep for squeezed(r) against the vacuum.
struct SqueezeRow {
  double r = 0;
  double e1_bound = 0;
  double exact_two_bures = 0;
  double exact_trace_norm = 0;
  double ratio = 0;  // exact_two_bures / e1_bound
};

std::vector<SqueezeRow> run_squeeze(const std::vector<double>& grid);

}  // namespace gaussbound::verify
