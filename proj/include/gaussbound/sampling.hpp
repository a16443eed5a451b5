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

#include <random>
#include <utility>

#include "gaussbound/core.hpp"
#include "gaussbound/fock.hpp"

namespace gaussbound {

// Random admissible states for property tests. The covariance is
// S D S^T with nu_j ~ U[1/2, nu_max] and S a passive-squeeze-passive
// sandwich (per-mode squeezers up to r_max between two random passive
// transformations); means are Gaussian, clipped to ||m|| <= 4.
struct StateSamplerOptions {
  double nu_max = 6.0;
  double r_max = 0.75;
  double mean_sigma = 1.0;
};

GaussianState random_state(std::mt19937_64& rng, int modes, const StateSamplerOptions& opt = {});

// Random covariance commuting with the symplectic form (passive class),
// built from a random Hermitian matrix with eigenvalues in [1/2, nu_max].
Matrix random_gauge_invariant_cov(std::mt19937_64& rng, int modes, double nu_max = 4.0);

// Random passive symplectic (orthogonal) matrix: the real embedding of a
// Haar-ish unitary on the mode space.
Matrix random_passive(std::mt19937_64& rng, int modes);

// Random builder pairs for the oracle-backed verification suite. The
// parameter ranges are chosen so every sampled state stays within the
// truncation deficit budget at the suite's cutoffs (96 for one mode,
// 24 per mode for two).
std::pair<fock::StateBuilder, fock::StateBuilder> random_builder_pair(std::mt19937_64& rng);

int suite_cutoff(int modes);

}  // namespace gaussbound
