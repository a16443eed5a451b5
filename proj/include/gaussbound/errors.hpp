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

#include <stdexcept>
#include <string>

namespace gaussbound {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// State validation
struct DimensionMismatch : Error { using Error::Error; };
struct AsymmetryBeyondTolerance : Error { using Error::Error; };
struct UncertaintyViolation : Error { using Error::Error; };
struct NonFiniteInput : Error { using Error::Error; };

// Decompositions
struct ConvergenceFailure : Error { using Error::Error; };
struct NotPositiveDefinite : Error { using Error::Error; };
struct CommutatorTooLarge : Error { using Error::Error; };
struct NegativeOperand : Error { using Error::Error; };

// Bounds
struct ModeMismatch : Error { using Error::Error; };
struct SigmaNotPD : Error { using Error::Error; };
struct NotPure : Error { using Error::Error; };
struct NotGaugeInvariant : Error { using Error::Error; };
struct NotThermalLike : Error { using Error::Error; };
struct OverlapOutOfRange : Error { using Error::Error; };

// Truncated-basis oracle
struct CutoffTooSmall : Error { using Error::Error; };
struct DimCapExceeded : Error { using Error::Error; };
struct NotPSD : Error { using Error::Error; };
struct CertificationFailure : Error { using Error::Error; };

// Input documents
struct ParseError : Error { using Error::Error; };

}  // namespace gaussbound
