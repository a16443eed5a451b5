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

#include "gaussbound/types.hpp"

namespace gaussbound::kernels {

// Dense complex kernels that dominate the truncated-basis oracle. Each has
// an OpenMP-parallel production version and a plain serial reference; the
// references are kept for testing and benchmarking (see kernels_bench).

// C = A * B, naive triple loop. Reference implementation.
ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b);

// C = A * B, parallel over columns with vectorized axpy updates.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(A * B) without forming the product. Reference implementation.
Complex trace_product_serial(const ComplexMatrix& a, const ComplexMatrix& b);

// Tr(A * B), parallel reduction over rows.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// V diag(f) V^adj for a unitary V and real f: functional calculus of a
// Hermitian matrix from its eigendecomposition. Hermitized on return.
ComplexMatrix hermitian_rebuild(const ComplexMatrix& v, const Vector& f);

// Same with complex f (used for unitary exponentials); no hermitization.
ComplexMatrix rebuild(const ComplexMatrix& v, const ComplexVector& f);

}  // namespace gaussbound::kernels
