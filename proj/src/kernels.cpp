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

#include "gaussbound/kernels.hpp"

#include "gaussbound/errors.hpp"

namespace gaussbound::kernels {

namespace {
void require_compatible(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matmul: inner dimensions differ");
}
}  // namespace

ComplexMatrix matmul_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_compatible(a, b);
  const Eigen::Index n = a.rows(), k = a.cols(), m = b.cols();
  ComplexMatrix c(n, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      Complex acc(0, 0);
      for (Eigen::Index l = 0; l < k; ++l) acc += a(i, l) * b(l, j);
      c(i, j) = acc;
    }
  }
  return c;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_compatible(a, b);
  const Eigen::Index k = a.cols(), m = b.cols();
  ComplexMatrix c(a.rows(), m);
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < m; ++j) {
    c.col(j).setZero();
    for (Eigen::Index l = 0; l < k; ++l) c.col(j).noalias() += b(l, j) * a.col(l);
  }
  return c;
}

Complex trace_product_serial(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_compatible(a, b);
  if (a.rows() != b.cols()) throw DimensionMismatch("trace_product: product is not square");
  Complex acc(0, 0);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, i);
  return acc;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_compatible(a, b);
  if (a.rows() != b.cols()) throw DimensionMismatch("trace_product: product is not square");
  double re = 0.0, im = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : re, im)
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const Complex t = (a.row(i) * b.col(i)).value();
    re += t.real();
    im += t.imag();
  }
  return {re, im};
}

ComplexMatrix rebuild(const ComplexMatrix& v, const ComplexVector& f) {
  if (v.cols() != f.size()) throw DimensionMismatch("rebuild: eigenvalue count differs");
  ComplexMatrix w = v;
#pragma omp parallel for schedule(static)
  for (Eigen::Index j = 0; j < w.cols(); ++j) w.col(j) *= f(j);
  const ComplexMatrix vh = v.adjoint();
  return matmul(w, vh);
}

ComplexMatrix hermitian_rebuild(const ComplexMatrix& v, const Vector& f) {
  ComplexMatrix c = rebuild(v, f.cast<Complex>());
  return 0.5 * (c + c.adjoint().eval());
}

}  // namespace gaussbound::kernels
