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

#include "gaussbound/sampling.hpp"

#include <cmath>

namespace gaussbound {

namespace {

ComplexMatrix random_unitary(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g;
  ComplexMatrix z(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) z(i, j) = Complex(g(rng), g(rng));
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the diagonal phases so the distribution does not depend on the QR
  // sign conventions.
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1, 0);
  }
  return q;
}

// Real embedding of an s x s complex matrix in the interleaved quadrature
// ordering: block (j,k) = [[Re, -Im], [Im, Re]]. Unitaries map to passive
// symplectic orthogonals; Hermitian matrices to symmetric matrices
// commuting with the symplectic form.
Matrix embed_complex(const ComplexMatrix& u) {
  const int s = static_cast<int>(u.rows());
  Matrix out(2 * s, 2 * s);
  for (int j = 0; j < s; ++j) {
    for (int k = 0; k < s; ++k) {
      const double re = u(j, k).real(), im = u(j, k).imag();
      out(2 * j, 2 * k) = re;
      out(2 * j, 2 * k + 1) = -im;
      out(2 * j + 1, 2 * k) = im;
      out(2 * j + 1, 2 * k + 1) = re;
    }
  }
  return out;
}

}  // namespace

Matrix random_passive(std::mt19937_64& rng, int modes) {
  return embed_complex(random_unitary(rng, modes));
}

GaussianState random_state(std::mt19937_64& rng, int modes, const StateSamplerOptions& opt) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> g;
  const int dim = 2 * modes;

  Matrix d = Matrix::Zero(dim, dim);
  for (int j = 0; j < modes; ++j) {
    const double nu = 0.5 + (opt.nu_max - 0.5) * unif(rng);
    d(2 * j, 2 * j) = nu;
    d(2 * j + 1, 2 * j + 1) = nu;
  }
  Matrix squeeze = Matrix::Zero(dim, dim);
  for (int j = 0; j < modes; ++j) {
    const double r = opt.r_max * unif(rng);
    squeeze(2 * j, 2 * j) = std::exp(r);
    squeeze(2 * j + 1, 2 * j + 1) = std::exp(-r);
  }
  const Matrix s = random_passive(rng, modes) * squeeze * random_passive(rng, modes);
  Matrix cov = s * d * s.transpose();
  cov = 0.5 * (cov + cov.transpose()).eval();

  Vector mean(dim);
  for (int i = 0; i < dim; ++i) mean(i) = opt.mean_sigma * g(rng);
  if (mean.norm() > 4.0) mean *= 4.0 / mean.norm();

  return validate_state(mean, cov);
}

Matrix random_gauge_invariant_cov(std::mt19937_64& rng, int modes, double nu_max) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const ComplexMatrix u = random_unitary(rng, modes);
  Vector nu(modes);
  for (int j = 0; j < modes; ++j) nu(j) = 0.5 + (nu_max - 0.5) * unif(rng);
  const ComplexMatrix h = u * nu.cast<Complex>().asDiagonal() * u.adjoint();
  Matrix cov = embed_complex(0.5 * (h + h.adjoint().eval()));
  return 0.5 * (cov + cov.transpose()).eval();
}

int suite_cutoff(int modes) { return modes >= 2 ? 24 : 96; }

std::pair<fock::StateBuilder, fock::StateBuilder> random_builder_pair(std::mt19937_64& rng) {
  using B = fock::StateBuilder;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> g;

  // Single-mode states cover the whole displaced-squeezed-thermal family;
  // the ranges keep the deficit at cutoff 96 well under the budget.
  const auto one_mode = [&]() {
    const double nu = 0.5 + 1.5 * unif(rng);
    const double r = 0.45 * unif(rng);
    const double phi = 2.0 * M_PI * unif(rng);
    Complex z(0.55 * g(rng), 0.55 * g(rng));
    if (std::abs(z) > 1.1) z *= 1.1 / std::abs(z);
    switch (static_cast<int>(unif(rng) * 4)) {
      case 0: return B::coherent(z);
      case 1: return B::thermal(nu - 0.5);
      case 2: return B::squeezed(r, phi);
      default: return B::displaced_squeezed_thermal(z, r, phi, nu - 0.5);
    }
  };
  // Two-mode factors are colder so the per-mode cutoff 24 suffices.
  const auto cold_factor = [&]() {
    const double nu = 0.5 + 0.45 * unif(rng);
    const double r = 0.18 * unif(rng);
    const double phi = 2.0 * M_PI * unif(rng);
    Complex z(0.3 * g(rng), 0.3 * g(rng));
    if (std::abs(z) > 0.6) z *= 0.6 / std::abs(z);
    return B::displaced_squeezed_thermal(z, r, phi, nu - 0.5);
  };
  const auto two_mode = [&]() {
    if (unif(rng) < 0.4) return B::two_mode_squeezed(0.55 * unif(rng));
    return B::product({cold_factor(), cold_factor()});
  };

  if (unif(rng) < 0.65) return {one_mode(), one_mode()};
  return {two_mode(), two_mode()};
}

}  // namespace gaussbound
