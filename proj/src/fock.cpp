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

#include "gaussbound/fock.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>
#include <utility>

#include "gaussbound/kernels.hpp"

namespace gaussbound::fock {

namespace {

constexpr double kPsdClamp = 1e-10;

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      c.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return c;
}

// exp(G) for anti-Hermitian G, through the eigendecomposition of the
// Hermitian matrix -iG. Exactly unitary up to eigensolver roundoff.
ComplexMatrix anti_hermitian_exp(const ComplexMatrix& g) {
  ComplexMatrix h = Complex(0, -1) * g;
  h = 0.5 * (h + h.adjoint().eval());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success)
    throw ConvergenceFailure("Hermitian eigensolver failed on a generator");
  ComplexVector phases(es.eigenvalues().size());
  for (Eigen::Index i = 0; i < phases.size(); ++i)
    phases(i) = std::exp(Complex(0, es.eigenvalues()(i)));
  return kernels::rebuild(es.eigenvectors(), phases);
}

Matrix rotation2(double angle) {
  Matrix rot(2, 2);
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return rot;
}

Matrix squeezed_cov(double r, double phi, double nu) {
  Matrix d = Matrix::Zero(2, 2);
  d(0, 0) = nu * std::exp(2.0 * r);
  d(1, 1) = nu * std::exp(-2.0 * r);
  const Matrix rot = rotation2(0.5 * phi);
  return rot * d * rot.transpose();
}

struct BuildResult {
  ComplexMatrix matrix;  // unnormalized
  double deficit = 0.0;
};

BuildResult build_impl(const StateBuilder& b, int cutoff);

BuildResult from_pure(const ComplexVector& psi) {
  BuildResult out;
  out.deficit = std::max(0.0, 1.0 - psi.squaredNorm());
  out.matrix = psi * psi.adjoint();
  return out;
}

BuildResult build_impl(const StateBuilder& b, int cutoff) {
  const int n = cutoff;
  switch (b.kind) {
    case StateBuilder::Kind::vacuum: {
      ComplexVector psi = ComplexVector::Zero(n);
      psi(0) = 1.0;
      return from_pure(psi);
    }
    case StateBuilder::Kind::coherent: {
      ComplexVector psi = ComplexVector::Zero(n);
      psi(0) = 1.0;
      return from_pure(displacement_unitary(b.z, n) * psi);
    }
    case StateBuilder::Kind::thermal: {
      BuildResult out;
      out.matrix = ComplexMatrix::Zero(n, n);
      if (b.nbar <= 0.0) {
        out.matrix(0, 0) = 1.0;
        return out;
      }
      const double x = b.nbar / (b.nbar + 1.0);
      double w = 1.0 / (b.nbar + 1.0);
      for (int k = 0; k < n; ++k, w *= x) out.matrix(k, k) = w;
      out.deficit = std::pow(x, n);  // geometric tail
      return out;
    }
    case StateBuilder::Kind::squeezed: {
      ComplexVector psi = ComplexVector::Zero(n);
      psi(0) = 1.0;
      return from_pure(squeeze_unitary(b.r, b.phi, n) * psi);
    }
    case StateBuilder::Kind::displaced_squeezed_thermal: {
      StateBuilder th = StateBuilder::thermal(b.nbar);
      BuildResult core = build_impl(th, n);
      const ComplexMatrix us = squeeze_unitary(b.r, b.phi, n);
      const ComplexMatrix ud = displacement_unitary(b.z, n);
      ComplexMatrix rho = kernels::matmul(us, kernels::matmul(core.matrix, ComplexMatrix(us.adjoint())));
      rho = kernels::matmul(ud, kernels::matmul(rho, ComplexMatrix(ud.adjoint())));
      BuildResult out;
      out.matrix = std::move(rho);
      out.deficit = std::max(0.0, 1.0 - out.matrix.real().diagonal().sum());
      return out;
    }
    case StateBuilder::Kind::two_mode_squeezed: {
      ComplexVector psi = ComplexVector::Zero(n * n);
      const double th = std::tanh(b.r);
      double c = 1.0 / std::cosh(b.r);
      for (int k = 0; k < n; ++k, c *= th) psi(k * n + k) = c;
      return from_pure(psi);
    }
    case StateBuilder::Kind::product: {
      BuildResult out;
      out.matrix = ComplexMatrix::Ones(1, 1);
      double kept = 1.0;
      for (const StateBuilder& f : b.factors) {
        BuildResult part = build_impl(f, n);
        kept *= 1.0 - part.deficit;
        out.matrix = kron(out.matrix, part.matrix);
      }
      out.deficit = std::max(0.0, 1.0 - kept);
      return out;
    }
  }
  throw Error("unreachable builder kind");
}

std::vector<ComplexMatrix> quadrature_ops(int modes, int n) {
  const ComplexMatrix a = annihilation_operator(n);
  const ComplexMatrix eye = ComplexMatrix::Identity(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const ComplexMatrix q1 = inv_sqrt2 * (a + a.adjoint().eval());
  const ComplexMatrix p1 = Complex(0, inv_sqrt2) * (a.adjoint().eval() - a);

  std::vector<ComplexMatrix> ops;
  ops.reserve(2 * modes);
  for (int mode = 0; mode < modes; ++mode) {
    ComplexMatrix q = ComplexMatrix::Ones(1, 1), p = ComplexMatrix::Ones(1, 1);
    for (int k = 0; k < modes; ++k) {
      q = kron(q, k == mode ? q1 : eye);
      p = kron(p, k == mode ? p1 : eye);
    }
    ops.push_back(std::move(q));
    ops.push_back(std::move(p));
  }
  return ops;
}

void push_le(std::vector<InequalityRow>& rows, std::string tag, std::string desc, double lhs,
             double rhs, double tolerance) {
  InequalityRow row;
  row.tag = std::move(tag);
  row.description = std::move(desc);
  row.lhs = lhs;
  row.rhs = rhs;
  row.tolerance = tolerance;
  row.margin = rhs - lhs;
  row.pass = row.margin >= -tolerance;
  rows.push_back(std::move(row));
}

void push_eq(std::vector<InequalityRow>& rows, std::string tag, std::string desc, double a,
             double b, double tolerance) {
  push_le(rows, std::move(tag), std::move(desc), std::abs(a - b), 0.0, tolerance);
}

bool is_vacuum_state(const GaussianState& s) {
  return s.mean.norm() <= tol::psd &&
         (s.cov - 0.5 * Matrix::Identity(2 * s.modes, 2 * s.modes)).norm() <= tol::psd;
}

bool is_thermal_like(const GaussianState& s) {
  if (!classify(s).gauge_invariant) return false;
  Eigen::SelfAdjointEigenSolver<Matrix> es(
      s.cov - 0.5 * Matrix::Identity(2 * s.modes, 2 * s.modes), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0) >= -tol::psd;
}

}  // namespace

ComplexMatrix annihilation_operator(int dim) {
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int k = 1; k < dim; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

ComplexMatrix displacement_unitary(Complex z, int dim) {
  const ComplexMatrix a = annihilation_operator(dim);
  return anti_hermitian_exp(z * a.adjoint() - std::conj(z) * a);
}

// The generator sign is chosen so that squeezed(r, 0) lands on the target
// covariance diag(e^{2r}/2, e^{-2r}/2).
ComplexMatrix squeeze_unitary(double r, double phi, int dim) {
  const Complex zeta = -r * std::exp(Complex(0, phi));
  const ComplexMatrix a = annihilation_operator(dim);
  const ComplexMatrix a2 = a * a;
  return anti_hermitian_exp(0.5 * (std::conj(zeta) * a2 - zeta * a2.adjoint().eval()));
}

StateBuilder StateBuilder::vacuum(int modes) {
  StateBuilder b;
  b.kind = Kind::vacuum;
  if (modes < 1) throw DimensionMismatch("mode count must be >= 1");
  if (modes == 1) return b;
  return product(std::vector<StateBuilder>(modes, b));
}

StateBuilder StateBuilder::coherent(Complex z) {
  StateBuilder b;
  b.kind = Kind::coherent;
  b.z = z;
  return b;
}

StateBuilder StateBuilder::thermal(double nbar) {
  if (nbar < 0) throw Error("thermal occupation must be >= 0");
  StateBuilder b;
  b.kind = Kind::thermal;
  b.nbar = nbar;
  return b;
}

StateBuilder StateBuilder::squeezed(double r, double phi) {
  StateBuilder b;
  b.kind = Kind::squeezed;
  b.r = r;
  b.phi = phi;
  return b;
}

StateBuilder StateBuilder::displaced_squeezed_thermal(Complex z, double r, double phi,
                                                      double nbar) {
  if (nbar < 0) throw Error("thermal occupation must be >= 0");
  StateBuilder b;
  b.kind = Kind::displaced_squeezed_thermal;
  b.z = z;
  b.r = r;
  b.phi = phi;
  b.nbar = nbar;
  return b;
}

StateBuilder StateBuilder::two_mode_squeezed(double r) {
  StateBuilder b;
  b.kind = Kind::two_mode_squeezed;
  b.r = r;
  return b;
}

StateBuilder StateBuilder::product(std::vector<StateBuilder> factors) {
  if (factors.empty()) throw Error("product builder needs at least one factor");
  for (const StateBuilder& f : factors)
    if (f.modes() != 1) throw Error("product factors must be single-mode builders");
  StateBuilder b;
  b.kind = Kind::product;
  b.factors = std::move(factors);
  return b;
}

int StateBuilder::modes() const {
  switch (kind) {
    case Kind::two_mode_squeezed: return 2;
    case Kind::product: {
      int m = 0;
      for (const StateBuilder& f : factors) m += f.modes();
      return m;
    }
    default: return 1;
  }
}

GaussianState StateBuilder::target() const {
  GaussianState s;
  switch (kind) {
    case Kind::vacuum:
      s.modes = 1;
      s.mean = Vector::Zero(2);
      s.cov = 0.5 * Matrix::Identity(2, 2);
      return s;
    case Kind::coherent:
      s = vacuum(1).target();
      s.mean(0) = std::sqrt(2.0) * z.real();
      s.mean(1) = std::sqrt(2.0) * z.imag();
      return s;
    case Kind::thermal:
      s.modes = 1;
      s.mean = Vector::Zero(2);
      s.cov = (nbar + 0.5) * Matrix::Identity(2, 2);
      return s;
    case Kind::squeezed:
      s.modes = 1;
      s.mean = Vector::Zero(2);
      s.cov = squeezed_cov(r, phi, 0.5);
      return s;
    case Kind::displaced_squeezed_thermal:
      s.modes = 1;
      s.mean = Vector::Zero(2);
      s.mean(0) = std::sqrt(2.0) * z.real();
      s.mean(1) = std::sqrt(2.0) * z.imag();
      s.cov = squeezed_cov(r, phi, nbar + 0.5);
      return s;
    case Kind::two_mode_squeezed: {
      s.modes = 2;
      s.mean = Vector::Zero(4);
      const double c = 0.5 * std::cosh(2.0 * r);
      const double d = 0.5 * std::sinh(2.0 * r);
      s.cov = c * Matrix::Identity(4, 4);
      s.cov(0, 2) = s.cov(2, 0) = d;
      s.cov(1, 3) = s.cov(3, 1) = -d;
      return s;
    }
    case Kind::product: {
      s.modes = modes();
      s.mean = Vector::Zero(2 * s.modes);
      s.cov = Matrix::Zero(2 * s.modes, 2 * s.modes);
      int at = 0;
      for (const StateBuilder& f : factors) {
        const GaussianState part = f.target();
        s.mean.segment(at, 2) = part.mean;
        s.cov.block(at, at, 2, 2) = part.cov;
        at += 2;
      }
      return s;
    }
  }
  throw Error("unreachable builder kind");
}

std::string StateBuilder::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::vacuum: os << "vacuum"; break;
    case Kind::coherent: os << "coherent(z=" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i)"; break;
    case Kind::thermal: os << "thermal(nbar=" << nbar << ")"; break;
    case Kind::squeezed: os << "squeezed(r=" << r << ", phi=" << phi << ")"; break;
    case Kind::displaced_squeezed_thermal:
      os << "displaced_squeezed_thermal(z=" << z.real() << (z.imag() < 0 ? "" : "+") << z.imag()
         << "i, r=" << r << ", phi=" << phi << ", nbar=" << nbar << ")";
      break;
    case Kind::two_mode_squeezed: os << "two_mode_squeezed(r=" << r << ")"; break;
    case Kind::product: {
      os << "product(";
      for (size_t i = 0; i < factors.size(); ++i) os << (i ? ", " : "") << factors[i].describe();
      os << ")";
      break;
    }
  }
  return os.str();
}

int default_cutoff(int modes) { return modes >= 2 ? 24 : 60; }

double deficit_budget(const StateBuilder& builder) {
  switch (builder.kind) {
    case StateBuilder::Kind::squeezed:
    case StateBuilder::Kind::displaced_squeezed_thermal:
    case StateBuilder::Kind::two_mode_squeezed:
      return 1e-7;
    case StateBuilder::Kind::product: {
      for (const StateBuilder& f : builder.factors)
        if (deficit_budget(f) > 1e-9) return 1e-7;
      return 1e-9;
    }
    default:
      return 1e-9;
  }
}

FockDensityMatrix build(const StateBuilder& builder, int cutoff) {
  if (cutoff < 2) throw CutoffTooSmall("cutoff must be >= 2");
  const int modes = builder.modes();
  double total_dim = 1;
  for (int k = 0; k < modes; ++k) total_dim *= cutoff;
  if (total_dim > dim_cap) {
    std::ostringstream msg;
    msg << "total dimension " << total_dim << " exceeds cap " << dim_cap;
    throw DimCapExceeded(msg.str());
  }

  BuildResult raw = build_impl(builder, cutoff);
  const double budget = deficit_budget(builder);
  if (raw.deficit > budget) {
    std::ostringstream msg;
    msg << "trace deficit " << raw.deficit << " exceeds budget " << budget << " for "
        << builder.describe() << " at cutoff " << cutoff;
    throw CutoffTooSmall(msg.str());
  }

  FockDensityMatrix out;
  out.modes = modes;
  out.dim_per_mode = cutoff;
  out.trace_deficit = raw.deficit;
  out.matrix = 0.5 * (raw.matrix + raw.matrix.adjoint().eval());
  const double tr = out.matrix.real().diagonal().sum();
  if (tr <= 0) throw NotPSD("built matrix has non-positive trace");
  out.matrix /= tr;
  return out;
}

std::pair<Vector, Matrix> extract_moments(const FockDensityMatrix& rho) {
  const int dim = 2 * rho.modes;
  const std::vector<ComplexMatrix> ops = quadrature_ops(rho.modes, rho.dim_per_mode);

  Vector mean(dim);
  for (int i = 0; i < dim; ++i) mean(i) = kernels::trace_product(rho.matrix, ops[i]).real();

  std::vector<ComplexMatrix> shifted;
  shifted.reserve(dim);
  const ComplexMatrix eye =
      ComplexMatrix::Identity(rho.matrix.rows(), rho.matrix.cols());
  for (int i = 0; i < dim; ++i) shifted.push_back(ops[i] - mean(i) * eye);

  Matrix cov(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const ComplexMatrix rho_xi = kernels::matmul(rho.matrix, shifted[i]);
    for (int j = 0; j < dim; ++j)
      cov(i, j) = kernels::trace_product(rho_xi, shifted[j]).real();
  }
  cov = 0.5 * (cov + cov.transpose()).eval();
  return {mean, cov};
}

ComplexMatrix psd_sqrt(const ComplexMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho);
  if (es.info() != Eigen::Success) throw ConvergenceFailure("Hermitian eigensolver failed");
  Vector lam = es.eigenvalues();
  if (lam(0) < -kPsdClamp) {
    std::ostringstream msg;
    msg << "matrix has eigenvalue " << lam(0) << " below the PSD clamp";
    throw NotPSD(msg.str());
  }
  lam = lam.cwiseMax(0.0).cwiseSqrt();
  return kernels::hermitian_rebuild(es.eigenvectors(), lam);
}

ExactMetrics exact_metrics(const FockDensityMatrix& rho1, const FockDensityMatrix& rho2) {
  if (rho1.matrix.rows() != rho2.matrix.rows())
    throw DimensionMismatch("density matrices have different dimensions");

  const ComplexMatrix sq1 = psd_sqrt(rho1.matrix);
  const ComplexMatrix sq2 = psd_sqrt(rho2.matrix);

  ExactMetrics out;
  out.overlap = kernels::trace_product(sq1, sq2).real();

  const ComplexMatrix prod = kernels::matmul(sq1, sq2);
  Eigen::BDCSVD<ComplexMatrix> svd(prod);
  out.fidelity_root = svd.singularValues().sum();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> diff(rho1.matrix - rho2.matrix,
                                                    Eigen::EigenvaluesOnly);
  out.trace_distance = diff.eigenvalues().cwiseAbs().sum();

  out.bures = std::sqrt(std::max(0.0, 2.0 * (1.0 - out.fidelity_root)));

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> top(rho1.matrix, Eigen::EigenvaluesOnly);
  out.lambda_max = top.eigenvalues().maxCoeff();
  return out;
}

std::vector<InequalityRow> chain_rows(const ExactMetrics& ex) {
  std::vector<InequalityRow> rows;
  push_le(rows, "abs", "overlap <= fidelity root", ex.overlap, ex.fidelity_root, tol::id);
  push_le(rows, "basic", "2(1-overlap) <= trace distance", 2.0 * (1.0 - ex.overlap),
          ex.trace_distance, tol::id);
  push_le(rows, "basic", "trace distance <= 2 sqrt(1-overlap^2)", ex.trace_distance,
          2.0 * std::sqrt(std::max(0.0, 1.0 - ex.overlap * ex.overlap)), tol::id);
  push_le(rows, "fdg", "2(1-fidelity root) <= trace distance", 2.0 * (1.0 - ex.fidelity_root),
          ex.trace_distance, tol::id);
  push_le(rows, "fdg", "trace distance <= 2 sqrt(1-fidelity)", ex.trace_distance,
          2.0 * std::sqrt(std::max(0.0, 1.0 - ex.fidelity_root * ex.fidelity_root)), tol::id);
  push_le(rows, "bur", "bures <= sqrt(2(1-overlap))", ex.bures,
          std::sqrt(std::max(0.0, 2.0 * (1.0 - ex.overlap))), tol::id);
  push_le(rows, "tnb", "bures^2 <= trace distance", ex.bures * ex.bures, ex.trace_distance,
          tol::id);
  push_le(rows, "tnb", "trace distance <= 2 bures", ex.trace_distance, 2.0 * ex.bures, tol::id);
  return rows;
}

const InequalityRow* CertificateReport::first_failure() const {
  for (const InequalityRow& row : rows)
    if (!row.pass) return &row;
  return nullptr;
}

CertificateReport certify(const StateBuilder& b1, const StateBuilder& b2, int cutoff) {
  if (b1.modes() != b2.modes()) throw ModeMismatch("builders have different mode counts");
  CertificateReport rep;
  rep.builder1 = b1;
  rep.builder2 = b2;
  rep.cutoff = cutoff > 0 ? cutoff : default_cutoff(b1.modes());

  const FockDensityMatrix rho1 = build(b1, rep.cutoff);
  const FockDensityMatrix rho2 = build(b2, rep.cutoff);
  rep.deficit1 = rho1.trace_deficit;
  rep.deficit2 = rho2.trace_deficit;

  const GaussianState s1 = validate_state(b1.target().mean, b1.target().cov);
  const GaussianState s2 = validate_state(b2.target().mean, b2.target().cov);

  // Moment round trip: the built matrices must reproduce the targets.
  const auto [m1, c1] = extract_moments(rho1);
  const auto [m2, c2] = extract_moments(rho2);
  push_eq(rep.rows, "moments", "extracted moments match builder targets",
          std::max({(m1 - s1.mean).norm(), (c1 - s1.cov).norm(), (m2 - s2.mean).norm(),
                    (c2 - s2.cov).norm()}),
          0.0, tol::trunc);

  rep.oracle = exact_metrics(rho1, rho2);
  rep.bounds = proposition_bound(s1, s2);
  rep.formula_overlap = rep.bounds.overlap;

  const ExactMetrics& ex = rep.oracle;
  const BoundReport& bd = rep.bounds;
  auto& rows = rep.rows;

  push_eq(rows, "overl", "closed-form overlap matches Tr sqrt(rho1) sqrt(rho2)",
          rep.formula_overlap, ex.overlap, tol::trunc);

  for (InequalityRow& row : chain_rows(ex)) rows.push_back(std::move(row));

  push_le(rows, "ineq6", "1 - overlap <= (1/4)(mean term + trace delta)", 1.0 - ex.overlap,
          bd.one_minus_overlap_bound, tol::trunc);
  push_eq(rows, "eb", "trace delta: definition equals the commutator-form route",
          bd.trace_delta, bd.trace_delta_via_identity,
          tol::id * (1.0 + std::abs(bd.trace_delta)));
  push_le(rows, "ec", "trace delta <= Frobenius upper bound", bd.trace_delta,
          bd.trace_delta_upper, tol::rel);
  push_le(rows, "mean", "mean term <= 2(||a||+||b||)||m||^2", bd.mean_term, bd.mean_term_bound,
          tol::rel * std::max(1.0, bd.mean_term_bound));

  push_le(rows, "basic2", "trace distance <= 2 bures", ex.trace_distance, 2.0 * ex.bures,
          tol::id);
  push_le(rows, "basic2", "2 bures <= 2 sqrt((mean term + trace delta)/2)", 2.0 * ex.bures,
          bd.trace_norm_bound, tol::trunc);

  const StateClass cls1 = classify(s1);
  const StateClass cls2 = classify(s2);
  rep.pair_is_pure = cls1.pure && cls2.pure;

  if (rep.pair_is_pure) {
    push_le(rows, "E1", "2 bures <= pure-pair bound", 2.0 * ex.bures, pure_bound(s1, s2),
            tol::trunc);
    push_eq(rows, "basic3", "pure pair: trace distance = 2 sqrt(1-overlap)", ex.trace_distance,
            2.0 * std::sqrt(std::max(0.0, 1.0 - rep.formula_overlap)), tol::trunc);
    push_eq(rows, "basic5", "pure pair: bures = sqrt(2(1-sqrt(overlap)))", ex.bures,
            std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(rep.formula_overlap)))), tol::trunc);
  }
  if (cls1.gauge_invariant && cls2.gauge_invariant) {
    push_le(rows, "E2", "2 bures <= gauge-invariant bound", 2.0 * ex.bures,
            gauge_invariant_bound(s1, s2), tol::trunc);
  }

  const GaussianState* thermal_side = nullptr;
  if (is_vacuum_state(s2) && is_thermal_like(s1)) thermal_side = &s1;
  else if (is_vacuum_state(s1) && is_thermal_like(s2)) thermal_side = &s2;
  if (thermal_side != nullptr) {
    const ThermalVacuumBound tv = thermal_vacuum_bound(*thermal_side);
    push_le(rows, "three", "2 bures <= sqrt(2 ||a-b||_1)", 2.0 * ex.bures, tv.bound, tol::trunc);
    const FockDensityMatrix& rho_thermal = thermal_side == &s1 ? rho1 : rho2;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> top(rho_thermal.matrix, Eigen::EigenvaluesOnly);
    push_eq(rows, "three", "lambda0 formula matches the top eigenvalue",
            top.eigenvalues().maxCoeff(), tv.lambda0, tol::id);
    push_eq(rows, "three", "trace distance = 2(1-lambda0)", ex.trace_distance,
            tv.exact_trace_norm, tol::trunc);
    push_eq(rows, "three", "bures matches sqrt(2(1-sqrt(lambda0)))", ex.bures, tv.exact_bures,
            tol::trunc);
  }

  rep.all_pass = rep.first_failure() == nullptr;
  return rep;
}

}  // namespace gaussbound::fock
