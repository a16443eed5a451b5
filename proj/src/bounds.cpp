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

#include "gaussbound/bounds.hpp"

#include <cmath>
#include <sstream>

namespace gaussbound {

namespace {

double log_det_spd(const Matrix& a, const char* what) {
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success)
    throw SigmaNotPD(std::string(what) + " is not positive definite");
  return 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
}

void require_same_modes(const GaussianState& s1, const GaussianState& s2) {
  if (s1.modes != s2.modes) {
    std::ostringstream msg;
    msg << "mode counts differ: " << s1.modes << " vs " << s2.modes;
    throw ModeMismatch(msg.str());
  }
}

Matrix vacuum_cov(int modes) { return 0.5 * Matrix::Identity(2 * modes, 2 * modes); }

}  // namespace

OverlapResult overlap(const GaussianState& s1, const GaussianState& s2) {
  require_same_modes(s1, s2);
  const HatDecomposition h1 = hat(s1.cov);
  const HatDecomposition h2 = hat(s2.cov);

  OverlapResult out;
  out.sigma = 0.5 * (h1.hat + h2.hat);

  Eigen::LLT<Matrix> llt(out.sigma);
  if (llt.info() != Eigen::Success) throw SigmaNotPD("sigma = (hat(a)+hat(b))/2 is not positive definite");
  const double log_det_sigma = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();

  out.log_prefactor = 0.25 * (log_det_spd(h1.hat, "hat(a)") + log_det_spd(h2.hat, "hat(b)")) -
                      0.5 * log_det_sigma;

  const Vector m = s1.mean - s2.mean;
  out.exponent_term = 0.25 * m.dot(llt.solve(m));

  out.overlap = std::exp(out.log_prefactor - out.exponent_term);
  if (out.overlap > 1.0) {
    if (out.overlap > 1.0 + tol::rel)
      throw CertificationFailure("overlap exceeded 1 beyond tolerance");
    out.overlap = 1.0;
  }
  return out;
}

TraceDelta trace_delta(const Matrix& cov1, const Matrix& cov2) {
  const int dim = static_cast<int>(cov1.rows());
  if (cov2.rows() != dim || cov2.cols() != dim || cov1.cols() != dim)
    throw DimensionMismatch("covariance dimensions differ");
  const HatDecomposition h1 = hat(cov1);
  const HatDecomposition h2 = hat(cov2);

  TraceDelta out;
  const Matrix diff_hat = h1.hat - h2.hat;
  const Matrix inv_diff = h2.hat.ldlt().solve(Matrix::Identity(dim, dim)) -
                          h1.hat.ldlt().solve(Matrix::Identity(dim, dim));
  out.via_definition = 0.25 * (diff_hat * inv_diff).trace();

  const Matrix delta_inv = -symplectic_form_matrix(dim / 2);
  const Matrix d = (cov1 - cov2) * delta_inv;
  const Matrix u = (hat_times_upsilon(h1, cov1) - hat_times_upsilon(h2, cov2)) * delta_inv;
  out.via_identity = (d * d).trace() - (u * u).trace();

  out.value = out.via_definition;
  return out;
}

double trace_delta_upper(const Matrix& cov1, const Matrix& cov2) {
  const HatDecomposition h1 = hat(cov1);
  const HatDecomposition h2 = hat(cov2);
  const double d = (cov1 - cov2).squaredNorm();
  const double u = (hat_times_upsilon(h1, cov1) - hat_times_upsilon(h2, cov2)).squaredNorm();
  return d + u;
}

MeanTerm mean_term(const Vector& m, const Matrix& cov1, const Matrix& cov2) {
  const int dim = static_cast<int>(cov1.rows());
  if (m.size() != dim || cov2.rows() != dim)
    throw DimensionMismatch("mean length does not match covariance dimension");
  const HatDecomposition h1 = hat(cov1);
  const HatDecomposition h2 = hat(cov2);

  MeanTerm out;
  const Matrix sigma_hat = 0.5 * (h1.hat + h2.hat);
  const Matrix sigma_raw = 0.5 * (cov1 + cov2);
  out.value = m.dot(sigma_hat.llt().solve(m));
  out.value_unhatted = m.dot(sigma_raw.llt().solve(m));
  out.bound = 2.0 * (norms(cov1).op_norm + norms(cov2).op_norm) * m.squaredNorm();
  return out;
}

std::string to_string(Specialization s) {
  switch (s) {
    case Specialization::pure: return "pure";
    case Specialization::gauge_invariant: return "gauge_invariant";
    case Specialization::thermal_vacuum: return "thermal_vacuum";
    default: return "none";
  }
}

BoundReport proposition_bound(const GaussianState& s1, const GaussianState& s2) {
  require_same_modes(s1, s2);

  BoundReport rep;
  rep.overlap = overlap(s1, s2).overlap;

  const TraceDelta td = trace_delta(s1.cov, s2.cov);
  rep.trace_delta = td.value;
  rep.trace_delta_via_identity = td.via_identity;
  rep.trace_delta_upper = gaussbound::trace_delta_upper(s1.cov, s2.cov);

  const MeanTerm mt = mean_term(s1.mean - s2.mean, s1.cov, s2.cov);
  rep.mean_term = mt.value;
  rep.mean_term_unhatted = mt.value_unhatted;
  rep.mean_term_bound = mt.bound;

  const double payload = rep.mean_term + rep.trace_delta;
  rep.one_minus_overlap_bound = 0.25 * payload;
  rep.bures_bound = std::sqrt(std::max(0.0, 0.5 * payload));
  rep.trace_norm_bound = 2.0 * rep.bures_bound;

  // The most specific applicable special form wins. Thermal-against-vacuum
  // is checked in both orders since distances are symmetric.
  const StateClass c1 = classify(s1);
  const StateClass c2 = classify(s2);
  const auto is_vacuum = [](const GaussianState& s) {
    return s.mean.norm() <= tol::psd && (s.cov - vacuum_cov(s.modes)).norm() <= tol::psd;
  };
  const auto thermal_like = [](const GaussianState& s, const StateClass& c) {
    if (!c.gauge_invariant) return false;
    Eigen::SelfAdjointEigenSolver<Matrix> es(s.cov - vacuum_cov(s.modes), Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0) >= -tol::psd;
  };
  if (is_vacuum(s2) && thermal_like(s1, c1)) {
    rep.specialized_bound = thermal_vacuum_bound(s1).bound;
    rep.which_specialization = Specialization::thermal_vacuum;
  } else if (is_vacuum(s1) && thermal_like(s2, c2)) {
    rep.specialized_bound = thermal_vacuum_bound(s2).bound;
    rep.which_specialization = Specialization::thermal_vacuum;
  } else if (c1.pure && c2.pure) {
    rep.specialized_bound = pure_bound(s1, s2);
    rep.which_specialization = Specialization::pure;
  } else if (c1.gauge_invariant && c2.gauge_invariant) {
    rep.specialized_bound = gauge_invariant_bound(s1, s2);
    rep.which_specialization = Specialization::gauge_invariant;
  }
  return rep;
}

double pure_bound(const GaussianState& s1, const GaussianState& s2) {
  require_same_modes(s1, s2);
  if (!classify(s1).pure || !classify(s2).pure)
    throw NotPure("pure_bound requires two pure states");
  const double mterm = 2.0 * (norms(s1.cov).op_norm + norms(s2.cov).op_norm) *
                       (s1.mean - s2.mean).squaredNorm();
  return std::sqrt(mterm + (s1.cov - s2.cov).squaredNorm());
}

double gauge_invariant_bound(const GaussianState& s1, const GaussianState& s2) {
  require_same_modes(s1, s2);
  if (!classify(s1).gauge_invariant || !classify(s2).gauge_invariant)
    throw NotGaugeInvariant("gauge_invariant_bound requires two gauge-invariant states");
  const NormTriple nd = norms(s1.cov - s2.cov);
  const double operand =
      (norms(s1.cov).op_norm + norms(s2.cov).op_norm) * nd.trace_norm - nd.hs_norm * nd.hs_norm;
  if (operand < -tol::psd) throw CertificationFailure("gauge-invariant bound operand is negative");
  return std::sqrt(2.0 * std::max(0.0, operand));
}

ThermalVacuumBound thermal_vacuum_bound(const GaussianState& s1) {
  if (!classify(s1).gauge_invariant)
    throw NotGaugeInvariant("thermal_vacuum_bound requires a gauge-invariant state");
  const int dim = 2 * s1.modes;
  const Matrix excess = s1.cov - vacuum_cov(s1.modes);
  Eigen::SelfAdjointEigenSolver<Matrix> es(excess, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -tol::psd) {
    std::ostringstream msg;
    msg << "cov - (1/2)I has eigenvalue " << es.eigenvalues()(0);
    throw NotThermalLike(msg.str());
  }

  ThermalVacuumBound out;
  // ||a - (1/2)I||_1 = Tr(a - (1/2)I) on this class.
  const double diff_trace_norm = std::max(0.0, excess.trace());
  out.bound = std::sqrt(2.0 * diff_trace_norm);
  const double log_det = log_det_spd(s1.cov + 0.5 * Matrix::Identity(dim, dim), "a + (1/2)I");
  out.lambda0 = std::exp(-0.5 * log_det);
  out.exact_trace_norm = 2.0 * (1.0 - out.lambda0);
  out.exact_bures = std::sqrt(std::max(0.0, 2.0 * (1.0 - std::sqrt(out.lambda0))));
  return out;
}

DistanceChain chain(double overlap_value, const ChainExact& exact, bool pure) {
  if (!(overlap_value > 0.0) || overlap_value > 1.0) {
    std::ostringstream msg;
    msg << "overlap " << overlap_value << " is outside (0, 1]";
    throw OverlapOutOfRange(msg.str());
  }

  DistanceChain out;
  out.overlap = overlap_value;
  out.trace_lower = 2.0 * (1.0 - overlap_value);
  out.trace_upper = 2.0 * std::sqrt(std::max(0.0, 1.0 - overlap_value * overlap_value));

  out.fidelity_root = exact.fidelity_root;
  out.trace_norm = exact.trace_norm;
  if (pure) {
    if (!out.fidelity_root) out.fidelity_root = std::sqrt(overlap_value);
    if (!out.trace_norm) out.trace_norm = 2.0 * std::sqrt(1.0 - overlap_value);
  }
  if (out.fidelity_root) {
    out.bures = std::sqrt(std::max(0.0, 2.0 * (1.0 - *out.fidelity_root)));
    out.bures_exact = true;
  } else {
    out.bures = std::sqrt(2.0 * (1.0 - overlap_value));
    out.bures_exact = false;
  }

  const auto check = [](bool ok, const char* what) {
    if (!ok) throw CertificationFailure(std::string("distance chain violated: ") + what);
  };
  if (out.fidelity_root) {
    check(overlap_value <= *out.fidelity_root + tol::rel, "overlap <= fidelity_root");
    check(*out.fidelity_root <= 1.0 + tol::rel, "fidelity_root <= 1");
  }
  if (out.trace_norm) {
    const double tn = *out.trace_norm;
    check(out.trace_lower <= tn + tol::rel, "2(1-overlap) <= trace norm");
    check(tn <= out.trace_upper + tol::rel, "trace norm <= 2 sqrt(1-overlap^2)");
    if (out.bures_exact) {
      check(out.bures * out.bures <= tn + tol::rel, "bures^2 <= trace norm");
      check(tn <= 2.0 * out.bures + tol::rel, "trace norm <= 2 bures");
    }
  }
  check(out.bures <= std::sqrt(2.0 * (1.0 - overlap_value)) + tol::rel,
        "bures <= sqrt(2(1-overlap))");
  return out;
}

}  // namespace gaussbound
