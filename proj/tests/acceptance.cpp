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

// Acceptance suite: one line per criterion, every tolerance pinned in code.
// Returns the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gaussbound/hat.hpp"
#include "gaussbound/io.hpp"
#include "gaussbound/sampling.hpp"
#include "gaussbound/verify.hpp"

using namespace gaussbound;
using fock::StateBuilder;

namespace {

double seconds() {
  using namespace std::chrono;
  return duration<double>(steady_clock::now().time_since_epoch()).count();
}

struct Criterion {
  int id;
  std::string description;
  std::function<void(std::ostringstream&)> body;  // throws on failure
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

void require_close(double got, double want, double tolerance, const std::string& what) {
  if (!(std::abs(got - want) <= tolerance)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want << " +- " << tolerance;
    throw std::runtime_error(os.str());
  }
}

// ---------------------------------------------------------------------------

void criterion_overlap_certification(std::ostringstream& note) {
  const double t0 = seconds();
  const std::vector<verify::BuilderPair> pairs = {
      {StateBuilder::thermal(2.0), StateBuilder::vacuum(1)},
      {StateBuilder::coherent({1.0, 0.0}), StateBuilder::vacuum(1)},
      {StateBuilder::squeezed(0.5), StateBuilder::vacuum(1)},
      {StateBuilder::coherent({1.0, 0.0}), StateBuilder::thermal(1.0)},
      {StateBuilder::two_mode_squeezed(0.4), StateBuilder::vacuum(2)},
  };
  double worst = 0.0;
  for (const auto& [b1, b2] : pairs) {
    const fock::CertificateReport rep = fock::certify(b1, b2, fock::default_cutoff(b1.modes()));
    require(!rep.rows.empty(), "no rows");
    const double gap = std::abs(rep.formula_overlap - rep.oracle.overlap);
    worst = std::max(worst, gap);
    require(gap <= 1e-6, "formula vs oracle overlap gap " + std::to_string(gap) + " for " +
                             b1.describe() + " vs " + b2.describe());
  }
  // Closed-form anchors.
  const auto formula_overlap = [](const StateBuilder& a, const StateBuilder& b) {
    return overlap(validate_state(a.target().mean, a.target().cov),
                   validate_state(b.target().mean, b.target().cov))
        .overlap;
  };
  require_close(formula_overlap(StateBuilder::thermal(2.0), StateBuilder::vacuum(1)),
                1.0 / std::sqrt(3.0), 1e-12, "thermal anchor");
  require_close(formula_overlap(StateBuilder::coherent({1.0, 0.0}), StateBuilder::vacuum(1)),
                std::exp(-1.0), 1e-12, "coherent anchor");
  require_close(formula_overlap(StateBuilder::squeezed(0.5), StateBuilder::vacuum(1)),
                1.0 / std::cosh(0.5), 1e-12, "squeezed anchor");
  const double elapsed = seconds() - t0;
  require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + "s exceeds 30s");
  note << "max |formula - oracle| = " << worst << ", " << elapsed << " s";
}

void criterion_inequality_chains(std::ostringstream& note) {
  double min_margin = 1e300;
  int checked = 0;
  const auto scan = [&](const std::vector<verify::PairOutcome>& outcomes) {
    for (const verify::PairOutcome& o : outcomes) {
      require(o.error.empty(), "pair failed to run: " + o.error);
      for (const fock::InequalityRow& row : o.report.rows) {
        ++checked;
        min_margin = std::min(min_margin, row.margin);
        require(row.margin >= -1e-6, "violated " + row.tag + " (" + row.description +
                                         ") margin " + std::to_string(row.margin) + " on " +
                                         o.builder1.describe() + " vs " +
                                         o.builder2.describe());
      }
    }
  };
  scan(verify::run_canonical());
  scan(verify::run_random(7, 50));
  note << checked << " inequality rows, min margin " << min_margin;
}

void criterion_trace_delta_identity(std::ostringstream& note) {
  std::mt19937_64 rng(1001);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int modes = 1 + trial % 3;
    const Matrix a = random_state(rng, modes).cov;
    const Matrix b = random_state(rng, modes).cov;
    const TraceDelta td = trace_delta(a, b);
    const double rel =
        std::abs(td.via_definition - td.via_identity) / std::max(1.0, std::abs(td.value));
    worst = std::max(worst, rel);
    require(rel <= 1e-8, "trace-delta route disagreement " + std::to_string(rel));
  }
  double worst_reduction = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const int modes = 1 + trial % 3;
    const Matrix a = random_gauge_invariant_cov(rng, modes);
    const Matrix b = random_gauge_invariant_cov(rng, modes);
    const double reduced =
        -(a - b).squaredNorm() + (hat_gauge_invariant(a) - hat_gauge_invariant(b)).squaredNorm();
    const double rel = std::abs(trace_delta(a, b).via_identity - reduced) /
                       std::max(1.0, std::abs(reduced));
    worst_reduction = std::max(worst_reduction, rel);
    require(rel <= 1e-8, "gauge-invariant reduction disagreement " + std::to_string(rel));
  }
  note << "1000 pairs (worst " << worst << "), 500 commuting pairs (worst " << worst_reduction
       << ")";
}

void criterion_thermal_exact_values(std::ostringstream& note) {
  const GaussianState th =
      validate_state(Vector::Zero(2), 2.5 * Matrix::Identity(2, 2));
  const ThermalVacuumBound tv = thermal_vacuum_bound(th);
  require_close(tv.lambda0, 1.0 / 3.0, 1e-12, "lambda0 by formula");
  require_close(tv.exact_trace_norm, 4.0 / 3.0, 1e-12, "exact trace norm");
  require_close(2.0 * tv.exact_bures, 1.838803, 1e-6, "2 d_B");
  require_close(tv.bound, std::sqrt(8.0), 1e-12, "bound sqrt(8)");
  require_close(tv.bound, 2.828427, 1e-6, "bound value");

  const fock::FockDensityMatrix rho = fock::build(StateBuilder::thermal(2.0), 60);
  const fock::FockDensityMatrix vac = fock::build(StateBuilder::vacuum(1), 60);
  const fock::ExactMetrics ex = fock::exact_metrics(rho, vac);
  require_close(ex.lambda_max, 1.0 / 3.0, 1e-8, "lambda0 by oracle diagonalization");
  require_close(ex.trace_distance, 4.0 / 3.0, 1e-8, "trace distance by oracle");
  require_close(2.0 * ex.bures, 2.0 * tv.exact_bures, 1e-8, "2 d_B by oracle");
  note << "lambda0 = " << tv.lambda0 << ", 2 d_B = " << 2.0 * tv.exact_bures;
}

void criterion_asymptotics(std::ostringstream& note) {
  const std::vector<verify::AsymptoticRow> rows = verify::run_asymptotic({1e-1, 1e-2, 1e-3});
  for (const verify::AsymptoticRow& row : rows) {
    require(std::abs(row.ratio_bures - 1.0) <= 0.4 * row.t,
            "bures ratio off at t=" + std::to_string(row.t));
    require(std::abs(row.ratio_trace - 1.0) <= row.t,
            "trace-norm ratio off at t=" + std::to_string(row.t));
    // The expansion 1 - (3/8) t holds through second order on this grid.
    require_close(row.ratio_bures, 1.0 - 0.375 * row.t, 0.05 * row.t,
                  "bures ratio expansion at t=" + std::to_string(row.t));
  }
  note << "ratios " << rows[0].ratio_bures << ", " << rows[1].ratio_bures << ", "
       << rows[2].ratio_bures;
}

void criterion_pure_exactness(std::ostringstream& note) {
  const std::vector<verify::BuilderPair> pairs = {
      {StateBuilder::coherent({1.0, 0.0}), StateBuilder::vacuum(1)},
      {StateBuilder::coherent({2.0, 0.0}), StateBuilder::vacuum(1)},
      {StateBuilder::squeezed(0.5), StateBuilder::vacuum(1)},
      {StateBuilder::squeezed(0.3, M_PI / 3.0), StateBuilder::squeezed(0.5)},
      {StateBuilder::two_mode_squeezed(0.4), StateBuilder::vacuum(2)},
  };
  int count = 0;
  for (const auto& [b1, b2] : pairs) {
    const fock::CertificateReport rep = fock::certify(b1, b2, fock::default_cutoff(b1.modes()));
    require(rep.pair_is_pure, "pair unexpectedly not pure");
    const double trace_from_formula = 2.0 * std::sqrt(1.0 - rep.formula_overlap);
    const double bures_from_formula =
        std::sqrt(2.0 * (1.0 - std::sqrt(rep.formula_overlap)));
    require_close(rep.oracle.trace_distance, trace_from_formula, 1e-6,
                  "pure trace identity for " + b1.describe());
    require_close(rep.oracle.bures, bures_from_formula, 1e-6,
                  "pure bures identity for " + b1.describe());
    ++count;
  }
  note << count << " pure pairs match to 1e-6";
}

void criterion_hat_residuals(std::ostringstream& note) {
  std::mt19937_64 rng(4242);
  double worst_upsilon = 0.0, worst_recon = 0.0, worst_psd = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int modes = 1 + trial % 3;
    const Matrix cov = random_state(rng, modes).cov;
    const int dim = 2 * modes;
    const HatDecomposition dec = hat(cov);

    const Matrix delta_inv = -symplectic_form_matrix(modes);
    const Matrix b = 2.0 * delta_inv * cov;
    const Matrix b_inv = b.partialPivLu().solve(Matrix::Identity(dim, dim));
    const Matrix target = Matrix::Identity(dim, dim) + b_inv * b_inv;
    const double res_upsilon =
        (dec.upsilon * dec.upsilon - target).norm() / std::max(1.0, target.norm());
    const double res_recon =
        (dec.hat - cov * (Matrix::Identity(dim, dim) + dec.upsilon)).norm() /
        std::max(1.0, dec.hat.norm());
    Eigen::SelfAdjointEigenSolver<Matrix> gap(dec.hat - cov, Eigen::EigenvaluesOnly);

    worst_upsilon = std::max(worst_upsilon, res_upsilon);
    worst_recon = std::max(worst_recon, res_recon);
    worst_psd = std::min(worst_psd, gap.eigenvalues()(0));
    require(res_upsilon <= 1e-8, "upsilon residual " + std::to_string(res_upsilon));
    require(res_recon <= 1e-8, "hat reconstruction residual " + std::to_string(res_recon));
    require(gap.eigenvalues()(0) >= -1e-9, "hat - cov not PSD");
  }
  note << "worst residuals " << worst_upsilon << " / " << worst_recon << ", min PSD gap "
       << worst_psd;
}

void criterion_cli_verify(std::ostringstream& note) {
  const double t0 = seconds();
  const std::string cmd = std::string(GAUSSBOUND_CLI) + " verify canonical > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const double elapsed = seconds() - t0;
  require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
          "verify canonical exited nonzero");
  require(elapsed < 60.0, "verify canonical took " + std::to_string(elapsed) + " s");
  note << elapsed << " s, exit 0";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "overlap formula certified against the exact engine on canonical pairs (1e-6, <30s)",
       criterion_overlap_certification},
      {2, "all inequality chains hold on canonical + 50 random pairs (margins >= -1e-6)",
       criterion_inequality_chains},
      {3, "trace-delta routes agree (1000 pairs, 1e-8) and reduce on 500 commuting pairs",
       criterion_trace_delta_identity},
      {4, "thermal nu=2.5 vs vacuum: lambda0 = 1/3, trace norm 4/3, 2 d_B = 1.838803, bound sqrt(8)",
       criterion_thermal_exact_values},
      {5, "near-vacuum asymptotics: Bures ratio 1 - (3/8)t within 0.4t; trace ratio within t",
       criterion_asymptotics},
      {6, "pure pairs: trace and Bures distances from the overlap match the oracle to 1e-6",
       criterion_pure_exactness},
      {7, "hat-transform residuals <= 1e-8 and hat >= cov on 1000 random covariances",
       criterion_hat_residuals},
      {8, "CLI 'verify canonical' exits 0 in under 60 s", criterion_cli_verify},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream note;
    try {
      c.body(note);
      std::printf("criterion %d: PASS - %s (%s)\n", c.id, c.description.c_str(),
                  note.str().c_str());
    } catch (const std::exception& e) {
      ++failures;
      std::printf("criterion %d: FAIL - %s: %s\n", c.id, c.description.c_str(), e.what());
    }
    std::fflush(stdout);
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d criteria FAILED\n", failures);
  return failures;
}
