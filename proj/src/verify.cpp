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

#include "gaussbound/verify.hpp"

#include <cmath>

#include "gaussbound/sampling.hpp"

namespace gaussbound::verify {

std::vector<BuilderPair> canonical_pairs() {
  using B = fock::StateBuilder;
  const B vac = B::vacuum(1);
  const B vac2 = B::vacuum(2);
  return {
      {B::thermal(2.0), vac},
      {B::coherent({1.0, 0.0}), vac},
      {B::squeezed(0.5), vac},
      {B::coherent({1.0, 0.0}), B::thermal(1.0)},
      {B::two_mode_squeezed(0.4), vac2},
      {vac, vac},
      {B::coherent({0.5, 0.0}), vac},
      {B::coherent({2.0, 0.0}), vac},
      {B::squeezed(0.3, M_PI / 3.0), B::squeezed(0.5)},
      {B::displaced_squeezed_thermal({0.5, 0.3}, 0.3, 0.7, 0.6), vac},
      {B::thermal(1.5), B::thermal(0.5)},
      {B::product({B::thermal(0.8), B::squeezed(0.4)}), vac2},
  };
}

namespace {

template <typename CutoffFor>
std::vector<PairOutcome> run_with(const std::vector<BuilderPair>& pairs, CutoffFor cutoff_for) {
  std::vector<PairOutcome> out(pairs.size());
  const auto n = static_cast<Eigen::Index>(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index i = 0; i < n; ++i) {
    PairOutcome& o = out[i];
    o.builder1 = pairs[i].first;
    o.builder2 = pairs[i].second;
    try {
      o.report = fock::certify(o.builder1, o.builder2, cutoff_for(o.builder1.modes()));
      o.ok = o.report.all_pass;
    } catch (const std::exception& e) {
      o.ok = false;
      o.error = e.what();
    }
  }
  return out;
}

}  // namespace

std::vector<PairOutcome> run_pairs(const std::vector<BuilderPair>& pairs, int cutoff) {
  return run_with(pairs, [cutoff](int modes) { return cutoff > 0 ? cutoff : suite_cutoff(modes); });
}

std::vector<PairOutcome> run_canonical(int cutoff) {
  // Canonical pairs run at the certify defaults (60 / 24) unless overridden.
  return run_with(canonical_pairs(), [cutoff](int) { return cutoff; });
}

std::vector<PairOutcome> run_random(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<BuilderPair> pairs;
  pairs.reserve(count);
  for (int i = 0; i < count; ++i) pairs.push_back(random_builder_pair(rng));
  return run_pairs(pairs);
}

std::vector<AsymptoticRow> run_asymptotic(const std::vector<double>& grid) {
  std::vector<AsymptoticRow> rows;
  rows.reserve(grid.size());
  for (double t : grid) {
    AsymptoticRow row;
    row.t = t;
    if (t > 0) {
      GaussianState s;
      s.modes = 1;
      s.mean = Vector::Zero(2);
      s.cov = (0.5 + t) * Matrix::Identity(2, 2);
      const ThermalVacuumBound tv = thermal_vacuum_bound(s);
      row.diff_trace_norm = 2.0 * t;
      row.bound = tv.bound;
      row.exact_two_bures = 2.0 * tv.exact_bures;
      row.exact_trace_norm = tv.exact_trace_norm;
      row.ratio_bures = row.exact_two_bures / row.bound;
      row.ratio_trace = row.exact_trace_norm / row.diff_trace_norm;
      row.pass = std::abs(row.ratio_bures - 1.0) <= 0.4 * t &&
                 std::abs(row.ratio_trace - 1.0) <= t;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<SqueezeRow> run_squeeze(const std::vector<double>& grid) {
  const GaussianState vac = fock::StateBuilder::vacuum(1).target();
  std::vector<SqueezeRow> rows;
  rows.reserve(grid.size());
  for (double r : grid) {
    SqueezeRow row;
    row.r = r;
    const GaussianState sq = fock::StateBuilder::squeezed(r).target();
    row.e1_bound = pure_bound(sq, vac);
    // Pure pair: overlap = 1/cosh(r) turns into exact distances.
    const double ov = 1.0 / std::cosh(r);
    const DistanceChain ch = chain(ov, {}, /*pure=*/true);
    row.exact_two_bures = 2.0 * ch.bures;
    row.exact_trace_norm = *ch.trace_norm;
    row.ratio = row.e1_bound > 0 ? row.exact_two_bures / row.e1_bound : 0.0;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace gaussbound::verify
