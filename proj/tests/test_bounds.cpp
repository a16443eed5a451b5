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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "gaussbound/bounds.hpp"
#include "gaussbound/hat.hpp"
#include "gaussbound/sampling.hpp"

using namespace gaussbound;

namespace {
const double kE = std::exp(1.0);

GaussianState vacuum1() {
  return validate_state(Vector::Zero(2), 0.5 * Matrix::Identity(2, 2));
}

GaussianState thermal1(double nu) {
  return validate_state(Vector::Zero(2), nu * Matrix::Identity(2, 2));
}

GaussianState coherent1(double re, double im) {
  Vector mean(2);
  mean << std::sqrt(2.0) * re, std::sqrt(2.0) * im;
  return validate_state(mean, 0.5 * Matrix::Identity(2, 2));
}

GaussianState squeezed1(double r) {
  Matrix cov = Matrix::Zero(2, 2);
  cov(0, 0) = 0.5 * std::exp(2.0 * r);
  cov(1, 1) = 0.5 * std::exp(-2.0 * r);
  return validate_state(Vector::Zero(2), cov);
}
}  // namespace

TEST_CASE("overlap closed forms") {
  SUBCASE("identical states have overlap exactly 1") {
    const GaussianState th = thermal1(2.5);
    const OverlapResult ov = overlap(th, th);
    CHECK(ov.overlap == 1.0);
    CHECK(ov.exponent_term == 0.0);
  }

  SUBCASE("different states have overlap strictly below 1") {
    CHECK(overlap(thermal1(2.5), thermal1(2.49)).overlap < 1.0);
    CHECK(overlap(coherent1(0.01, 0.0), vacuum1()).overlap < 1.0);
  }

  SUBCASE("coherent against vacuum equals exp(-|z|^2)") {
    for (const double z : {0.5, 1.0, 2.0}) {
      const OverlapResult ov = overlap(coherent1(z, 0.0), vacuum1());
      CHECK(ov.overlap == doctest::Approx(std::exp(-z * z)).epsilon(1e-10));
    }
    // Exponent convention is visible in the parts: pure pair has prefactor 1.
    const OverlapResult ov = overlap(coherent1(1.0, 0.0), vacuum1());
    CHECK(ov.log_prefactor == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ov.exponent_term == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("thermal against vacuum equals sqrt(lambda0)") {
    const OverlapResult ov = overlap(thermal1(2.5), vacuum1());
    CHECK(ov.overlap == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-12));
  }

  SUBCASE("mode mismatch is rejected") {
    const GaussianState two =
        validate_state(Vector::Zero(4), 0.5 * Matrix::Identity(4, 4));
    CHECK_THROWS_AS(overlap(vacuum1(), two), ModeMismatch);
  }
}

TEST_CASE("trace_delta examples") {
  SUBCASE("equal covariances give zero") {
    const TraceDelta td = trace_delta(thermal1(1.7).cov, thermal1(1.7).cov);
    CHECK(std::abs(td.value) < 1e-12);
    CHECK(std::abs(td.via_identity) < 1e-12);
  }

  SUBCASE("thermal nu=2.5 against vacuum") {
    const TraceDelta td = trace_delta(thermal1(2.5).cov, vacuum1().cov);
    CHECK(td.value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(td.via_identity == doctest::Approx(4.0).epsilon(1e-10));
  }

  SUBCASE("squeezed r=0.5 against vacuum, both pure") {
    // Hats coincide with the covariances, so the scalar evaluation is
    // (1/4) sum (a_i - b_i)(1/b_i - 1/a_i) over the diagonal.
    const double a1 = 0.5 * kE, a2 = 0.5 / kE, b = 0.5;
    const double expected =
        0.25 * ((a1 - b) * (1.0 / b - 1.0 / a1) + (a2 - b) * (1.0 / b - 1.0 / a2));
    const TraceDelta td = trace_delta(squeezed1(0.5).cov, vacuum1().cov);
    CHECK(td.value == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(0.5430806).epsilon(1e-6));
  }
}

TEST_CASE("trace_delta_upper examples") {
  CHECK(trace_delta_upper(thermal1(1.3).cov, thermal1(1.3).cov) < 1e-12);

  // Pure pair: the second term vanishes.
  const Matrix a = squeezed1(0.5).cov, b = vacuum1().cov;
  CHECK(trace_delta_upper(a, b) == doctest::Approx((a - b).squaredNorm()).epsilon(1e-10));

  // Thermal 2.5 I against vacuum: 8 + 12 = 20, looser than the value 4.
  CHECK(trace_delta_upper(thermal1(2.5).cov, vacuum1().cov) ==
        doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("mean_term examples") {
  SUBCASE("zero difference of means") {
    const MeanTerm mt = mean_term(Vector::Zero(2), thermal1(1.5).cov, vacuum1().cov);
    CHECK(mt.value == 0.0);
    CHECK(mt.bound == 0.0);
  }

  SUBCASE("coherent z=1 against vacuum saturates the bound") {
    Vector m(2);
    m << std::sqrt(2.0), 0.0;
    const MeanTerm mt = mean_term(m, vacuum1().cov, vacuum1().cov);
    CHECK(mt.value == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(mt.value_unhatted == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(mt.bound == doctest::Approx(4.0).epsilon(1e-12));
  }

  SUBCASE("squeezed pair with displacement along the squeezed axis") {
    Vector m(2);
    m << 0.0, 1.0;
    const Matrix cov = squeezed1(0.5).cov;
    const MeanTerm mt = mean_term(m, cov, cov);
    CHECK(mt.value == doctest::Approx(2.0 * kE).epsilon(1e-12));
    CHECK(mt.bound == doctest::Approx(2.0 * kE).epsilon(1e-12));
  }
}

TEST_CASE("proposition_bound on the anchor pairs") {
  SUBCASE("identical states give all zeros") {
    const BoundReport rep = proposition_bound(thermal1(1.5), thermal1(1.5));
    CHECK(rep.bures_bound < 1e-7);
    CHECK(rep.trace_norm_bound < 1e-6);
    CHECK(std::abs(rep.trace_delta) < 1e-12);
    CHECK(rep.mean_term == 0.0);
  }

  SUBCASE("thermal nu=2.5 against vacuum") {
    const BoundReport rep = proposition_bound(thermal1(2.5), vacuum1());
    CHECK(rep.bures_bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.trace_norm_bound == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.which_specialization == Specialization::thermal_vacuum);
    CHECK(*rep.specialized_bound == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
    // The bound indeed dominates the exact distance.
    const double exact_2db = 2.0 * thermal_vacuum_bound(thermal1(2.5)).exact_bures;
    CHECK(exact_2db == doctest::Approx(1.8388036).epsilon(1e-6));
    CHECK(exact_2db <= 2.0 * rep.bures_bound);
  }

  SUBCASE("coherent z=1 against vacuum") {
    const BoundReport rep = proposition_bound(coherent1(1.0, 0.0), vacuum1());
    CHECK(rep.mean_term == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(std::abs(rep.trace_delta) < 1e-12);
    CHECK(rep.bures_bound == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(rep.which_specialization == Specialization::pure);
    // Exact distance from the pure-state chain confirms the ordering.
    const DistanceChain ch = chain(std::exp(-1.0), {}, /*pure=*/true);
    CHECK(2.0 * ch.bures == doctest::Approx(1.7741914).epsilon(1e-6));
    CHECK(2.0 * ch.bures <= 2.0 * rep.bures_bound);
  }
}

TEST_CASE("pure_bound") {
  const GaussianState vac = vacuum1();
  CHECK(pure_bound(vac, vac) == 0.0);

  CHECK(pure_bound(coherent1(1.0, 0.0), vac) == doctest::Approx(2.0).epsilon(1e-12));

  const double expected = std::sqrt((squeezed1(0.5).cov - vac.cov).squaredNorm());
  CHECK(pure_bound(squeezed1(0.5), vac) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(expected == doctest::Approx(0.915433).epsilon(1e-5));
  // ... and it dominates the exact value 2 d_B ~ 0.682873.
  const DistanceChain ch = chain(1.0 / std::cosh(0.5), {}, /*pure=*/true);
  CHECK(2.0 * ch.bures == doctest::Approx(0.6828727).epsilon(1e-6));
  CHECK(2.0 * ch.bures <= expected);

  CHECK_THROWS_AS(pure_bound(thermal1(1.5), vac), NotPure);
}

TEST_CASE("gauge_invariant_bound") {
  const GaussianState vac = vacuum1();
  CHECK(gauge_invariant_bound(vac, vac) == 0.0);

  CHECK(gauge_invariant_bound(thermal1(2.5), vac) ==
        doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));

  // Two-mode product thermal against the vacuum: trace norm 6, squared
  // Frobenius norm 10, operator norms 2.5 and 0.5, so the bound is
  // sqrt(2 (3 * 6 - 10)) = 4.
  Matrix cov = Matrix::Zero(4, 4);
  cov.diagonal() << 2.5, 2.5, 1.5, 1.5;
  const GaussianState two = validate_state(Vector::Zero(4), cov);
  const GaussianState vac2 = validate_state(Vector::Zero(4), 0.5 * Matrix::Identity(4, 4));
  CHECK(gauge_invariant_bound(two, vac2) == doctest::Approx(4.0).epsilon(1e-12));

  CHECK_THROWS_AS(gauge_invariant_bound(squeezed1(0.4), vac), NotGaugeInvariant);
  CHECK_THROWS_AS(gauge_invariant_bound(coherent1(1.0, 0.0), vac), NotGaugeInvariant);
}

TEST_CASE("thermal_vacuum_bound closed forms") {
  SUBCASE("vacuum against vacuum") {
    const ThermalVacuumBound tv = thermal_vacuum_bound(vacuum1());
    CHECK(tv.bound == 0.0);
    CHECK(tv.lambda0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(tv.exact_trace_norm == doctest::Approx(0.0).epsilon(1e-12));
  }

  SUBCASE("thermal nu=2.5") {
    const ThermalVacuumBound tv = thermal_vacuum_bound(thermal1(2.5));
    CHECK(tv.lambda0 == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(tv.bound == doctest::Approx(std::sqrt(8.0)).epsilon(1e-14));
    CHECK(tv.exact_trace_norm == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(2.0 * tv.exact_bures ==
          doctest::Approx(2.0 * std::sqrt(2.0 * (1.0 - std::sqrt(1.0 / 3.0))))
              .epsilon(1e-14));
    CHECK(2.0 * tv.exact_bures == doctest::Approx(1.8388036).epsilon(1e-6));
    CHECK(tv.exact_trace_norm <= 2.0 * tv.exact_bures);
    CHECK(2.0 * tv.exact_bures <= tv.bound);
  }

  SUBCASE("near-vacuum ratio expansion") {
    const double t = 1e-3;
    const ThermalVacuumBound tv = thermal_vacuum_bound(thermal1(0.5 + t));
    const double ratio = 2.0 * tv.exact_bures / tv.bound;
    CHECK(ratio == doctest::Approx(1.0 - 0.375 * t).epsilon(1e-6));
  }

  SUBCASE("rejections") {
    CHECK_THROWS_AS(thermal_vacuum_bound(squeezed1(0.3)), NotGaugeInvariant);
    // A validated gauge-invariant state always sits above (1/2)I, so the
    // thermal-likeness guard can only trip on unvalidated input.
    GaussianState raw;
    raw.modes = 1;
    raw.mean = Vector::Zero(2);
    raw.cov = 0.4 * Matrix::Identity(2, 2);
    CHECK_THROWS_AS(thermal_vacuum_bound(raw), NotThermalLike);
  }
}

TEST_CASE("distance chain") {
  SUBCASE("overlap 1 collapses everything to zero") {
    const DistanceChain ch = chain(1.0);
    CHECK(ch.trace_lower == 0.0);
    CHECK(ch.trace_upper == 0.0);
    CHECK(ch.bures == 0.0);
  }

  SUBCASE("pure chain at overlap e^{-1}") {
    const DistanceChain ch = chain(std::exp(-1.0), {}, /*pure=*/true);
    CHECK(*ch.trace_norm ==
          doctest::Approx(2.0 * std::sqrt(1.0 - std::exp(-1.0))).epsilon(1e-14));
    CHECK(*ch.trace_norm == doctest::Approx(1.5901201).epsilon(1e-6));
    CHECK(ch.bures == doctest::Approx(std::sqrt(2.0 * (1.0 - std::exp(-0.5)))).epsilon(1e-14));
    CHECK(ch.bures == doctest::Approx(0.8870957).epsilon(1e-6));
    CHECK(ch.bures_exact);
  }

  SUBCASE("thermal values thread the sandwich") {
    ChainExact exact;
    exact.trace_norm = 4.0 / 3.0;
    exact.fidelity_root = 1.0 / std::sqrt(3.0);
    const DistanceChain ch = chain(1.0 / std::sqrt(3.0), exact);
    CHECK(ch.trace_lower == doctest::Approx(2.0 * (1.0 - 1.0 / std::sqrt(3.0))).epsilon(1e-14));
    CHECK(ch.trace_upper == doctest::Approx(2.0 * std::sqrt(2.0 / 3.0)).epsilon(1e-14));
    CHECK(ch.trace_lower <= 4.0 / 3.0);
    CHECK(4.0 / 3.0 <= ch.trace_upper);
  }

  SUBCASE("out-of-range overlaps are rejected") {
    CHECK_THROWS_AS(chain(0.0), OverlapOutOfRange);
    CHECK_THROWS_AS(chain(-0.1), OverlapOutOfRange);
    CHECK_THROWS_AS(chain(1.1), OverlapOutOfRange);
  }

  SUBCASE("inconsistent exact values are flagged") {
    ChainExact exact;
    exact.trace_norm = 1.9;  // above the upper chain bound for overlap 0.9
    CHECK_THROWS_AS(chain(0.9, exact), CertificationFailure);
  }
}

TEST_CASE("bound inequalities hold on random state pairs") {
  std::mt19937_64 rng(314159);
  for (int trial = 0; trial < 1000; ++trial) {
    const int modes = 1 + trial % 3;
    const GaussianState s1 = random_state(rng, modes);
    const GaussianState s2 = random_state(rng, modes);

    const BoundReport rep = proposition_bound(s1, s2);
    CHECK(rep.overlap > 0.0);
    CHECK(rep.overlap <= 1.0);
    CHECK(1.0 - rep.overlap <= rep.one_minus_overlap_bound + 1e-9);
    CHECK(std::abs(rep.trace_delta - rep.trace_delta_via_identity) <=
          1e-8 * (1.0 + std::abs(rep.trace_delta)));
    CHECK(rep.trace_delta <= rep.trace_delta_upper + 1e-9);
    CHECK(rep.trace_delta >= -1e-9);
    CHECK(rep.mean_term <= rep.mean_term_bound * (1.0 + 1e-9) + 1e-12);
    CHECK(rep.mean_term <= rep.mean_term_unhatted + 1e-9);
  }
}

TEST_CASE("gauge-invariant reduction of the identity route") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 500; ++trial) {
    const int modes = 1 + trial % 3;
    const Matrix a = random_gauge_invariant_cov(rng, modes);
    const Matrix b = random_gauge_invariant_cov(rng, modes);
    const TraceDelta td = trace_delta(a, b);
    const double reduced =
        -(a - b).squaredNorm() + (hat_gauge_invariant(a) - hat_gauge_invariant(b)).squaredNorm();
    CHECK(std::abs(td.via_identity - reduced) <= 1e-8 * (1.0 + std::abs(reduced)));
  }
}

TEST_CASE("bounds grow monotonically with isotropic perturbation size") {
  double prev_bures = -1.0, prev_special = -1.0, prev_upper = -1.0;
  for (int k = 0; k <= 100; ++k) {
    const double t = 0.01 * k;
    const GaussianState s = thermal1(0.5 + t);
    const BoundReport rep = proposition_bound(s, vacuum1());
    CHECK(rep.bures_bound >= prev_bures - 1e-12);
    CHECK(rep.trace_delta_upper >= prev_upper - 1e-12);
    REQUIRE(rep.specialized_bound.has_value());
    CHECK(*rep.specialized_bound >= prev_special - 1e-12);
    prev_bures = rep.bures_bound;
    prev_special = *rep.specialized_bound;
    prev_upper = rep.trace_delta_upper;
  }
}
