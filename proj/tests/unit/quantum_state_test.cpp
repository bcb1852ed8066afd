// Copyright 2026 The qpuf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qpuf/quantum_state.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qpuf/dynamics.hpp"
#include "qpuf/error.hpp"
#include "qpuf/random.hpp"
#include "qpuf/rmt_ensembles.hpp"
#include "qpuf/stats.hpp"

namespace qpuf {
namespace {

TEST(QuantumState, ValidatesInputs) {
  EXPECT_THROW(QuantumState::pure(CVector::Constant(4, 1.0)), Error);
  CMatrix bad = CMatrix::Identity(2, 2);
  EXPECT_THROW(QuantumState::density(bad), Error);  // trace 2
  CMatrix negative = CMatrix::Zero(2, 2);
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  EXPECT_THROW(QuantumState::density(negative), Error);
  EXPECT_THROW(QuantumState::basis(4, 4), Error);
}

TEST(MaxEntangled, TwoQubitBellState) {
  const QuantumState phi = max_entangled(2);
  const double r = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(phi.vector()(0) - r), 0.0, 1e-15);
  EXPECT_EQ(phi.vector()(1), Complex(0.0));
  EXPECT_EQ(phi.vector()(2), Complex(0.0));
  EXPECT_NEAR(std::abs(phi.vector()(3) - r), 0.0, 1e-15);
}

TEST(MaxEntangled, ReducedStatesAreMaximallyMixed) {
  for (std::size_t d : {2u, 5u, 8u}) {
    const QuantumState phi = max_entangled(d);
    const CMatrix target = CMatrix::Identity(d, d) / static_cast<double>(d);
    EXPECT_LT((reduced_state_C(phi) - target).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT((reduced_state_R(phi) - target).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(MeasureSubsystemC, CollapsesOntoColumn) {
  const UnitaryOperator v = sample_haar_unitary(8, 1);
  const QuantumState choi = apply_on_R(v, max_entangled(8));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const MeasurementOutcome m = measure_subsystem_C(choi, s);
    EXPECT_NEAR(m.probability, 1.0 / 8.0, 1e-12);
    const QuantumState column = QuantumState::pure(v.entries().col(m.outcome));
    EXPECT_NEAR(overlap(m.post_state, column), 1.0, 1e-10);
  }
}

TEST(MeasureSubsystemC, ProductStateIsDeterministic) {
  const QuantumState psi = random_pure_state(4, 2);
  const CVector c = QuantumState::basis(5, 3).vector();
  CVector joint(20);
  for (int i = 0; i < 5; ++i) joint.segment(4 * i, 4) = c(i) * psi.vector();
  const QuantumState product = QuantumState::pure(joint, Factorization{5, 4});
  const MeasurementOutcome m = measure_subsystem_C(product, 9);
  EXPECT_EQ(m.outcome, 3u);
  EXPECT_NEAR(m.probability, 1.0, 1e-12);
  EXPECT_NEAR(overlap(m.post_state, psi), 1.0, 1e-12);
}

TEST(MeasureSubsystemC, RequiresFactorization) {
  try {
    measure_subsystem_C(QuantumState::basis(4, 0), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidation);
  }
}

TEST(MeasureSubsystemC, OutcomesAreUniform) {
  const QuantumState choi = apply_on_R(sample_haar_unitary(8, 3), max_entangled(8));
  std::vector<std::size_t> counts(8, 0);
  for (std::uint64_t s = 0; s < 10000; ++s) ++counts[measure_subsystem_C(choi, derive_seed(5, "m", s)).outcome];
  EXPECT_GT(stats::chi_squared_uniform(counts).p_value, 0.01);
}

TEST(MeasureSubsystemC, DensityInput) {
  const QuantumState choi = apply_on_R(sample_haar_unitary(3, 4), max_entangled(3));
  const QuantumState rho = QuantumState::density(choi.to_density(), Factorization{3, 3});
  const auto probs = outcome_probabilities_C(rho);
  for (double p : probs) EXPECT_NEAR(p, 1.0 / 3.0, 1e-12);
  const MeasurementOutcome m = measure_subsystem_C(rho, 2);
  EXPECT_NEAR(m.post_state.to_density().trace().real(), 1.0, 1e-12);
}

TEST(Overlap, BasicCases) {
  const QuantumState a = random_pure_state(16, 1);
  EXPECT_NEAR(overlap(a, a), 1.0, 1e-12);
  EXPECT_EQ(overlap(QuantumState::basis(4, 1), QuantumState::basis(4, 2)), 0.0);
  EXPECT_NEAR(overlap(QuantumState::maximally_mixed(16), a), 1.0 / 16.0, 1e-12);
  EXPECT_THROW(overlap(QuantumState::basis(4, 1), QuantumState::basis(8, 1)), Error);
}

TEST(SwapTest, ExactValues) {
  const QuantumState a = random_pure_state(16, 5);
  EXPECT_NEAR(swap_test_exact(a, a), 1.0, 1e-12);
  EXPECT_NEAR(swap_test_exact(QuantumState::basis(4, 0), QuantumState::basis(4, 3)), 0.5, 1e-15);
  EXPECT_NEAR(swap_test_exact(QuantumState::maximally_mixed(16), a), 0.53125, 1e-12);
  EXPECT_NEAR(swap_test_exact(QuantumState::maximally_mixed(16), a, SwapRule::kSquared), 0.5 + 0.5 / 256.0, 1e-12);
}

TEST(SwapTest, SampledAgreesWithExact) {
  const QuantumState mixed = QuantumState::maximally_mixed(16);
  const QuantumState a = random_pure_state(16, 6);
  std::vector<double> bits(100000);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = swap_test_sampled(mixed, a, derive_seed(6, "s", i)) ? 1 : 0;
  const auto est = stats::estimate(bits);
  EXPECT_NEAR(est.mean, 0.53125, 3.0 * est.std_error);
}

TEST(QuantumState, DigestTracksContent) {
  EXPECT_EQ(QuantumState::basis(4, 1).digest(), QuantumState::basis(4, 1).digest());
  EXPECT_NE(QuantumState::basis(4, 1).digest(), QuantumState::basis(4, 2).digest());
  EXPECT_EQ(QuantumState::basis(4, 1).digest().size(), 16u);
}

}  // namespace
}  // namespace qpuf
