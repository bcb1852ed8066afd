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

#include "qpuf/dynamics.hpp"

#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <memory>
#include <thread>
#include <vector>

#include "qpuf/quantum_state.hpp"
#include "qpuf/rmt_ensembles.hpp"
#include "qpuf/spectral_stats.hpp"

namespace qpuf {
namespace {

TEST(MakeEvolution, TimeZeroIsIdentity) {
  const auto u = make_evolution(sample_gue(8, 1), 0.0);
  EXPECT_LT((u.unitary().entries() - CMatrix::Identity(8, 8)).norm(), 1e-10);
}

TEST(MakeEvolution, UnitaryAtAnyTime) {
  for (double t : {0.3, 17.0, 640.0}) {
    const auto u = make_evolution(sample_gue(16, 2), t);
    EXPECT_LT(unitarity_residual(u.unitary().entries()), 1e-10 * 16);
  }
}

TEST(MakeEvolution, MatchesDenseExponential) {
  const HermitianOperator h = sample_gue(6, 3);
  const double t = 2.5;
  const CMatrix oracle = (CMatrix(Complex(0, -t) * h.entries())).exp();
  EXPECT_LT((make_evolution(h, t).unitary().entries() - oracle).norm(), 1e-10);
}

TEST(MakeEvolution, LazyAndShared) {
  const auto u = make_evolution(sample_gue(8, 4), 1.0);
  EXPECT_FALSE(u.is_materialized());
  const CVector psi = QuantumState::basis(8, 2).vector();
  const CVector fast = u.apply_to(psi);
  EXPECT_FALSE(u.is_materialized());
  const auto copy = u;
  EXPECT_LT((copy.unitary().entries() * psi - fast).norm(), 1e-12);
  EXPECT_TRUE(u.is_materialized());
  EXPECT_LT((u.at(2.0).unitary().entries() - u.unitary().entries() * u.unitary().entries()).norm(), 1e-10);
}

TEST(MakeEvolution, ConcurrentMaterialization) {
  const auto u = make_evolution(sample_gue(32, 5), 3.0);
  std::vector<const UnitaryOperator*> seen(4);
  std::vector<std::thread> threads;
  for (int i = 0; i < 4; ++i) threads.emplace_back([&, i] { seen[i] = &u.unitary(); });
  for (auto& th : threads) th.join();
  for (auto* p : seen) EXPECT_EQ(p, seen[0]);
}

TEST(Apply, IdentityLeavesStateAlone) {
  const auto id = make_evolution(sample_gue(8, 6), 0.0);
  const QuantumState psi = random_pure_state(8, 3);
  EXPECT_NEAR(overlap(apply(id, psi), psi), 1.0, 1e-12);
}

TEST(Apply, PreservesNorm) {
  const auto u = make_evolution(sample_gue(8, 7), 80.0);
  const QuantumState out = apply(u, QuantumState::basis(8, 0));
  EXPECT_NEAR(out.vector().norm(), 1.0, 1e-10);
}

TEST(Apply, MaximallyMixedIsInvariant) {
  const QuantumState mixed = QuantumState::maximally_mixed(8);
  const QuantumState out = apply(sample_haar_unitary(8, 8), mixed);
  EXPECT_LT((out.density_matrix() - CMatrix::Identity(8, 8) / 8.0).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Apply, DensityMatchesPure) {
  const UnitaryOperator v = sample_haar_unitary(4, 9);
  const QuantumState psi = random_pure_state(4, 10);
  const QuantumState rho = QuantumState::density(psi.to_density());
  EXPECT_LT((apply(v, rho).density_matrix() - apply(v, psi).to_density()).norm(), 1e-12);
}

TEST(ApplyOnR, ActsOnSecondFactor) {
  const UnitaryOperator v = sample_haar_unitary(3, 11);
  const QuantumState phi = max_entangled(3);
  const QuantumState out = apply_on_R(v, phi);
  CMatrix kron = CMatrix::Zero(9, 9);
  for (int c = 0; c < 3; ++c) kron.block(3 * c, 3 * c, 3, 3) = v.entries();
  EXPECT_LT((out.vector() - kron * phi.vector()).norm(), 1e-12);
  ASSERT_TRUE(out.factorization().has_value());
  EXPECT_EQ(out.factorization()->dim_r, 3u);
}

}  // namespace
}  // namespace qpuf
