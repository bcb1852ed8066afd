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

#include "qpuf/chaos_probes.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "qpuf/error.hpp"
#include "qpuf/random.hpp"
#include "qpuf/spectral_stats.hpp"
#include "qpuf/stats.hpp"

namespace qpuf {
namespace {

const UnitaryOperator kIdentity16(CMatrix::Identity(16, 16), UnitaryProvenance::kExplicit);

EnsembleConfig gue(std::size_t dim) {
  EnsembleConfig cfg;
  cfg.kind = Ensemble::kGue;
  cfg.dim = dim;
  return cfg;
}

ProbeConfig late_window(std::size_t samples, std::uint64_t seed) {
  ProbeConfig cfg;
  cfg.times = spectral::linspace(kLateTimeBegin, kLateTimeEnd, 11);
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

TEST(PauliString, KnownMatrices) {
  const CMatrix y = pauli_string("Y");
  EXPECT_EQ(y(0, 1), Complex(0, -1));
  EXPECT_EQ(y(1, 0), Complex(0, 1));
  const CMatrix xz = pauli_string("XZ");
  EXPECT_EQ(xz(0, 2), Complex(1, 0));   // |00> -> |10>
  EXPECT_EQ(xz(1, 3), Complex(-1, 0));  // |01> picks up the Z sign
  EXPECT_EQ(single_site_pauli('Z', 1, 3), pauli_string("IZI"));
  EXPECT_THROW(pauli_string("XQ"), Error);
}

TEST(Otoc, TimeZeroSigns) {
  EXPECT_NEAR(otoc4(kIdentity16, pauli_string("XIII"), pauli_string("IZII")), 1.0, 1e-9);
  EXPECT_NEAR(otoc4(kIdentity16, pauli_string("XIII"), pauli_string("ZIII")), -1.0, 1e-9);
  EXPECT_NEAR(otoc4(kIdentity16, pauli_string("XXII"), pauli_string("ZZII")), 1.0, 1e-9);
}

TEST(Otoc, EigenbasisMatchesDense) {
  const auto u = make_evolution(sample_gue(16, 3), 2.3);
  const CMatrix o1 = pauli_string("XIII"), o2 = pauli_string("IIZI");
  EXPECT_NEAR(otoc4(u, o1, o2), otoc4(u.unitary(), o1, o2), 1e-10);
}

TEST(Otoc, GueDecaysAtLateTimes) {
  const ProbeReport r = run_probe(gue(16), Probe::kOtoc4, late_window(20, 4));
  EXPECT_EQ(r.descriptors.o1, "XIII");
  EXPECT_EQ(r.descriptors.o2, "IZII");
  EXPECT_LT(std::abs(r.window.mean), 0.2);
}

TEST(Renyi2, ProductStateAtTimeZero) {
  EXPECT_NEAR(renyi2_entropy(kIdentity16, QuantumState::basis(16, 5), {4, 4}), 0.0, 1e-9);
}

TEST(Renyi2, BellPairUnderLocalUnitaries) {
  const QuantumState phi = max_entangled(4);
  EXPECT_NEAR(renyi2_entropy(kIdentity16, phi, {4, 4}), std::log(4.0), 1e-12);
  const CMatrix ua = sample_haar_unitary(4, 1).entries(), ub = sample_haar_unitary(4, 2).entries();
  CMatrix local(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) local.block(4 * i, 4 * j, 4, 4) = ua(i, j) * ub;
  const UnitaryOperator u(local, UnitaryProvenance::kExplicit);
  EXPECT_NEAR(renyi2_entropy(u, phi, {4, 4}), std::log(4.0), 1e-10);
  const QuantumState rho = QuantumState::density(phi.to_density());
  EXPECT_NEAR(renyi2_entropy(u, rho, {4, 4}), std::log(4.0), 1e-10);
}

TEST(Renyi2, GuePlateauIsExtensive) {
  // Cut one qubit against three; the balanced cut sits below 0.6 log 4 even for Haar states.
  ProbeConfig cfg = late_window(20, 5);
  cfg.dim_a = 2;
  const ProbeReport r = run_probe(gue(16), Probe::kRenyi2, cfg);
  EXPECT_GE(r.window.mean, 0.6 * std::log(2.0));
}

TEST(Renyi2, RejectsBadCut) {
  EXPECT_THROW(renyi2_entropy(kIdentity16, QuantumState::basis(16, 0), {3, 5}), Error);
}

TEST(Loe, SingleSitePauliIsProduct) {
  EXPECT_NEAR(operator_entanglement(kIdentity16, single_site_pauli('X', 0, 4), {4, 4}), 0.0, 1e-9);
  EXPECT_NEAR(operator_entanglement(kIdentity16, single_site_pauli('Y', 3, 4), {2, 8}), 0.0, 1e-9);
}

TEST(Loe, SwapHasTwoLogTwo) {
  CMatrix swap = CMatrix::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
  EXPECT_NEAR(operator_entanglement(swap, {2, 2}), 2.0 * std::log(2.0), 1e-12);
}

TEST(Loe, GueApproachesHaarValue) {
  const ProbeReport r = run_probe(gue(16), Probe::kLoe, late_window(20, 6));
  std::vector<double> haar(200);
  for (std::size_t i = 0; i < haar.size(); ++i)
    haar[i] = evaluate_probe(Probe::kLoe, sample_haar_unitary(16, derive_seed(6, "haar", i)), r.descriptors);
  const double target = stats::estimate(haar).mean;
  EXPECT_NEAR(r.window.mean, target, 0.25 * target);
}

TEST(StabilizerEntropy, StabilizerStatesVanish) {
  EXPECT_NEAR(stabilizer_entropy(kIdentity16, QuantumState::basis(16, 0), 2), 0.0, 1e-9);
  CVector plus = CVector::Constant(4, 0.5);
  EXPECT_NEAR(stabilizer_entropy(QuantumState::pure(plus), 2), 0.0, 1e-12);
}

TEST(StabilizerEntropy, TStateClosedForm) {
  // <X> = <Y> = 1/sqrt 2, <Z> = 0: (1/2)(1 + 1/4 + 1/4 + 0) inside the log.
  CVector t(2);
  t << 1.0 / std::sqrt(2.0), std::polar(1.0 / std::sqrt(2.0), kPi / 4.0);
  EXPECT_NEAR(stabilizer_entropy(QuantumState::pure(t), 2), std::log(4.0 / 3.0), 1e-12);
}

TEST(StabilizerEntropy, GueReachesHaarMagic) {
  const ProbeReport r = run_probe(gue(16), Probe::kStabilizerEntropy, late_window(20, 7));
  std::vector<double> haar(200);
  for (std::size_t i = 0; i < haar.size(); ++i)
    haar[i] = stabilizer_entropy(random_pure_state(16, derive_seed(7, "haar", i)), 2);
  EXPECT_GE(r.window.mean, 0.5 * stats::estimate(haar).mean);
}

TEST(StabilizerEntropy, Preconditions) {
  try {
    stabilizer_entropy(QuantumState::basis(128, 0), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kResourceLimit);
  }
  EXPECT_THROW(stabilizer_entropy(QuantumState::maximally_mixed(4), 2), Error);
  EXPECT_THROW(stabilizer_entropy(QuantumState::basis(4, 0), 1), Error);
}

TEST(ProbeNames, RoundTrip) {
  for (Probe p : {Probe::kOtoc4, Probe::kRenyi2, Probe::kLoe, Probe::kStabilizerEntropy, Probe::kSff})
    EXPECT_EQ(probe_from_string(to_string(p)), p);
  EXPECT_THROW(probe_from_string("lyapunov"), Error);
}

TEST(Contrast, PseudoChaoticSffGap) {
  EnsembleConfig pseudo = gue(16);
  pseudo.kind = Ensemble::kPseudoChaotic;
  pseudo.distinct_eigenvalues = 2;
  ProbeConfig cfg;
  cfg.times = spectral::linspace(spectral::kPlateauBegin, spectral::kPlateauEnd, 21);
  cfg.samples = 100;
  cfg.seed = 8;
  const ContrastReport r = probe_contrast(pseudo, gue(16), Probe::kSff, cfg);
  EXPECT_NEAR(r.a.window.mean, 128.0, 0.25 * 128.0);
  EXPECT_GE(r.gap_factor, 4.0);
}

TEST(Contrast, SelfComparisonHasNoGap) {
  ProbeConfig cfg = late_window(40, 9);
  const ContrastReport r = probe_contrast(gue(16), gue(16), Probe::kOtoc4, cfg);
  EXPECT_LE(std::abs(r.gap), 3.0 * r.gap_std_error);
}

TEST(Contrast, GueVersusSykOtoc) {
  EnsembleConfig syk;
  syk.kind = Ensemble::kSyk;
  syk.syk.modes = 4;
  const ContrastReport r = probe_contrast(gue(16), syk, Probe::kOtoc4, late_window(10, 10));
  EXPECT_EQ(r.a.values.size(), 11u);
  EXPECT_EQ(r.b.values.size(), 11u);
  EXPECT_THROW(probe_contrast(gue(8), syk, Probe::kOtoc4, late_window(10, 10)), Error);
}

}  // namespace
}  // namespace qpuf
