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

#include "qpuf/protocols.hpp"

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

EvolutionOperator gue_qpuf(std::size_t dim, std::uint64_t seed) {
  return make_evolution(sample_gue(dim, seed), default_evolution_time(dim));
}

ProtocolConfig config(std::size_t dim, std::size_t trials, std::uint64_t seed) {
  ProtocolConfig cfg;
  cfg.dim = dim;
  cfg.trials_per_round = trials;
  cfg.time = default_evolution_time(dim);
  cfg.seed = seed;
  return cfg;
}

class MaxMixed : public Responder {
 public:
  explicit MaxMixed(std::size_t dim) : dim_(dim) {}
  std::string name() const override { return "test-mixed"; }
  std::optional<QuantumState> respond_selective(const QuantumState&, std::size_t) const override {
    return QuantumState::maximally_mixed(dim_);
  }
  std::optional<QuantumState> respond_mb(std::size_t, std::size_t) const override {
    return QuantumState::maximally_mixed(dim_);
  }

 private:
  std::size_t dim_;
};

// Answers with U applied to a state orthogonal to the challenge.
class Orthogonal : public Responder {
 public:
  explicit Orthogonal(EvolutionOperator u) : u_(std::move(u)) {}
  std::string name() const override { return "test-orthogonal"; }
  std::optional<QuantumState> respond_selective(const QuantumState& challenge, std::size_t) const override {
    const CVector& c = challenge.vector();
    CVector perp = CVector::Zero(c.size());
    perp(0) = -std::conj(c(1));
    perp(1) = std::conj(c(0));
    perp.normalize();
    return apply(u_, QuantumState::pure(perp));
  }
  std::optional<QuantumState> respond_mb(std::size_t m, std::size_t) const override {
    return apply(u_, QuantumState::basis(u_.dim(), m ^ 1u));
  }

 private:
  EvolutionOperator u_;
};

TEST(EnrollSelective, SingleRecord) {
  const auto u = gue_qpuf(2, 1);
  const CRPDatabase db = enroll_selective(u, config(2, 1, 3));
  ASSERT_EQ(db.size(), 1u);
  EXPECT_NEAR(db.selective_records()[0].stored_response.vector().norm(), 1.0, 1e-12);
}

TEST(EnrollSelective, StoredResponsesAreExact) {
  const auto u = gue_qpuf(16, 2);
  const CRPDatabase db = enroll_selective(u, config(16, 8, 4));
  for (const auto& r : db.selective_records())
    EXPECT_NEAR(overlap(r.stored_response, apply(u.unitary(), r.challenge)), 1.0, 1e-10);
}

TEST(EnrollSelective, ChallengesLookHaar) {
  const auto u = gue_qpuf(16, 3);
  std::vector<double> means;
  for (std::uint64_t rep = 0; rep < 1000; ++rep) {
    const CRPDatabase db = enroll_selective(u, config(16, 8, derive_seed(7, "rep", rep)));
    const auto& recs = db.selective_records();
    double sum = 0.0;
    int pairs = 0;
    for (std::size_t i = 0; i < recs.size(); ++i)
      for (std::size_t j = i + 1; j < recs.size(); ++j, ++pairs) sum += overlap(recs[i].challenge, recs[j].challenge);
    means.push_back(sum / pairs);
  }
  const auto est = stats::estimate(means);
  EXPECT_NEAR(est.mean, 1.0 / 16.0, 3.0 * est.std_error);
}

TEST(EnrollMb, IdentityQpufStoresBellState) {
  const auto id = make_evolution(sample_gue(4, 1), 0.0);
  const CRPDatabase db = enroll_mb(id, config(4, 2, 1));
  EXPECT_LT((db.choi_state(0).vector() - max_entangled(4).vector()).norm(), 1e-12);
  EXPECT_LT((db.choi_state(1).vector() - max_entangled(4).vector()).norm(), 1e-12);
}

TEST(EnrollMb, RespectsChoiBudget) {
  auto cfg = config(16, 1, 1);
  cfg.max_choi_dim = 64;
  EXPECT_THROW(enroll_mb(gue_qpuf(16, 1), cfg), Error);
  cfg.challenge_mode = ChallengeMode::kShortcut;
  cfg.max_choi_dim = 1 << 14;
  EXPECT_TRUE(enroll_mb(gue_qpuf(16, 1), cfg).is_lazy());
}

TEST(Verify, HonestSelectiveAndMb) {
  for (std::size_t d : {4u, 16u}) {
    const auto u = gue_qpuf(d, 5);
    const HonestResponder honest(u);
    for (std::size_t m : {1u, 4u}) {
      const Transcript s = run_protocol(Scheme::kSelective, u, honest, config(d, m, 6));
      EXPECT_NEAR(s.overall, 1.0, 1e-10);
      const Transcript b = run_protocol(Scheme::kMb, u, honest, config(d, m, 6));
      EXPECT_NEAR(b.overall, 1.0, 1e-10);
      for (const auto& t : b.trials) EXPECT_TRUE(t.outcome.has_value());
    }
  }
}

TEST(Verify, MaximallyMixedClosedForm) {
  const auto u = gue_qpuf(16, 8);
  const MaxMixed mixed(16);
  const double expected = std::pow(0.53125, 4);
  EXPECT_NEAR(run_protocol(Scheme::kSelective, u, mixed, config(16, 4, 9)).overall, expected, 1e-10);
  EXPECT_NEAR(run_protocol(Scheme::kMb, u, mixed, config(16, 4, 9)).overall, expected, 1e-10);
  EXPECT_NEAR(expected, 0.0797, 1e-4);
}

TEST(Verify, OrthogonalResponsesHitOneHalf) {
  const auto u = gue_qpuf(8, 10);
  const Orthogonal orth(u);
  EXPECT_NEAR(run_protocol(Scheme::kSelective, u, orth, config(8, 3, 2)).overall, 0.125, 1e-10);
  EXPECT_NEAR(run_protocol(Scheme::kMb, u, orth, config(8, 1, 2)).overall, 0.5, 1e-10);
}

TEST(Verify, ShortcutMatchesFull) {
  const auto u = gue_qpuf(8, 11);
  const MaxMixed mixed(8);
  auto cfg = config(8, 4, 12);
  const Transcript full = run_protocol(Scheme::kMb, u, mixed, cfg);
  cfg.challenge_mode = ChallengeMode::kShortcut;
  const Transcript fast = run_protocol(Scheme::kMb, u, mixed, cfg);
  EXPECT_NEAR(full.overall, fast.overall, 1e-12);
}

TEST(Verify, SampledModeReportsVerdict) {
  const auto u = gue_qpuf(4, 13);
  auto cfg = config(4, 4, 14);
  cfg.swap_mode = SwapMode::kSampled;
  const Transcript honest = run_protocol(Scheme::kSelective, u, HonestResponder(u), cfg);
  ASSERT_TRUE(honest.verdict.has_value());
  EXPECT_TRUE(*honest.verdict);
  EXPECT_EQ(honest.overall, 1.0);
  for (const auto& t : honest.trials) EXPECT_TRUE(t.accepted.has_value());
}

TEST(Verify, RepeatedRoundsMultiply) {
  const auto u = gue_qpuf(16, 15);
  auto cfg = config(16, 2, 16);
  cfg.rounds = 3;
  const Transcript t = run_protocol(Scheme::kSelective, u, MaxMixed(16), cfg);
  EXPECT_EQ(t.trials.size(), 6u);
  ASSERT_EQ(t.round_overall.size(), 3u);
  EXPECT_NEAR(t.overall, std::pow(0.53125, 6), 1e-12);
}

TEST(Verify, RejectsMismatchedDatabase) {
  const auto u = gue_qpuf(4, 1);
  const CRPDatabase db = enroll_selective(u, config(4, 1, 1));
  EXPECT_THROW(verify_mb(db, HonestResponder(u), config(4, 1, 1)), Error);
  EXPECT_THROW(verify_selective(db, HonestResponder(u), config(4, 2, 1)), Error);
}

TEST(ResourceEstimate, FigureValues) {
  EXPECT_EQ(resource_estimate(1.0 / 1024.0), 10.0);
  EXPECT_EQ(resource_estimate(0.5), 1.0);
  EXPECT_NEAR(resource_estimate(0.001), 9.9658, 1e-4);
  EXPECT_NEAR(resource_budget(1.0 / 1024.0).even_split_bits, 11.0, 1e-12);
  for (double bad : {0.0, 1.0, -0.2, 1.5}) {
    try {
      resource_estimate(bad);
      FAIL() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kDomain);
    }
  }
}

}  // namespace
}  // namespace qpuf
