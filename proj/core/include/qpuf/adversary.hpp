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

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qpuf/protocols.hpp"
#include "qpuf/rmt_ensembles.hpp"
#include "qpuf/stats.hpp"

namespace qpuf {

/// Input/output pairs an adversary collected from the QPUF.
struct QueryDatabase {
  std::vector<std::pair<QuantumState, QuantumState>> pairs;
  std::size_t size() const { return pairs.size(); }
};

/// Queries the first q computational basis states. q >= D is rejected.
QueryDatabase build_query_db(const EvolutionOperator& qpuf, std::size_t q, std::uint64_t seed);

/// Propagates the part of the challenge inside the learned input span exactly
/// and fills the rest with a Haar-random direction in the complement of the
/// learned output span, weighted by the component norms.
QuantumState subspace_adversary_respond(const QueryDatabase& db, const QuantumState& challenge,
                                        std::uint64_t seed);

struct AdversarySpec {
  enum class Kind { kNone, kRandomPure, kMaxMixed, kSubspace, kOracle };
  Kind kind = Kind::kMaxMixed;
  std::size_t queries = 0;

  bool white_box() const { return kind == Kind::kOracle; }
  std::size_t query_count() const { return kind == Kind::kSubspace ? queries : 0; }
  std::string label() const;
};

/// Accepts none | random | mixed | oracle | subspace:q.
AdversarySpec parse_adversary(std::string_view text);

/// Builds a responder for `spec` against this QPUF. Subspace adversaries query
/// it first; the oracle answers honestly.
std::unique_ptr<Responder> make_adversary(const AdversarySpec& spec, const EvolutionOperator& qpuf,
                                          std::uint64_t seed);

struct Theorem2Bound {
  std::size_t reduced_dim = 0;        // D - q
  double per_trial_overlap = 0.0;     // (S + D~) / (D~^2 - 1), S = D~ unless supplied
  double final_bound = 0.0;           // 2^-M + per_trial_overlap
};

Theorem2Bound theorem2_bound(std::size_t dim, std::size_t q, std::size_t trials,
                             std::optional<double> sff_value = std::nullopt);

struct ExperimentReport {
  Scheme scheme = Scheme::kMb;
  Ensemble ensemble = Ensemble::kGue;
  std::string adversary;
  bool white_box = false;
  std::size_t dim = 0;
  std::size_t queries = 0;
  std::size_t trials = 0;
  std::size_t mc_samples = 0;
  double time = 0.0;
  double mean = 0.0;
  double std_error = 0.0;
  double bound = 0.0;
  double per_trial_bound = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
};

/// Monte Carlo over fresh QPUFs, EXACT swap mode, one verification round.
ExperimentReport estimate_forging_probability(Scheme scheme, const EnsembleConfig& ensemble,
                                              const AdversarySpec& adversary, const ProtocolConfig& cfg,
                                              std::size_t mc_samples, std::uint64_t seed);

/// Closed form of E_{V~Haar} Tr[V L V^+ |k><k| V L^+ V^+ rho] from the
/// second-order Weingarten weights Wg(id) = 1/(D^2-1), Wg(swap) = -1/(D(D^2-1)):
///   a rho_kk + b,  a = S Wg(id) + D Wg(swap),  b = D Wg(id) + S Wg(swap),
/// where S = |Tr L|^2.
double weingarten_expectation(std::span<const Complex> lambda_diag, const QuantumState& rho, std::size_t k);

/// Brute-force Haar average of the same quantity.
stats::Estimate weingarten_monte_carlo(std::span<const Complex> lambda_diag, const QuantumState& rho,
                                       std::size_t k, std::size_t samples, std::uint64_t seed);

struct LeftInvarianceResult {
  stats::TwoSampleKs ks;
  stats::Estimate evolved;  // overlaps of U(t) U_k |0> with the guess
  stats::Estimate direct;   // overlaps of U_k |0> with the guess
};

/// Two independent overlap samples, with and without the QPUF in front of U_k.
LeftInvarianceResult left_invariance_check(const EvolutionOperator& qpuf, const QuantumState& guess,
                                           std::size_t draws, std::uint64_t seed);

}  // namespace qpuf
