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
#include <string>
#include <string_view>
#include <vector>

#include "qpuf/dynamics.hpp"
#include "qpuf/quantum_state.hpp"

namespace qpuf {

enum class Scheme { kSelective, kMb };
enum class SwapMode { kExact, kSampled };
/// How MB challenges are drawn: measure the stored Choi state, or sample m
/// uniformly and rebuild U|m> directly.
enum class ChallengeMode { kFull, kShortcut };

std::string_view to_string(Scheme s);
std::string_view to_string(SwapMode m);
std::string_view to_string(ChallengeMode m);

struct ProtocolConfig {
  std::size_t dim = 16;
  int security_parameter = 4;
  std::size_t trials_per_round = 4;  // M
  std::size_t rounds = 1;            // N
  double time = 160.0;
  SwapMode swap_mode = SwapMode::kExact;
  SwapRule swap_rule = SwapRule::kPhysical;
  ChallengeMode challenge_mode = ChallengeMode::kFull;
  std::uint64_t seed = 0;
  std::size_t max_choi_dim = std::size_t{1} << 14;

  std::size_t records() const { return trials_per_round * rounds; }
  void validate() const;
};

/// Qubit-register config: D = 2^qubits, t = 10 D unless overridden.
ProtocolConfig protocol_config_for_qubits(int qubits, std::size_t trials, std::uint64_t seed);

struct SelectiveRecord {
  QuantumState challenge;
  QuantumState stored_response;
  QuantumState spare_challenge;
};

class CRPDatabase {
 public:
  static CRPDatabase selective(std::vector<SelectiveRecord> records);
  static CRPDatabase mb_materialized(std::vector<QuantumState> choi_states, EvolutionOperator qpuf);
  static CRPDatabase mb_lazy(std::size_t count, EvolutionOperator qpuf);

  Scheme scheme() const { return scheme_; }
  std::size_t size() const;
  const std::vector<SelectiveRecord>& selective_records() const { return selective_; }
  bool is_lazy() const { return scheme_ == Scheme::kMb && choi_.empty(); }
  /// Stored (or regenerated) (I (x) U)|Phi+> for record i.
  QuantumState choi_state(std::size_t i) const;
  /// QPUF the MB records were enrolled with; used by the shortcut path.
  const EvolutionOperator& mb_source() const;

 private:
  Scheme scheme_ = Scheme::kSelective;
  std::vector<SelectiveRecord> selective_;
  std::vector<QuantumState> choi_;
  std::size_t lazy_count_ = 0;
  std::optional<EvolutionOperator> source_;
};

/// Anything that answers verifier challenges. nullopt means no state came back.
/// Implementations must be safe to call concurrently for distinct trials.
class Responder {
 public:
  virtual ~Responder() = default;
  virtual std::string name() const = 0;
  virtual std::optional<QuantumState> respond_selective(const QuantumState& challenge,
                                                        std::size_t trial) const = 0;
  virtual std::optional<QuantumState> respond_mb(std::size_t outcome, std::size_t trial) const = 0;
};

class HonestResponder : public Responder {
 public:
  explicit HonestResponder(EvolutionOperator qpuf) : qpuf_(std::move(qpuf)) {}
  std::string name() const override { return "honest"; }
  std::optional<QuantumState> respond_selective(const QuantumState& challenge, std::size_t) const override;
  std::optional<QuantumState> respond_mb(std::size_t outcome, std::size_t) const override;

 private:
  EvolutionOperator qpuf_;
};

struct TrialRecord {
  std::size_t round = 0;
  std::size_t trial = 0;
  std::size_t challenge_id = 0;          // selective: record index
  std::optional<std::size_t> outcome;    // MB: measured m_i
  std::string response_digest;           // empty when no response arrived
  double acceptance_probability = 0.0;
  std::optional<bool> accepted;          // SAMPLED mode only
};

struct Transcript {
  Scheme scheme = Scheme::kSelective;
  ProtocolConfig config;
  std::string responder;
  std::vector<TrialRecord> trials;
  std::vector<double> round_overall;
  /// EXACT: product of per-trial probabilities. SAMPLED: 1 when every test passed, else 0.
  double overall = 0.0;
  std::optional<bool> verdict;  // SAMPLED mode only
};

CRPDatabase enroll_selective(const EvolutionOperator& qpuf, const ProtocolConfig& cfg);
CRPDatabase enroll_mb(const EvolutionOperator& qpuf, const ProtocolConfig& cfg);

Transcript verify_selective(const CRPDatabase& db, const Responder& responder, const ProtocolConfig& cfg);
Transcript verify_mb(const CRPDatabase& db, const Responder& responder, const ProtocolConfig& cfg);

/// Enrolls and verifies in one go for the given scheme.
Transcript run_protocol(Scheme scheme, const EvolutionOperator& qpuf, const Responder& responder,
                        const ProtocolConfig& cfg);

struct ResourceEstimate {
  double probability = 0.0;
  double qubits = 0.0;          // lambda = -log2(p)
  double even_split_bits = 0.0; // M = lambda' with 2^-M = 2^-lambda' = p / 2
};

/// lambda = -log2(p) for p in (0, 1).
double resource_estimate(double p);
ResourceEstimate resource_budget(double p);

/// Log-spaced p_k = p_min^(1 - k / points), k = 0..points-1, covering [p_min, 1).
std::vector<ResourceEstimate> resource_sweep(double p_min, std::size_t points);

}  // namespace qpuf
