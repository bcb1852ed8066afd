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

#include <cmath>

#include "qpuf/error.hpp"
#include "qpuf/random.hpp"
#include "qpuf/rmt_ensembles.hpp"

namespace qpuf {

std::string_view to_string(Scheme s) { return s == Scheme::kSelective ? "selective" : "mb"; }
std::string_view to_string(SwapMode m) { return m == SwapMode::kExact ? "exact" : "sampled"; }
std::string_view to_string(ChallengeMode m) { return m == ChallengeMode::kFull ? "full" : "shortcut"; }

void ProtocolConfig::validate() const {
  require(dim >= 2, ErrorKind::kInvalidDimension, "ProtocolConfig: D must be >= 2");
  require(trials_per_round >= 1, ErrorKind::kValidation, "ProtocolConfig: M must be >= 1");
  require(rounds >= 1, ErrorKind::kValidation, "ProtocolConfig: N must be >= 1");
  require(time >= 0.0 && std::isfinite(time), ErrorKind::kValidation, "ProtocolConfig: t must be >= 0");
}

ProtocolConfig protocol_config_for_qubits(int qubits, std::size_t trials, std::uint64_t seed) {
  require(qubits >= 1 && qubits < 20, ErrorKind::kValidation, "protocol: qubit count out of range");
  ProtocolConfig cfg;
  cfg.dim = std::size_t{1} << qubits;
  cfg.security_parameter = qubits;
  cfg.trials_per_round = trials;
  cfg.time = default_evolution_time(cfg.dim);
  cfg.seed = seed;
  return cfg;
}

CRPDatabase CRPDatabase::selective(std::vector<SelectiveRecord> records) {
  CRPDatabase db;
  db.scheme_ = Scheme::kSelective;
  db.selective_ = std::move(records);
  return db;
}

CRPDatabase CRPDatabase::mb_materialized(std::vector<QuantumState> choi_states, EvolutionOperator qpuf) {
  CRPDatabase db;
  db.scheme_ = Scheme::kMb;
  db.choi_ = std::move(choi_states);
  db.source_.emplace(std::move(qpuf));
  return db;
}

CRPDatabase CRPDatabase::mb_lazy(std::size_t count, EvolutionOperator qpuf) {
  CRPDatabase db;
  db.scheme_ = Scheme::kMb;
  db.lazy_count_ = count;
  db.source_.emplace(std::move(qpuf));
  return db;
}

std::size_t CRPDatabase::size() const {
  if (scheme_ == Scheme::kSelective) return selective_.size();
  return choi_.empty() ? lazy_count_ : choi_.size();
}

QuantumState CRPDatabase::choi_state(std::size_t i) const {
  require(scheme_ == Scheme::kMb, ErrorKind::kValidation, "CRPDatabase: not an MB database");
  require(i < size(), ErrorKind::kValidation, "CRPDatabase: record index out of range");
  if (!choi_.empty()) return choi_[i];
  return apply_on_R(source_->unitary(), max_entangled(source_->dim()));
}

const EvolutionOperator& CRPDatabase::mb_source() const {
  require(source_.has_value(), ErrorKind::kValidation, "CRPDatabase: no MB source");
  return *source_;
}

std::optional<QuantumState> HonestResponder::respond_selective(const QuantumState& challenge,
                                                               std::size_t) const {
  return apply(qpuf_, challenge);
}

std::optional<QuantumState> HonestResponder::respond_mb(std::size_t outcome, std::size_t) const {
  return apply(qpuf_, QuantumState::basis(qpuf_.dim(), outcome));
}

CRPDatabase enroll_selective(const EvolutionOperator& qpuf, const ProtocolConfig& cfg) {
  cfg.validate();
  require(qpuf.dim() == cfg.dim, ErrorKind::kDimensionMismatch, "enroll_selective: QPUF dim != config dim");
  std::vector<SelectiveRecord> records;
  records.reserve(cfg.records());
  for (std::size_t k = 0; k < cfg.records(); ++k) {
    const UnitaryOperator uk = sample_haar_unitary(cfg.dim, derive_seed(cfg.seed, "selective-challenge", k));
    CVector column = uk.entries().col(0);  // U_k |0>
    column.normalize();
    QuantumState challenge = QuantumState::pure(column);
    QuantumState response = apply(qpuf, challenge);
    records.push_back({challenge, std::move(response), challenge});
  }
  return CRPDatabase::selective(std::move(records));
}

CRPDatabase enroll_mb(const EvolutionOperator& qpuf, const ProtocolConfig& cfg) {
  cfg.validate();
  require(qpuf.dim() == cfg.dim, ErrorKind::kDimensionMismatch, "enroll_mb: QPUF dim != config dim");
  require(cfg.dim * cfg.dim <= cfg.max_choi_dim, ErrorKind::kResourceLimit,
          "enroll_mb: D^2 exceeds the configured Choi-state budget");
  if (cfg.challenge_mode == ChallengeMode::kShortcut) return CRPDatabase::mb_lazy(cfg.records(), qpuf);
  const QuantumState choi = apply_on_R(qpuf.unitary(), max_entangled(cfg.dim));
  return CRPDatabase::mb_materialized(std::vector<QuantumState>(cfg.records(), choi), qpuf);
}

namespace {

void score_trial(TrialRecord& rec, const QuantumState& reference, const std::optional<QuantumState>& response,
                 const ProtocolConfig& cfg, std::size_t global_index) {
  if (!response) {
    rec.acceptance_probability = 0.0;
    if (cfg.swap_mode == SwapMode::kSampled) rec.accepted = false;
    return;
  }
  require(response->dim() == reference.dim(), ErrorKind::kDimensionMismatch,
          "verify: responder returned a state of the wrong dimension");
  rec.response_digest = response->digest();
  rec.acceptance_probability = swap_test_exact(reference, *response, cfg.swap_rule);
  if (cfg.swap_mode == SwapMode::kSampled) {
    rec.accepted = swap_test_sampled(reference, *response, derive_seed(cfg.seed, "swap", global_index),
                                     cfg.swap_rule);
  }
}

void aggregate(Transcript& t) {
  const auto& cfg = t.config;
  t.round_overall.assign(cfg.rounds, 1.0);
  bool all_pass = true;
  for (const auto& rec : t.trials) {
    if (cfg.swap_mode == SwapMode::kExact) {
      t.round_overall[rec.round] *= rec.acceptance_probability;
    } else {
      const bool ok = rec.accepted.value_or(false);
      if (!ok) t.round_overall[rec.round] = 0.0;
      all_pass = all_pass && ok;
    }
  }
  t.overall = 1.0;
  for (double r : t.round_overall) t.overall *= r;
  if (cfg.swap_mode == SwapMode::kSampled) t.verdict = all_pass;
}

}  // namespace

Transcript verify_selective(const CRPDatabase& db, const Responder& responder, const ProtocolConfig& cfg) {
  cfg.validate();
  require(db.scheme() == Scheme::kSelective, ErrorKind::kValidation, "verify_selective: database is not selective");
  require(db.size() >= cfg.records(), ErrorKind::kValidation, "verify_selective: database has too few records");
  Transcript t;
  t.scheme = Scheme::kSelective;
  t.config = cfg;
  t.responder = responder.name();
  t.trials.resize(cfg.records());
  parallel_for(cfg.records(), [&](std::size_t k) {
    const SelectiveRecord& record = db.selective_records()[k];
    TrialRecord& rec = t.trials[k];
    rec.round = k / cfg.trials_per_round;
    rec.trial = k % cfg.trials_per_round;
    rec.challenge_id = k;
    score_trial(rec, record.stored_response, responder.respond_selective(record.spare_challenge, k), cfg, k);
  });
  aggregate(t);
  return t;
}

Transcript verify_mb(const CRPDatabase& db, const Responder& responder, const ProtocolConfig& cfg) {
  cfg.validate();
  require(db.scheme() == Scheme::kMb, ErrorKind::kValidation, "verify_mb: database is not MB");
  require(db.size() >= cfg.records(), ErrorKind::kValidation, "verify_mb: database has too few records");
  Transcript t;
  t.scheme = Scheme::kMb;
  t.config = cfg;
  t.responder = responder.name();
  t.trials.resize(cfg.records());
  const bool shortcut = db.is_lazy() || cfg.challenge_mode == ChallengeMode::kShortcut;
  parallel_for(cfg.records(), [&](std::size_t k) {
    TrialRecord& rec = t.trials[k];
    rec.round = k / cfg.trials_per_round;
    rec.trial = k % cfg.trials_per_round;
    rec.challenge_id = k;
    std::size_t m = 0;
    std::optional<QuantumState> reference;
    if (shortcut) {
      Rng rng = make_rng(cfg.seed, "mb-shortcut", k);
      m = std::uniform_int_distribution<std::size_t>(0, cfg.dim - 1)(rng);
      reference = apply(db.mb_source(), QuantumState::basis(cfg.dim, m));
    } else {
      MeasurementOutcome out = measure_subsystem_C(db.choi_state(k), derive_seed(cfg.seed, "mb-measure", k));
      m = out.outcome;
      reference.emplace(std::move(out.post_state));
    }
    rec.outcome = m;
    score_trial(rec, *reference, responder.respond_mb(m, k), cfg, k);
  });
  aggregate(t);
  return t;
}

Transcript run_protocol(Scheme scheme, const EvolutionOperator& qpuf, const Responder& responder,
                        const ProtocolConfig& cfg) {
  if (scheme == Scheme::kSelective) return verify_selective(enroll_selective(qpuf, cfg), responder, cfg);
  return verify_mb(enroll_mb(qpuf, cfg), responder, cfg);
}

double resource_estimate(double p) {
  require(p > 0.0 && p < 1.0, ErrorKind::kDomain, "resource_estimate: p must lie in (0, 1)");
  return -std::log2(p);
}

ResourceEstimate resource_budget(double p) {
  ResourceEstimate r;
  r.probability = p;
  r.qubits = resource_estimate(p);
  r.even_split_bits = -std::log2(p / 2.0);
  return r;
}

std::vector<ResourceEstimate> resource_sweep(double p_min, std::size_t points) {
  require(p_min > 0.0 && p_min < 1.0, ErrorKind::kDomain, "resource_sweep: p_min must lie in (0, 1)");
  require(points >= 1, ErrorKind::kValidation, "resource_sweep: need at least one point");
  std::vector<ResourceEstimate> out;
  out.reserve(points);
  const double log_min = std::log(p_min);
  for (std::size_t k = 0; k < points; ++k) {
    const double frac = 1.0 - static_cast<double>(k) / static_cast<double>(points);
    out.push_back(resource_budget(std::exp(log_min * frac)));
  }
  return out;
}

}  // namespace qpuf
