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

#include "qpuf/adversary.hpp"

#include <cmath>
#include <string>

#include "qpuf/error.hpp"
#include "qpuf/random.hpp"

namespace qpuf {

QueryDatabase build_query_db(const EvolutionOperator& qpuf, std::size_t q, std::uint64_t /*seed*/) {
  require(q < qpuf.dim(), ErrorKind::kQueryBudget, "build_query_db: query count must be < D");
  QueryDatabase db;
  db.pairs.reserve(q);
  for (std::size_t i = 0; i < q; ++i) {
    QuantumState in = QuantumState::basis(qpuf.dim(), i);
    QuantumState out = apply(qpuf, in);
    db.pairs.emplace_back(std::move(in), std::move(out));
  }
  return db;
}

QuantumState subspace_adversary_respond(const QueryDatabase& db, const QuantumState& challenge,
                                        std::uint64_t seed) {
  const std::size_t dim = challenge.dim();
  require(challenge.is_pure(), ErrorKind::kValidation, "subspace adversary: challenge must be pure");
  const CVector& psi = challenge.vector();

  // Orthonormalize inputs; apply the same triangular map to outputs so they stay paired.
  std::vector<CVector> ins, outs;
  for (const auto& [in, out] : db.pairs) {
    require(in.dim() == dim && out.dim() == dim, ErrorKind::kDimensionMismatch,
            "subspace adversary: query dimension mismatch");
    CVector a = in.vector();
    CVector b = out.vector();
    for (std::size_t j = 0; j < ins.size(); ++j) {
      const Complex c = ins[j].dot(a);
      a -= c * ins[j];
      b -= c * outs[j];
    }
    const double n = a.norm();
    if (n < 1e-12) continue;
    ins.push_back(a / n);
    outs.push_back(b / n);
  }

  CVector known = CVector::Zero(dim);
  CVector rest = psi;
  for (std::size_t j = 0; j < ins.size(); ++j) {
    const Complex c = ins[j].dot(psi);
    known += c * outs[j];
    rest -= c * ins[j];
  }
  const double rest_norm = rest.norm();
  CVector response = known;
  if (rest_norm > 1e-14) {
    Rng rng = make_rng(seed, "subspace-complement");
    CVector r(dim);
    for (std::size_t i = 0; i < dim; ++i) r(i) = complex_normal(rng, 1.0);
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& o : outs) r -= o.dot(r) * o;
    r.normalize();
    response += rest_norm * r;
  }
  response.normalize();
  return QuantumState::pure(std::move(response));
}

std::string AdversarySpec::label() const {
  switch (kind) {
    case Kind::kNone: return "none";
    case Kind::kRandomPure: return "random";
    case Kind::kMaxMixed: return "mixed";
    case Kind::kSubspace: return "subspace:" + std::to_string(queries);
    case Kind::kOracle: return "oracle";
  }
  return "none";
}

AdversarySpec parse_adversary(std::string_view text) {
  AdversarySpec spec;
  if (text == "none") spec.kind = AdversarySpec::Kind::kNone;
  else if (text == "random" || text == "random_pure") spec.kind = AdversarySpec::Kind::kRandomPure;
  else if (text == "mixed" || text == "max_mixed") spec.kind = AdversarySpec::Kind::kMaxMixed;
  else if (text == "oracle") spec.kind = AdversarySpec::Kind::kOracle;
  else if (text.starts_with("subspace:")) {
    spec.kind = AdversarySpec::Kind::kSubspace;
    const std::string count(text.substr(9));
    std::size_t used = 0;
    unsigned long long q = 0;
    try {
      q = std::stoull(count, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    require(!count.empty() && used == count.size(), ErrorKind::kValidation,
            "adversary: bad query count in '" + std::string(text) + "'");
    spec.queries = static_cast<std::size_t>(q);
  } else {
    fail(ErrorKind::kValidation, "adversary: unknown spec '" + std::string(text) + "'");
  }
  return spec;
}

namespace {

class NoResponse : public Responder {
 public:
  std::string name() const override { return "none"; }
  std::optional<QuantumState> respond_selective(const QuantumState&, std::size_t) const override {
    return std::nullopt;
  }
  std::optional<QuantumState> respond_mb(std::size_t, std::size_t) const override { return std::nullopt; }
};

class MaxMixedResponder : public Responder {
 public:
  explicit MaxMixedResponder(std::size_t dim) : state_(QuantumState::maximally_mixed(dim)) {}
  std::string name() const override { return "mixed"; }
  std::optional<QuantumState> respond_selective(const QuantumState&, std::size_t) const override { return state_; }
  std::optional<QuantumState> respond_mb(std::size_t, std::size_t) const override { return state_; }

 private:
  QuantumState state_;
};

class RandomPureResponder : public Responder {
 public:
  RandomPureResponder(std::size_t dim, std::uint64_t seed) : dim_(dim), seed_(seed) {}
  std::string name() const override { return "random"; }
  std::optional<QuantumState> respond_selective(const QuantumState&, std::size_t trial) const override {
    return random_pure_state(dim_, derive_seed(seed_, "random-adversary", trial));
  }
  std::optional<QuantumState> respond_mb(std::size_t, std::size_t trial) const override {
    return random_pure_state(dim_, derive_seed(seed_, "random-adversary", trial));
  }

 private:
  std::size_t dim_;
  std::uint64_t seed_;
};

class SubspaceResponder : public Responder {
 public:
  SubspaceResponder(QueryDatabase db, std::size_t dim, std::uint64_t seed)
      : db_(std::move(db)), dim_(dim), seed_(seed) {}
  std::string name() const override { return "subspace:" + std::to_string(db_.size()); }
  std::optional<QuantumState> respond_selective(const QuantumState& challenge, std::size_t trial) const override {
    return subspace_adversary_respond(db_, challenge, derive_seed(seed_, "subspace-trial", trial));
  }
  std::optional<QuantumState> respond_mb(std::size_t outcome, std::size_t trial) const override {
    return subspace_adversary_respond(db_, QuantumState::basis(dim_, outcome),
                                      derive_seed(seed_, "subspace-trial", trial));
  }

 private:
  QueryDatabase db_;
  std::size_t dim_;
  std::uint64_t seed_;
};

class OracleResponder : public HonestResponder {
 public:
  using HonestResponder::HonestResponder;
  std::string name() const override { return "oracle"; }
};

}  // namespace

std::unique_ptr<Responder> make_adversary(const AdversarySpec& spec, const EvolutionOperator& qpuf,
                                          std::uint64_t seed) {
  switch (spec.kind) {
    case AdversarySpec::Kind::kNone: return std::make_unique<NoResponse>();
    case AdversarySpec::Kind::kRandomPure: return std::make_unique<RandomPureResponder>(qpuf.dim(), seed);
    case AdversarySpec::Kind::kMaxMixed: return std::make_unique<MaxMixedResponder>(qpuf.dim());
    case AdversarySpec::Kind::kSubspace:
      require(spec.queries < qpuf.dim(), ErrorKind::kQueryBudget, "subspace adversary: q must be < D");
      return std::make_unique<SubspaceResponder>(
          build_query_db(qpuf, spec.queries, derive_seed(seed, "query-db")), qpuf.dim(), seed);
    case AdversarySpec::Kind::kOracle: return std::make_unique<OracleResponder>(qpuf);
  }
  fail(ErrorKind::kValidation, "make_adversary: unknown kind");
}

Theorem2Bound theorem2_bound(std::size_t dim, std::size_t q, std::size_t trials, std::optional<double> sff_value) {
  require(q + 1 < dim, ErrorKind::kQueryBudget, "theorem2_bound: need q < D - 1");
  require(trials >= 1, ErrorKind::kValidation, "theorem2_bound: M must be >= 1");
  Theorem2Bound b;
  b.reduced_dim = dim - q;
  const double dt = static_cast<double>(b.reduced_dim);
  const double s = sff_value.value_or(dt);
  b.per_trial_overlap = s / (dt * dt - 1.0) + dt / (dt * dt - 1.0);
  b.final_bound = std::ldexp(1.0, -static_cast<int>(trials)) + b.per_trial_overlap;
  return b;
}

ExperimentReport estimate_forging_probability(Scheme scheme, const EnsembleConfig& ensemble,
                                              const AdversarySpec& adversary, const ProtocolConfig& cfg,
                                              std::size_t mc_samples, std::uint64_t seed) {
  require(mc_samples >= 30, ErrorKind::kValidation, "estimate_forging_probability: need mc_samples >= 30");
  require(cfg.rounds == 1, ErrorKind::kValidation, "estimate_forging_probability: bound covers a single round");
  require(ensemble.hilbert_dim() == cfg.dim, ErrorKind::kDimensionMismatch,
          "estimate_forging_probability: ensemble and protocol dims differ");
  ProtocolConfig exact = cfg;
  exact.swap_mode = SwapMode::kExact;

  std::vector<double> values(mc_samples);
  parallel_for(mc_samples, [&](std::size_t s) {
    const HermitianOperator h = sample_hamiltonian(ensemble, derive_seed(seed, "forging-qpuf"), s);
    const EvolutionOperator qpuf = make_evolution(h, cfg.time);
    ProtocolConfig trial_cfg = exact;
    trial_cfg.seed = derive_seed(seed, "forging-protocol", s);
    const auto responder = make_adversary(adversary, qpuf, derive_seed(seed, "forging-adversary", s));
    values[s] = run_protocol(scheme, qpuf, *responder, trial_cfg).overall;
  });
  const stats::Estimate est = stats::estimate(values);
  const Theorem2Bound bound = theorem2_bound(cfg.dim, adversary.query_count(), cfg.trials_per_round);

  ExperimentReport r;
  r.scheme = scheme;
  r.ensemble = ensemble.kind;
  r.adversary = adversary.label();
  r.white_box = adversary.white_box();
  r.dim = cfg.dim;
  r.queries = adversary.query_count();
  r.trials = cfg.trials_per_round;
  r.mc_samples = mc_samples;
  r.time = cfg.time;
  r.mean = est.mean;
  r.std_error = est.std_error;
  r.bound = bound.final_bound;
  r.per_trial_bound = bound.per_trial_overlap;
  r.pass = est.mean <= bound.final_bound + 3.0 * est.std_error;
  r.seed = seed;
  return r;
}

namespace {

void check_unimodular(std::span<const Complex> lambda_diag, const QuantumState& rho, std::size_t k) {
  require(lambda_diag.size() == rho.dim(), ErrorKind::kDimensionMismatch,
          "weingarten: Lambda and rho dimensions differ");
  require(k < rho.dim(), ErrorKind::kValidation, "weingarten: basis index out of range");
  require(lambda_diag.size() >= 2, ErrorKind::kInvalidDimension, "weingarten: need D >= 2");
  for (const Complex& z : lambda_diag)
    require(std::abs(std::abs(z) - 1.0) <= 1e-10, ErrorKind::kDomain, "weingarten: Lambda entries must be unimodular");
}

}  // namespace

double weingarten_expectation(std::span<const Complex> lambda_diag, const QuantumState& rho, std::size_t k) {
  check_unimodular(lambda_diag, rho, k);
  const double d = static_cast<double>(lambda_diag.size());
  Complex trace = 0.0;
  for (const Complex& z : lambda_diag) trace += z;
  const double s = std::norm(trace);
  const double wg_id = 1.0 / (d * d - 1.0);
  const double wg_swap = -1.0 / (d * (d * d - 1.0));
  const double a = s * wg_id + d * wg_swap;
  const double b = d * wg_id + s * wg_swap;
  const double rho_kk = rho.is_pure() ? std::norm(rho.vector()(k)) : rho.density_matrix()(k, k).real();
  return a * rho_kk + b;
}

stats::Estimate weingarten_monte_carlo(std::span<const Complex> lambda_diag, const QuantumState& rho,
                                       std::size_t k, std::size_t samples, std::uint64_t seed) {
  check_unimodular(lambda_diag, rho, k);
  const std::size_t dim = lambda_diag.size();
  CVector lambda(dim);
  for (std::size_t i = 0; i < dim; ++i) lambda(i) = lambda_diag[i];
  const CMatrix r = rho.to_density();
  std::vector<double> values(samples);
  parallel_for(samples, [&](std::size_t s) {
    const UnitaryOperator v = sample_haar_unitary(dim, derive_seed(seed, "weingarten-mc", s));
    CVector x = v.entries().row(k).adjoint();  // V^dagger |k>
    x.array() *= lambda.array();
    const CVector y = v.entries() * x;         // V L V^dagger |k>
    values[s] = (y.adjoint() * r * y)(0).real();
  });
  return stats::estimate(values);
}

LeftInvarianceResult left_invariance_check(const EvolutionOperator& qpuf, const QuantumState& guess,
                                           std::size_t draws, std::uint64_t seed) {
  require(guess.dim() == qpuf.dim(), ErrorKind::kDimensionMismatch, "left_invariance_check: dims differ");
  std::vector<double> evolved(draws), direct(draws);
  const UnitaryOperator& u = qpuf.unitary();
  parallel_for(draws, [&](std::size_t i) {
    const UnitaryOperator a = sample_haar_unitary(qpuf.dim(), derive_seed(seed, "left-inv-evolved", i));
    const UnitaryOperator b = sample_haar_unitary(qpuf.dim(), derive_seed(seed, "left-inv-direct", i));
    CVector ea = u.entries() * a.entries().col(0);
    ea.normalize();
    CVector eb = b.entries().col(0);
    eb.normalize();
    evolved[i] = overlap(QuantumState::pure(std::move(ea)), guess);
    direct[i] = overlap(QuantumState::pure(std::move(eb)), guess);
  });
  LeftInvarianceResult r;
  r.evolved = stats::estimate(evolved);
  r.direct = stats::estimate(direct);
  r.ks = stats::ks_two_sample(std::move(evolved), std::move(direct));
  return r;
}

}  // namespace qpuf
