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

#include <atomic>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "qpuf/quantum_state.hpp"
#include "qpuf/rmt_ensembles.hpp"
#include "qpuf/spectral_stats.hpp"

namespace qpuf {

/// Public default processing time: t = 10 D sits past the GUE Heisenberg time.
inline double default_evolution_time(std::size_t dim) { return 10.0 * static_cast<double>(dim); }

/// U(t) = V diag(exp(-i E_p t)) V^dagger backed by a shared eigensystem.
///
/// Copies share the eigensystem and the lazily built unitary; the unitary is
/// materialized at most once even under concurrent first access.
class EvolutionOperator {
 public:
  EvolutionOperator(std::shared_ptr<const EigenSystem> eigensystem, double time);

  std::size_t dim() const { return eigensystem_->dim(); }
  double time() const { return time_; }
  const EigenSystem& eigensystem() const { return *eigensystem_; }
  std::shared_ptr<const EigenSystem> shared_eigensystem() const { return eigensystem_; }

  /// exp(-i E_p t) for every eigenvalue.
  CVector phases() const;
  const UnitaryOperator& unitary() const;
  bool is_materialized() const;

  /// Same eigensystem at a different time, no re-diagonalization.
  EvolutionOperator at(double time) const;

  /// U|psi> without forming U: V (phases .* (V^dagger psi)).
  CVector apply_to(const CVector& psi) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<UnitaryOperator> unitary;
    std::atomic<bool> ready{false};
  };

  std::shared_ptr<const EigenSystem> eigensystem_;
  double time_;
  std::shared_ptr<Cache> cache_;
};

EvolutionOperator make_evolution(const HermitianOperator& h, double t);

/// Pure states map by U psi, densities by U rho U^dagger. Factorization metadata is kept.
QuantumState apply(const EvolutionOperator& u, const QuantumState& state);
QuantumState apply(const UnitaryOperator& u, const QuantumState& state);

/// (I (x) U) on a factorized state whose R factor has dim(U).
QuantumState apply_on_R(const UnitaryOperator& u, const QuantumState& state);

}  // namespace qpuf
