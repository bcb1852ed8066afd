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
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "qpuf/linalg.hpp"

namespace qpuf {

/// Split of a bipartite space as dim_c * dim_r; C is the leading tensor factor.
struct Factorization {
  std::size_t dim_c = 0;
  std::size_t dim_r = 0;
  bool operator==(const Factorization&) const = default;
};

/// A pure vector or a density operator, validated on construction.
class QuantumState {
 public:
  enum class Form { kPure, kDensity };

  static QuantumState pure(CVector amplitudes, std::optional<Factorization> f = std::nullopt);
  static QuantumState density(CMatrix rho, std::optional<Factorization> f = std::nullopt);
  static QuantumState basis(std::size_t dim, std::size_t index);
  static QuantumState maximally_mixed(std::size_t dim);

  std::size_t dim() const;
  Form form() const { return std::holds_alternative<CVector>(data_) ? Form::kPure : Form::kDensity; }
  bool is_pure() const { return form() == Form::kPure; }
  const std::optional<Factorization>& factorization() const { return factorization_; }

  /// Requires a pure state.
  const CVector& vector() const;
  /// Requires a density state.
  const CMatrix& density_matrix() const;
  /// |psi><psi| for pure states, the matrix itself otherwise.
  CMatrix to_density() const;

  /// 64-bit FNV-1a over the raw amplitudes, as 16 hex digits.
  std::string digest() const;

 private:
  QuantumState(std::variant<CVector, CMatrix> data, std::optional<Factorization> f);

  std::variant<CVector, CMatrix> data_;
  std::optional<Factorization> factorization_;
};

struct MeasurementOutcome {
  std::size_t outcome = 0;
  QuantumState post_state;
  double probability = 0.0;
};

/// (1/sqrt(D)) sum_i |i>|i> with factorization (D, D).
QuantumState max_entangled(std::size_t dim);

/// Haar-random pure state of dimension `dim`.
QuantumState random_pure_state(std::size_t dim, std::uint64_t seed);

/// Born probabilities of a computational-basis measurement on the C factor.
std::vector<double> outcome_probabilities_C(const QuantumState& state);

/// Samples m with the Born rule and returns the normalized residual R state.
MeasurementOutcome measure_subsystem_C(const QuantumState& state, std::uint64_t seed);

/// Tr_C and Tr_R of a factorized state.
CMatrix reduced_state_C(const QuantumState& state);
CMatrix reduced_state_R(const QuantumState& state);

/// Tr(rho_a rho_b); |<a|b>|^2 when both are pure.
double overlap(const QuantumState& a, const QuantumState& b);

enum class SwapRule {
  kPhysical,  // 1/2 + Tr(rho sigma) / 2
  kSquared,   // 1/2 + |Tr(rho sigma)|^2 / 2
};

double swap_test_exact(const QuantumState& a, const QuantumState& b, SwapRule rule = SwapRule::kPhysical);

/// One Bernoulli draw at the exact acceptance probability.
bool swap_test_sampled(const QuantumState& a, const QuantumState& b, std::uint64_t seed,
                       SwapRule rule = SwapRule::kPhysical);

}  // namespace qpuf
