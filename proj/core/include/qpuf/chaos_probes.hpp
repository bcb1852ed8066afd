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
#include <string>
#include <string_view>
#include <vector>

#include "qpuf/dynamics.hpp"
#include "qpuf/quantum_state.hpp"
#include "qpuf/rmt_ensembles.hpp"
#include "qpuf/stats.hpp"

namespace qpuf {

/// Dense matrix for a Pauli string such as "XIZY"; character 0 is qubit 0,
/// the most significant index bit.
CMatrix pauli_string(std::string_view paulis);

/// Single-site Pauli on `site` of an n-qubit register.
CMatrix single_site_pauli(char pauli, int site, int qubits);

/// Leading A factor of dimension dim_a, trailing B factor of dimension dim_b.
struct Bipartition {
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;
};

/// (1/D) tr[O1(t) O2 O1(t) O2] with O1(t) = U^dagger O1 U.
double otoc4(const UnitaryOperator& u, const CMatrix& o1, const CMatrix& o2);
/// Same quantity evaluated in the eigenbasis of H.
double otoc4(const EvolutionOperator& u, const CMatrix& o1, const CMatrix& o2);

/// -log tr_A[(tr_B U rho0 U^dagger)^2], natural log.
double renyi2_entropy(const UnitaryOperator& u, const QuantumState& rho0, Bipartition cut);
double renyi2_entropy(const EvolutionOperator& u, const QuantumState& rho0, Bipartition cut);

/// 2-Renyi entropy of the normalized vectorized O1(t) across (A A' | B B').
double operator_entanglement(const UnitaryOperator& u, const CMatrix& o1, Bipartition cut);
double operator_entanglement(const EvolutionOperator& u, const CMatrix& o1, Bipartition cut);
double operator_entanglement(const CMatrix& op, Bipartition cut);

inline constexpr int kDefaultMaxStabilizerQubits = 6;

/// (1/(1-alpha)) log (1/D) sum_P tr^{2 alpha}(P psi), psi = U rho0 U^dagger pure.
double stabilizer_entropy(const UnitaryOperator& u, const QuantumState& rho0, int alpha,
                          int max_qubits = kDefaultMaxStabilizerQubits);
double stabilizer_entropy(const EvolutionOperator& u, const QuantumState& rho0, int alpha,
                          int max_qubits = kDefaultMaxStabilizerQubits);
double stabilizer_entropy(const QuantumState& state, int alpha, int max_qubits = kDefaultMaxStabilizerQubits);

enum class Probe { kOtoc4, kRenyi2, kLoe, kStabilizerEntropy, kSff };

std::string_view to_string(Probe p);
Probe probe_from_string(std::string_view s);

/// Late-time window in units where the GUE bandwidth is 4.
inline constexpr double kLateTimeBegin = 20.0;
inline constexpr double kLateTimeEnd = 40.0;

struct ProbeConfig {
  std::vector<double> times;
  std::size_t samples = 20;
  std::uint64_t seed = 0;
  std::string o1 = "";  // empty: X on qubit 0
  std::string o2 = "";  // empty: Z on qubit 1
  std::size_t dim_a = 0;  // 0: half the qubits (rounded down)
  std::size_t initial_basis_state = 0;
  int alpha = 2;
};

/// Resolved operator/state descriptors recorded in every report.
struct ProbeDescriptors {
  std::string o1;
  std::string o2;
  Bipartition cut;
  std::size_t initial_basis_state = 0;
  int alpha = 2;
};

struct ProbeReport {
  Probe probe = Probe::kOtoc4;
  Ensemble ensemble = Ensemble::kGue;
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> std_error;
  /// Per-member time averages over `times` reduced across members.
  stats::Estimate window;
  ProbeDescriptors descriptors;
};

ProbeDescriptors resolve_descriptors(const ProbeConfig& cfg, std::size_t dim);

/// Evaluates `probe` for one unitary (use for Haar substitutes and tests).
double evaluate_probe(Probe probe, const UnitaryOperator& u, const ProbeDescriptors& d);

ProbeReport run_probe(const EnsembleConfig& ensemble, Probe probe, const ProbeConfig& cfg);

struct ContrastReport {
  Probe probe = Probe::kSff;
  ProbeReport a;
  ProbeReport b;
  double gap = 0.0;         // window mean a - window mean b
  double gap_std_error = 0.0;
  double gap_factor = 0.0;  // window mean a / window mean b
};

/// Runs one probe over two equal-dimension ensembles with shared times and
/// sample counts but independent streams.
ContrastReport probe_contrast(const EnsembleConfig& a, const EnsembleConfig& b, Probe probe,
                              const ProbeConfig& cfg);

}  // namespace qpuf
