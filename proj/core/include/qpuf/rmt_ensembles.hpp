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
#include <string_view>
#include <vector>

#include "qpuf/linalg.hpp"

namespace qpuf {

enum class Ensemble { kGue, kSyk, kPseudoChaotic, kExplicit };
enum class UnitaryProvenance { kHaar, kDesignCircuit, kEvolution, kExplicit };

std::string_view to_string(Ensemble e);
std::string_view to_string(UnitaryProvenance p);
Ensemble ensemble_from_string(std::string_view s);
UnitaryProvenance provenance_from_string(std::string_view s);

/// Dense Hermitian matrix standing in for a Hamiltonian, tagged with how it was made.
class HermitianOperator {
 public:
  /// Validates Hermiticity (1e-12 per entry) and dim >= 2.
  HermitianOperator(CMatrix entries, Ensemble ensemble, std::uint64_t seed);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  Ensemble ensemble() const { return ensemble_; }
  std::uint64_t seed() const { return seed_; }

  /// Spectrum planted by build_pseudo_chaotic, sorted ascending; empty otherwise.
  const std::vector<double>& planted_spectrum() const { return planted_spectrum_; }
  void set_planted_spectrum(std::vector<double> spectrum);

 private:
  CMatrix entries_;
  Ensemble ensemble_;
  std::uint64_t seed_;
  std::vector<double> planted_spectrum_;
};

class UnitaryOperator {
 public:
  /// Validates ||U U^dagger - I||_F <= 1e-10 * D.
  UnitaryOperator(CMatrix entries, UnitaryProvenance provenance);

  std::size_t dim() const { return static_cast<std::size_t>(entries_.rows()); }
  const CMatrix& entries() const { return entries_; }
  UnitaryProvenance provenance() const { return provenance_; }

  UnitaryOperator adjoint() const;
  UnitaryOperator operator*(const UnitaryOperator& rhs) const;

 private:
  CMatrix entries_;
  UnitaryProvenance provenance_;
};

enum class SykVarianceRule {
  kDCubed,  // denominator 2 * (qudit dimension 2)^3
  kModesCubed,   // denominator 2 * n^3
};

struct SykSpec {
  int modes = 4;
  double chemical_potential = 0.0;
  double coupling_scale = 1.0;
  SykVarianceRule variance_rule = SykVarianceRule::kModesCubed;
  std::uint64_t seed = 0;
  std::size_t max_dim = kDefaultMaxDim;
};

struct PseudoChaoticSpec {
  std::size_t dim = 16;
  std::size_t distinct_eigenvalues = 2;
  int design_depth = 0;  // 0 selects the default 4 * log2(dim)
  std::uint64_t seed = 0;
};

/// GUE with density proportional to exp(-(D/2) Tr H^2): Var(H_ii) = 1/D and
/// Re/Im of off-diagonal entries each 1/(2D). Semicircle radius 2.
HermitianOperator sample_gue(std::size_t dim, std::uint64_t seed);

/// Haar unitary via QR of a Ginibre matrix with the R-diagonal phase fix.
UnitaryOperator sample_haar_unitary(std::size_t dim, std::uint64_t seed);

/// Brickwork circuit: `depth` layers of Haar two-qubit gates on alternating
/// neighbouring pairs, qubit 0 being the most significant index bit.
UnitaryOperator sample_design_unitary(std::size_t dim, int depth, std::uint64_t seed);

inline int default_design_depth(std::size_t dim) { return 4 * log2_exact(dim); }

/// Complex SYK: -mu N + A + A^dagger with A = sum_{i>j,k>l} J_ijkl c_i^+ c_j^+ c_k c_l.
HermitianOperator sample_syk(const SykSpec& spec);

/// U diag(spectrum) U^dagger with d semicircle values each repeated D/d times.
HermitianOperator build_pseudo_chaotic(const PseudoChaoticSpec& spec);

/// Rejection sampling from (1/2pi) sqrt(4 - E^2) on [-2, 2].
std::vector<double> semicircle_sample(std::size_t count, std::uint64_t seed);

/// Jordan-Wigner c_i on n modes, exposed for tests and probes.
CMatrix fermion_annihilator(int mode, int modes);

/// Total particle number sum_i c_i^+ c_i as a diagonal matrix.
CMatrix number_operator(int modes);

/// Recipe for drawing Hamiltonians from one of the supported ensembles.
struct EnsembleConfig {
  Ensemble kind = Ensemble::kGue;
  std::size_t dim = 16;  // ignored for SYK (2^modes)
  SykSpec syk{};
  std::size_t distinct_eigenvalues = 2;
  int design_depth = 0;

  std::size_t hilbert_dim() const;
};

/// Draws member `index` of the ensemble; the stream depends only on (seed, index).
HermitianOperator sample_hamiltonian(const EnsembleConfig& config, std::uint64_t seed,
                                     std::uint64_t index = 0);

}  // namespace qpuf
