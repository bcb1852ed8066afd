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

#include "qpuf/rmt_ensembles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qpuf/error.hpp"
#include "qpuf/random.hpp"

namespace qpuf {

std::string_view to_string(Ensemble e) {
  switch (e) {
    case Ensemble::kGue: return "GUE";
    case Ensemble::kSyk: return "SYK";
    case Ensemble::kPseudoChaotic: return "PSEUDO_CHAOTIC";
    case Ensemble::kExplicit: return "EXPLICIT";
  }
  return "EXPLICIT";
}

std::string_view to_string(UnitaryProvenance p) {
  switch (p) {
    case UnitaryProvenance::kHaar: return "HAAR";
    case UnitaryProvenance::kDesignCircuit: return "DESIGN_CIRCUIT";
    case UnitaryProvenance::kEvolution: return "EVOLUTION";
    case UnitaryProvenance::kExplicit: return "EXPLICIT";
  }
  return "EXPLICIT";
}

Ensemble ensemble_from_string(std::string_view s) {
  if (s == "GUE" || s == "gue") return Ensemble::kGue;
  if (s == "SYK" || s == "syk") return Ensemble::kSyk;
  if (s == "PSEUDO_CHAOTIC" || s == "pseudo" || s == "pseudo-chaotic") return Ensemble::kPseudoChaotic;
  if (s == "EXPLICIT" || s == "explicit") return Ensemble::kExplicit;
  fail(ErrorKind::kValidation, "unknown ensemble '" + std::string(s) + "'");
}

UnitaryProvenance provenance_from_string(std::string_view s) {
  if (s == "HAAR") return UnitaryProvenance::kHaar;
  if (s == "DESIGN_CIRCUIT") return UnitaryProvenance::kDesignCircuit;
  if (s == "EVOLUTION") return UnitaryProvenance::kEvolution;
  if (s == "EXPLICIT") return UnitaryProvenance::kExplicit;
  fail(ErrorKind::kValidation, "unknown unitary provenance '" + std::string(s) + "'");
}

HermitianOperator::HermitianOperator(CMatrix entries, Ensemble ensemble, std::uint64_t seed)
    : entries_(std::move(entries)), ensemble_(ensemble), seed_(seed) {
  require(entries_.rows() == entries_.cols(), ErrorKind::kInvalidDimension,
          "HermitianOperator: matrix is not square");
  require(entries_.rows() >= 2, ErrorKind::kInvalidDimension, "HermitianOperator: dim must be >= 2");
  require(hermiticity_residual(entries_) <= 1e-12, ErrorKind::kValidation,
          "HermitianOperator: matrix is not Hermitian");
}

void HermitianOperator::set_planted_spectrum(std::vector<double> spectrum) {
  require(spectrum.size() == dim(), ErrorKind::kDimensionMismatch,
          "planted spectrum size must equal dim");
  std::sort(spectrum.begin(), spectrum.end());
  planted_spectrum_ = std::move(spectrum);
}

UnitaryOperator::UnitaryOperator(CMatrix entries, UnitaryProvenance provenance)
    : entries_(std::move(entries)), provenance_(provenance) {
  require(entries_.rows() == entries_.cols() && entries_.rows() >= 1, ErrorKind::kInvalidDimension,
          "UnitaryOperator: matrix must be square and non-empty");
  require(unitarity_residual(entries_) <= 1e-10 * static_cast<double>(entries_.rows()),
          ErrorKind::kValidation, "UnitaryOperator: matrix is not unitary");
}

UnitaryOperator UnitaryOperator::adjoint() const {
  return UnitaryOperator(entries_.adjoint(), provenance_);
}

UnitaryOperator UnitaryOperator::operator*(const UnitaryOperator& rhs) const {
  require(dim() == rhs.dim(), ErrorKind::kDimensionMismatch, "UnitaryOperator product: dims differ");
  return UnitaryOperator(entries_ * rhs.entries_, UnitaryProvenance::kExplicit);
}

HermitianOperator sample_gue(std::size_t dim, std::uint64_t seed) {
  require(dim >= 2, ErrorKind::kInvalidDimension, "sample_gue: dim must be >= 2");
  Rng rng = make_rng(seed, "gue");
  const double d = static_cast<double>(dim);
  const double diag_sigma = std::sqrt(1.0 / d);
  CMatrix h(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    h(i, i) = diag_sigma * standard_normal(rng);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Complex z = complex_normal(rng, 1.0 / d);
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return HermitianOperator(std::move(h), Ensemble::kGue, seed);
}

namespace {

CMatrix haar_matrix(std::size_t dim, Rng& rng) {
  CMatrix g(dim, dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t i = 0; i < dim; ++i) g(i, j) = complex_normal(rng, 1.0);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix& r = qr.matrixQR();
  for (std::size_t j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    q.col(j) *= (mag > 0.0 ? rjj / mag : Complex(1.0, 0.0));
  }
  return q;
}

// Left-multiplies `w` by a 4x4 gate acting on qubits (q, q + 1).
void apply_two_qubit_gate(CMatrix& w, const CMatrix& gate, int q, int qubits) {
  const std::size_t hi = std::size_t{1} << (qubits - 1 - q);
  const std::size_t lo = std::size_t{1} << (qubits - 2 - q);
  const std::size_t dim = static_cast<std::size_t>(w.rows());
  Complex in[4];
  for (std::size_t base = 0; base < dim; ++base) {
    if ((base & hi) || (base & lo)) continue;
    const std::size_t idx[4] = {base, base | lo, base | hi, base | hi | lo};
    for (Eigen::Index col = 0; col < w.cols(); ++col) {
      for (int a = 0; a < 4; ++a) in[a] = w(idx[a], col);
      for (int a = 0; a < 4; ++a) {
        Complex acc = 0.0;
        for (int b = 0; b < 4; ++b) acc += gate(a, b) * in[b];
        w(idx[a], col) = acc;
      }
    }
  }
}

}  // namespace

UnitaryOperator sample_haar_unitary(std::size_t dim, std::uint64_t seed) {
  require(dim >= 1, ErrorKind::kInvalidDimension, "sample_haar_unitary: dim must be >= 1");
  Rng rng = make_rng(seed, "haar");
  return UnitaryOperator(haar_matrix(dim, rng), UnitaryProvenance::kHaar);
}

UnitaryOperator sample_design_unitary(std::size_t dim, int depth, std::uint64_t seed) {
  require(is_power_of_two(dim) && dim >= 4, ErrorKind::kUnsupportedDimension,
          "sample_design_unitary: dim must be a power of 2 with at least 2 qubits");
  require(depth >= 1, ErrorKind::kValidation, "sample_design_unitary: depth must be >= 1");
  const int qubits = log2_exact(dim);
  Rng rng = make_rng(seed, "design");
  CMatrix w = CMatrix::Identity(dim, dim);
  for (int layer = 0; layer < depth; ++layer) {
    for (int q = layer % 2; q + 1 < qubits; q += 2) {
      const CMatrix gate = haar_matrix(4, rng);
      apply_two_qubit_gate(w, gate, q, qubits);
    }
  }
  return UnitaryOperator(std::move(w), UnitaryProvenance::kDesignCircuit);
}

namespace {

// Mode i lives on bit (modes - 1 - i); Jordan-Wigner parity counts modes j < i.
struct FockAction {
  std::size_t state;
  int sign;
};

inline int parity_before(std::size_t state, int mode, int modes) {
  int occupied = 0;
  for (int j = 0; j < mode; ++j) occupied += static_cast<int>((state >> (modes - 1 - j)) & 1U);
  return (occupied % 2 == 0) ? 1 : -1;
}

inline bool annihilate(FockAction& a, int mode, int modes) {
  const std::size_t bit = std::size_t{1} << (modes - 1 - mode);
  if (!(a.state & bit)) return false;
  a.sign *= parity_before(a.state, mode, modes);
  a.state &= ~bit;
  return true;
}

inline bool create(FockAction& a, int mode, int modes) {
  const std::size_t bit = std::size_t{1} << (modes - 1 - mode);
  if (a.state & bit) return false;
  a.sign *= parity_before(a.state, mode, modes);
  a.state |= bit;
  return true;
}

}  // namespace

CMatrix fermion_annihilator(int mode, int modes) {
  require(modes >= 1 && mode >= 0 && mode < modes, ErrorKind::kValidation,
          "fermion_annihilator: mode out of range");
  CMatrix z(2, 2), lower(2, 2), id = CMatrix::Identity(2, 2);
  z << 1, 0, 0, -1;
  lower << 0, 1, 0, 0;  // (X + iY) / 2 = |0><1|
  CMatrix out = CMatrix::Identity(1, 1);
  for (int j = 0; j < modes; ++j) {
    const CMatrix& f = j < mode ? z : (j == mode ? lower : id);
    CMatrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * f;
    out = std::move(next);
  }
  return out;
}

CMatrix number_operator(int modes) {
  const std::size_t dim = std::size_t{1} << modes;
  CMatrix n = CMatrix::Zero(dim, dim);
  for (std::size_t s = 0; s < dim; ++s) n(s, s) = static_cast<double>(std::popcount(s));
  return n;
}

HermitianOperator sample_syk(const SykSpec& spec) {
  require(spec.modes >= 4, ErrorKind::kValidation, "sample_syk: need at least 4 modes");
  require(spec.coupling_scale >= 0.0, ErrorKind::kValidation, "sample_syk: J must be non-negative");
  require(spec.modes < 63 && (std::size_t{1} << spec.modes) <= spec.max_dim, ErrorKind::kResourceLimit,
          "sample_syk: 2^modes exceeds the configured maximum dimension");
  const int n = spec.modes;
  const std::size_t dim = std::size_t{1} << n;
  const double denom = spec.variance_rule == SykVarianceRule::kModesCubed
                           ? 2.0 * n * n * n
                           : 2.0 * 2.0 * 2.0 * 2.0;
  const double variance = spec.coupling_scale * spec.coupling_scale / denom;

  struct Term {
    int i, j, k, l;
    Complex coupling;
  };
  std::vector<Term> terms;
  Rng rng = make_rng(spec.seed, "syk");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < k; ++l) terms.push_back({i, j, k, l, complex_normal(rng, variance)});

  CMatrix quartic = CMatrix::Zero(dim, dim);
  if (spec.coupling_scale > 0.0) {
    for (std::size_t s = 0; s < dim; ++s) {
      for (const Term& t : terms) {
        FockAction a{s, 1};
        if (!annihilate(a, t.l, n) || !annihilate(a, t.k, n) || !create(a, t.j, n) ||
            !create(a, t.i, n))
          continue;
        quartic(a.state, s) += t.coupling * static_cast<double>(a.sign);
      }
    }
  }
  CMatrix h = quartic + quartic.adjoint();
  for (std::size_t s = 0; s < dim; ++s) h(s, s) -= spec.chemical_potential * std::popcount(s);
  return HermitianOperator(std::move(h), Ensemble::kSyk, spec.seed);
}

std::vector<double> semicircle_sample(std::size_t count, std::uint64_t seed) {
  Rng rng = make_rng(seed, "semicircle");
  std::uniform_real_distribution<double> xs(-2.0, 2.0);
  std::uniform_real_distribution<double> ys(0.0, 1.0 / kPi);
  std::vector<double> out;
  out.reserve(count);
  while (out.size() < count) {
    const double x = xs(rng);
    const double y = ys(rng);
    if (y <= std::sqrt(std::max(0.0, 4.0 - x * x)) / (2.0 * kPi)) out.push_back(x);
  }
  return out;
}

HermitianOperator build_pseudo_chaotic(const PseudoChaoticSpec& spec) {
  require(spec.distinct_eigenvalues >= 1, ErrorKind::kValidation,
          "build_pseudo_chaotic: need at least one distinct eigenvalue");
  require(spec.dim % spec.distinct_eigenvalues == 0, ErrorKind::kDivisibility,
          "build_pseudo_chaotic: distinct eigenvalue count must divide dim");
  require(is_power_of_two(spec.dim) && spec.dim >= 4, ErrorKind::kUnsupportedDimension,
          "build_pseudo_chaotic: dim must be a power of 2 (>= 4)");
  const int depth = spec.design_depth > 0 ? spec.design_depth : default_design_depth(spec.dim);
  const std::size_t multiplicity = spec.dim / spec.distinct_eigenvalues;

  const std::vector<double> values =
      semicircle_sample(spec.distinct_eigenvalues, derive_seed(spec.seed, "pseudo-spectrum"));
  std::vector<double> spectrum;
  spectrum.reserve(spec.dim);
  for (double v : values) spectrum.insert(spectrum.end(), multiplicity, v);

  const UnitaryOperator u =
      sample_design_unitary(spec.dim, depth, derive_seed(spec.seed, "pseudo-design"));
  RVector diag(spec.dim);
  for (std::size_t i = 0; i < spec.dim; ++i) diag(i) = spectrum[i];
  CMatrix h = u.entries() * diag.asDiagonal() * u.entries().adjoint();
  h = (0.5 * (h + h.adjoint())).eval();
  HermitianOperator out(std::move(h), Ensemble::kPseudoChaotic, spec.seed);
  out.set_planted_spectrum(std::move(spectrum));
  return out;
}

std::size_t EnsembleConfig::hilbert_dim() const {
  if (kind == Ensemble::kSyk) return std::size_t{1} << syk.modes;
  return dim;
}

HermitianOperator sample_hamiltonian(const EnsembleConfig& config, std::uint64_t seed,
                                     std::uint64_t index) {
  const std::uint64_t member_seed = derive_seed(seed, "ensemble-member", index);
  switch (config.kind) {
    case Ensemble::kGue:
      return sample_gue(config.dim, member_seed);
    case Ensemble::kSyk: {
      SykSpec spec = config.syk;
      spec.seed = member_seed;
      return sample_syk(spec);
    }
    case Ensemble::kPseudoChaotic:
      return build_pseudo_chaotic(
          {config.dim, config.distinct_eigenvalues, config.design_depth, member_seed});
    case Ensemble::kExplicit:
      break;
  }
  fail(ErrorKind::kValidation, "sample_hamiltonian: explicit ensembles cannot be sampled");
}

}  // namespace qpuf
