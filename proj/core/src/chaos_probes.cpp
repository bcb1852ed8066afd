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

#include "qpuf/chaos_probes.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qpuf/error.hpp"
#include "qpuf/random.hpp"
#include "qpuf/spectral_stats.hpp"

namespace qpuf {

namespace {

CMatrix pauli_matrix(char p) {
  CMatrix m(2, 2);
  switch (p) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: fail(ErrorKind::kValidation, std::string("pauli_string: bad character '") + p + "'");
  }
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

void check_cut(Bipartition cut, std::size_t dim) {
  require(cut.dim_a >= 1 && cut.dim_b >= 1 && cut.dim_a * cut.dim_b == dim, ErrorKind::kValidation,
          "invalid bipartition: dims must multiply to D");
}

void check_operator(const CMatrix& op, std::size_t dim, const char* what) {
  require(static_cast<std::size_t>(op.rows()) == dim && op.rows() == op.cols(), ErrorKind::kDimensionMismatch,
          std::string(what) + ": operator dimension mismatch");
}

UnitaryOperator unitary_at(const EigenSystem& es, double t) {
  CVector phases(es.dim());
  for (std::size_t p = 0; p < es.dim(); ++p) phases(p) = std::polar(1.0, -es.eigenvalues[p] * t);
  return UnitaryOperator(es.eigenvectors * phases.asDiagonal() * es.eigenvectors.adjoint(),
                         UnitaryProvenance::kEvolution);
}

double otoc_from_heisenberg(const CMatrix& o1t, const CMatrix& o2) {
  const double d = static_cast<double>(o1t.rows());
  const CMatrix a = o1t * o2;
  const Complex value = (a * a).trace() / d;
  require(std::abs(value.imag()) < 1e-9, ErrorKind::kValidation,
          "otoc4: imaginary part too large; probe operators must be Hermitian and unitary");
  return value.real();
}

double purity_to_entropy(double purity) { return -std::log(purity); }

}  // namespace

CMatrix pauli_string(std::string_view paulis) {
  require(!paulis.empty(), ErrorKind::kValidation, "pauli_string: empty string");
  CMatrix out = pauli_matrix(paulis[0]);
  for (std::size_t i = 1; i < paulis.size(); ++i) out = kron(out, pauli_matrix(paulis[i]));
  return out;
}

CMatrix single_site_pauli(char pauli, int site, int qubits) {
  require(site >= 0 && site < qubits, ErrorKind::kValidation, "single_site_pauli: site out of range");
  std::string s(static_cast<std::size_t>(qubits), 'I');
  s[static_cast<std::size_t>(site)] = pauli;
  return pauli_string(s);
}

double otoc4(const UnitaryOperator& u, const CMatrix& o1, const CMatrix& o2) {
  check_operator(o1, u.dim(), "otoc4");
  check_operator(o2, u.dim(), "otoc4");
  const CMatrix& m = u.entries();
  return otoc_from_heisenberg(m.adjoint() * o1 * m, o2);
}

double otoc4(const EvolutionOperator& u, const CMatrix& o1, const CMatrix& o2) {
  check_operator(o1, u.dim(), "otoc4");
  check_operator(o2, u.dim(), "otoc4");
  const EigenSystem& es = u.eigensystem();
  const CMatrix& v = es.eigenvectors;
  CMatrix a = v.adjoint() * o1 * v;
  const CMatrix b = v.adjoint() * o2 * v;
  const double t = u.time();
  for (Eigen::Index p = 0; p < a.rows(); ++p)
    for (Eigen::Index q = 0; q < a.cols(); ++q)
      a(p, q) *= std::polar(1.0, (es.eigenvalues[p] - es.eigenvalues[q]) * t);
  return otoc_from_heisenberg(a, b);
}

double renyi2_entropy(const UnitaryOperator& u, const QuantumState& rho0, Bipartition cut) {
  require(rho0.dim() == u.dim(), ErrorKind::kDimensionMismatch, "renyi2_entropy: state dimension mismatch");
  check_cut(cut, u.dim());
  const CMatrix& m = u.entries();
  CMatrix reduced = CMatrix::Zero(cut.dim_a, cut.dim_a);
  if (rho0.is_pure()) {
    const CVector psi = m * rho0.vector();
    CMatrix coeffs(cut.dim_a, cut.dim_b);
    for (std::size_t a = 0; a < cut.dim_a; ++a)
      for (std::size_t b = 0; b < cut.dim_b; ++b) coeffs(a, b) = psi(a * cut.dim_b + b);
    reduced = coeffs * coeffs.adjoint();
  } else {
    const CMatrix rho = m * rho0.density_matrix() * m.adjoint();
    for (std::size_t a = 0; a < cut.dim_a; ++a)
      for (std::size_t a2 = 0; a2 < cut.dim_a; ++a2)
        for (std::size_t b = 0; b < cut.dim_b; ++b) reduced(a, a2) += rho(a * cut.dim_b + b, a2 * cut.dim_b + b);
  }
  return purity_to_entropy(reduced.squaredNorm());
}

double renyi2_entropy(const EvolutionOperator& u, const QuantumState& rho0, Bipartition cut) {
  return renyi2_entropy(u.unitary(), rho0, cut);
}

double operator_entanglement(const CMatrix& op, Bipartition cut) {
  require(op.rows() == op.cols(), ErrorKind::kDimensionMismatch, "operator_entanglement: operator must be square");
  check_cut(cut, static_cast<std::size_t>(op.rows()));
  const double norm = op.norm();
  require(norm > 1e-14, ErrorKind::kValidation, "operator_entanglement: zero operator");
  const std::size_t da = cut.dim_a, db = cut.dim_b;
  CMatrix reshaped(da * da, db * db);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ib = 0; ib < db; ++ib)
      for (std::size_t ja = 0; ja < da; ++ja)
        for (std::size_t jb = 0; jb < db; ++jb)
          reshaped(ia * da + ja, ib * db + jb) = op(ia * db + ib, ja * db + jb) / norm;
  const CMatrix reduced = reshaped * reshaped.adjoint();
  return purity_to_entropy(reduced.squaredNorm());
}

double operator_entanglement(const UnitaryOperator& u, const CMatrix& o1, Bipartition cut) {
  check_operator(o1, u.dim(), "operator_entanglement");
  const CMatrix& m = u.entries();
  return operator_entanglement(CMatrix(m.adjoint() * o1 * m), cut);
}

double operator_entanglement(const EvolutionOperator& u, const CMatrix& o1, Bipartition cut) {
  return operator_entanglement(u.unitary(), o1, cut);
}

double stabilizer_entropy(const QuantumState& state, int alpha, int max_qubits) {
  require(state.is_pure(), ErrorKind::kValidation, "stabilizer_entropy: state must be pure");
  require(alpha >= 2, ErrorKind::kValidation, "stabilizer_entropy: alpha must be an integer >= 2");
  const std::size_t dim = state.dim();
  require(is_power_of_two(dim) && dim >= 2, ErrorKind::kUnsupportedDimension,
          "stabilizer_entropy: D must be a power of 2");
  const int n = log2_exact(dim);
  require(n <= max_qubits, ErrorKind::kResourceLimit, "stabilizer_entropy: qubit count over budget");
  const CVector& psi = state.vector();
  static constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  std::vector<Complex> products(dim);
  double total = 0.0;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t b = 0; b < dim; ++b) products[b] = std::conj(psi(b ^ x)) * psi(b);
    for (std::size_t z = 0; z < dim; ++z) {
      Complex acc = 0.0;
      for (std::size_t b = 0; b < dim; ++b)
        acc += (std::popcount(b & z) % 2 == 0) ? products[b] : -products[b];
      const double expectation = (kIPowers[std::popcount(x & z) % 4] * acc).real();
      total += std::pow(expectation, 2 * alpha);
    }
  }
  return std::log(total / static_cast<double>(dim)) / (1.0 - alpha);
}

double stabilizer_entropy(const UnitaryOperator& u, const QuantumState& rho0, int alpha, int max_qubits) {
  require(rho0.dim() == u.dim(), ErrorKind::kDimensionMismatch, "stabilizer_entropy: state dimension mismatch");
  require(rho0.is_pure(), ErrorKind::kValidation, "stabilizer_entropy: rho0 must be pure");
  CVector psi = u.entries() * rho0.vector();
  psi.normalize();
  return stabilizer_entropy(QuantumState::pure(std::move(psi)), alpha, max_qubits);
}

double stabilizer_entropy(const EvolutionOperator& u, const QuantumState& rho0, int alpha, int max_qubits) {
  require(rho0.is_pure(), ErrorKind::kValidation, "stabilizer_entropy: rho0 must be pure");
  CVector psi = u.apply_to(rho0.vector());
  psi.normalize();
  return stabilizer_entropy(QuantumState::pure(std::move(psi)), alpha, max_qubits);
}

std::string_view to_string(Probe p) {
  switch (p) {
    case Probe::kOtoc4: return "OTOC4";
    case Probe::kRenyi2: return "RENYI2";
    case Probe::kLoe: return "LOE";
    case Probe::kStabilizerEntropy: return "STAB_ENTROPY";
    case Probe::kSff: return "SFF";
  }
  return "SFF";
}

Probe probe_from_string(std::string_view s) {
  if (s == "otoc" || s == "otoc4" || s == "OTOC4") return Probe::kOtoc4;
  if (s == "renyi2" || s == "RENYI2") return Probe::kRenyi2;
  if (s == "loe" || s == "LOE") return Probe::kLoe;
  if (s == "stab" || s == "stabilizer" || s == "STAB_ENTROPY") return Probe::kStabilizerEntropy;
  if (s == "sff" || s == "SFF") return Probe::kSff;
  fail(ErrorKind::kValidation, "unknown probe '" + std::string(s) + "'");
}

ProbeDescriptors resolve_descriptors(const ProbeConfig& cfg, std::size_t dim) {
  require(is_power_of_two(dim) && dim >= 4, ErrorKind::kUnsupportedDimension,
          "probes: D must be a power of 2 with at least 2 qubits");
  const int n = log2_exact(dim);
  ProbeDescriptors d;
  d.o1 = cfg.o1.empty() ? std::string(static_cast<std::size_t>(n), 'I').replace(0, 1, "X") : cfg.o1;
  d.o2 = cfg.o2.empty() ? std::string(static_cast<std::size_t>(n), 'I').replace(1, 1, "Z") : cfg.o2;
  require(d.o1.size() == static_cast<std::size_t>(n) && d.o2.size() == static_cast<std::size_t>(n),
          ErrorKind::kDimensionMismatch, "probes: Pauli string length must equal the qubit count");
  d.cut.dim_a = cfg.dim_a == 0 ? (std::size_t{1} << (n / 2)) : cfg.dim_a;
  require(d.cut.dim_a >= 1 && dim % d.cut.dim_a == 0, ErrorKind::kValidation, "probes: dim_a must divide D");
  d.cut.dim_b = dim / d.cut.dim_a;
  require(cfg.initial_basis_state < dim, ErrorKind::kValidation, "probes: initial basis state out of range");
  d.initial_basis_state = cfg.initial_basis_state;
  d.alpha = cfg.alpha;
  return d;
}

double evaluate_probe(Probe probe, const UnitaryOperator& u, const ProbeDescriptors& d) {
  switch (probe) {
    case Probe::kOtoc4: return otoc4(u, pauli_string(d.o1), pauli_string(d.o2));
    case Probe::kRenyi2: return renyi2_entropy(u, QuantumState::basis(u.dim(), d.initial_basis_state), d.cut);
    case Probe::kLoe: return operator_entanglement(u, pauli_string(d.o1), d.cut);
    case Probe::kStabilizerEntropy:
      return stabilizer_entropy(u, QuantumState::basis(u.dim(), d.initial_basis_state), d.alpha);
    case Probe::kSff: return std::norm(u.entries().trace());
  }
  return 0.0;
}

ProbeReport run_probe(const EnsembleConfig& ensemble, Probe probe, const ProbeConfig& cfg) {
  require(!cfg.times.empty(), ErrorKind::kValidation, "run_probe: no times");
  require(cfg.samples >= 2, ErrorKind::kValidation, "run_probe: need at least 2 samples");
  for (double t : cfg.times) require(t >= 0.0, ErrorKind::kValidation, "run_probe: times must be >= 0");
  const std::size_t dim = ensemble.hilbert_dim();
  ProbeReport report;
  report.probe = probe;
  report.ensemble = ensemble.kind;
  report.dim = dim;
  report.samples = cfg.samples;
  report.times = cfg.times;
  report.descriptors = resolve_descriptors(cfg, dim);
  const CMatrix o1 = pauli_string(report.descriptors.o1);
  const CMatrix o2 = pauli_string(report.descriptors.o2);

  std::vector<std::vector<double>> values(cfg.samples, std::vector<double>(cfg.times.size()));
  parallel_for(cfg.samples, [&](std::size_t i) {
    const HermitianOperator h = sample_hamiltonian(ensemble, cfg.seed, i);
    const auto es = std::make_shared<const EigenSystem>(diagonalize(h));
    for (std::size_t k = 0; k < cfg.times.size(); ++k) {
      const double t = cfg.times[k];
      double v = 0.0;
      if (probe == Probe::kSff) {
        v = spectral::sff_single(es->eigenvalues, t);
      } else if (probe == Probe::kOtoc4) {
        v = otoc4(EvolutionOperator(es, t), o1, o2);
      } else {
        v = evaluate_probe(probe, unitary_at(*es, t), report.descriptors);
      }
      values[i][k] = v;
    }
  });

  std::vector<double> column(cfg.samples), averages(cfg.samples, 0.0);
  for (std::size_t k = 0; k < cfg.times.size(); ++k) {
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      column[i] = values[i][k];
      averages[i] += values[i][k] / static_cast<double>(cfg.times.size());
    }
    const auto est = stats::estimate(column);
    report.values.push_back(est.mean);
    report.std_error.push_back(est.std_error);
  }
  report.window = stats::estimate(averages);
  return report;
}

ContrastReport probe_contrast(const EnsembleConfig& a, const EnsembleConfig& b, Probe probe,
                              const ProbeConfig& cfg) {
  require(a.hilbert_dim() == b.hilbert_dim(), ErrorKind::kDimensionMismatch,
          "probe_contrast: ensembles must share the Hilbert dimension");
  ProbeConfig ca = cfg, cb = cfg;
  ca.seed = derive_seed(cfg.seed, "contrast-a");
  cb.seed = derive_seed(cfg.seed, "contrast-b");
  ContrastReport r;
  r.probe = probe;
  r.a = run_probe(a, probe, ca);
  r.b = run_probe(b, probe, cb);
  r.gap = r.a.window.mean - r.b.window.mean;
  r.gap_std_error = std::hypot(r.a.window.std_error, r.b.window.std_error);
  r.gap_factor = r.b.window.mean != 0.0 ? r.a.window.mean / r.b.window.mean : 0.0;
  return r;
}

}  // namespace qpuf
