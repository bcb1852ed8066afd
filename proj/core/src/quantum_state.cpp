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

#include "qpuf/quantum_state.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

#include "qpuf/error.hpp"
#include "qpuf/random.hpp"

namespace qpuf {

namespace {

void check_factorization(const std::optional<Factorization>& f, std::size_t dim) {
  if (!f) return;
  require(f->dim_c >= 1 && f->dim_r >= 1 && f->dim_c * f->dim_r == dim, ErrorKind::kValidation,
          "QuantumState: factorization does not multiply to dim");
}

}  // namespace

QuantumState::QuantumState(std::variant<CVector, CMatrix> data, std::optional<Factorization> f)
    : data_(std::move(data)), factorization_(f) {}

QuantumState QuantumState::pure(CVector amplitudes, std::optional<Factorization> f) {
  require(amplitudes.size() >= 1, ErrorKind::kInvalidDimension, "QuantumState: empty vector");
  require(std::abs(amplitudes.norm() - 1.0) <= 1e-10, ErrorKind::kValidation,
          "QuantumState: pure state is not normalized");
  check_factorization(f, static_cast<std::size_t>(amplitudes.size()));
  return QuantumState(std::move(amplitudes), f);
}

QuantumState QuantumState::density(CMatrix rho, std::optional<Factorization> f) {
  require(rho.rows() == rho.cols() && rho.rows() >= 1, ErrorKind::kInvalidDimension,
          "QuantumState: density matrix must be square");
  require(hermiticity_residual(rho) <= 1e-10, ErrorKind::kValidation, "QuantumState: density not Hermitian");
  require(std::abs(rho.trace().real() - 1.0) <= 1e-10, ErrorKind::kValidation,
          "QuantumState: density trace is not 1");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(rho, Eigen::EigenvaluesOnly);
  require(solver.eigenvalues().minCoeff() >= -1e-9, ErrorKind::kValidation,
          "QuantumState: density has a negative eigenvalue");
  check_factorization(f, static_cast<std::size_t>(rho.rows()));
  return QuantumState(std::move(rho), f);
}

QuantumState QuantumState::basis(std::size_t dim, std::size_t index) {
  require(index < dim, ErrorKind::kValidation, "QuantumState::basis: index out of range");
  CVector v = CVector::Zero(dim);
  v(index) = 1.0;
  return pure(std::move(v));
}

QuantumState QuantumState::maximally_mixed(std::size_t dim) {
  require(dim >= 1, ErrorKind::kInvalidDimension, "QuantumState::maximally_mixed: dim must be >= 1");
  return density(CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

std::size_t QuantumState::dim() const {
  if (const auto* v = std::get_if<CVector>(&data_)) return static_cast<std::size_t>(v->size());
  return static_cast<std::size_t>(std::get<CMatrix>(data_).rows());
}

const CVector& QuantumState::vector() const {
  const auto* v = std::get_if<CVector>(&data_);
  require(v != nullptr, ErrorKind::kValidation, "QuantumState: not a pure state");
  return *v;
}

const CMatrix& QuantumState::density_matrix() const {
  const auto* m = std::get_if<CMatrix>(&data_);
  require(m != nullptr, ErrorKind::kValidation, "QuantumState: not a density state");
  return *m;
}

CMatrix QuantumState::to_density() const {
  if (const auto* v = std::get_if<CVector>(&data_)) return (*v) * v->adjoint();
  return std::get<CMatrix>(data_);
}

std::string QuantumState::digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](const Complex* data, Eigen::Index n) {
    const auto* bytes = reinterpret_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n) * sizeof(Complex); ++i) {
      h ^= bytes[i];
      h *= 0x100000001b3ULL;
    }
  };
  if (const auto* v = std::get_if<CVector>(&data_)) {
    feed(v->data(), v->size());
  } else {
    const auto& m = std::get<CMatrix>(data_);
    feed(m.data(), m.size());
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

QuantumState max_entangled(std::size_t dim) {
  require(dim >= 2, ErrorKind::kInvalidDimension, "max_entangled: dim must be >= 2");
  CVector v = CVector::Zero(dim * dim);
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t i = 0; i < dim; ++i) v(i * dim + i) = amp;
  return QuantumState::pure(std::move(v), Factorization{dim, dim});
}

QuantumState random_pure_state(std::size_t dim, std::uint64_t seed) {
  require(dim >= 1, ErrorKind::kInvalidDimension, "random_pure_state: dim must be >= 1");
  Rng rng = make_rng(seed, "random-pure");
  CVector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v(i) = complex_normal(rng, 1.0);
  v.normalize();
  return QuantumState::pure(std::move(v));
}

namespace {

const Factorization& require_factorization(const QuantumState& state) {
  require(state.factorization().has_value(), ErrorKind::kValidation,
          "bipartite operation on an unfactorized state");
  return *state.factorization();
}

}  // namespace

std::vector<double> outcome_probabilities_C(const QuantumState& state) {
  const auto& f = require_factorization(state);
  std::vector<double> probs(f.dim_c, 0.0);
  if (state.is_pure()) {
    const CVector& v = state.vector();
    for (std::size_t c = 0; c < f.dim_c; ++c) probs[c] = v.segment(c * f.dim_r, f.dim_r).squaredNorm();
  } else {
    const CMatrix& rho = state.density_matrix();
    for (std::size_t c = 0; c < f.dim_c; ++c)
      probs[c] = rho.block(c * f.dim_r, c * f.dim_r, f.dim_r, f.dim_r).trace().real();
  }
  return probs;
}

MeasurementOutcome measure_subsystem_C(const QuantumState& state, std::uint64_t seed) {
  const auto& f = require_factorization(state);
  const std::vector<double> probs = outcome_probabilities_C(state);
  Rng rng = make_rng(seed, "measure-c");
  const double u = uniform01(rng);
  std::size_t m = 0;
  double acc = 0.0;
  for (; m < probs.size(); ++m) {
    acc += probs[m];
    if (u < acc) break;
  }
  if (m == probs.size()) {
    // u landed in the rounding gap at the top; take the last positive outcome.
    m = probs.size() - 1;
    while (m > 0 && probs[m] <= 0.0) --m;
  }
  const double p = probs[m];
  if (state.is_pure()) {
    CVector post = state.vector().segment(m * f.dim_r, f.dim_r) / std::sqrt(p);
    post /= post.norm();
    return {m, QuantumState::pure(std::move(post)), p};
  }
  CMatrix post = state.density_matrix().block(m * f.dim_r, m * f.dim_r, f.dim_r, f.dim_r) / p;
  post /= post.trace().real();
  return {m, QuantumState::density(std::move(post)), p};
}

CMatrix reduced_state_R(const QuantumState& state) {
  const auto& f = require_factorization(state);
  const CMatrix rho = state.to_density();
  CMatrix out = CMatrix::Zero(f.dim_r, f.dim_r);
  for (std::size_t c = 0; c < f.dim_c; ++c) out += rho.block(c * f.dim_r, c * f.dim_r, f.dim_r, f.dim_r);
  return out;
}

CMatrix reduced_state_C(const QuantumState& state) {
  const auto& f = require_factorization(state);
  const CMatrix rho = state.to_density();
  CMatrix out(f.dim_c, f.dim_c);
  for (std::size_t a = 0; a < f.dim_c; ++a)
    for (std::size_t b = 0; b < f.dim_c; ++b)
      out(a, b) = rho.block(a * f.dim_r, b * f.dim_r, f.dim_r, f.dim_r).trace();
  return out;
}

double overlap(const QuantumState& a, const QuantumState& b) {
  require(a.dim() == b.dim(), ErrorKind::kDimensionMismatch, "overlap: dimension mismatch");
  if (a.is_pure() && b.is_pure()) return std::norm(a.vector().dot(b.vector()));
  if (a.is_pure()) return (a.vector().adjoint() * b.density_matrix() * a.vector())(0).real();
  if (b.is_pure()) return (b.vector().adjoint() * a.density_matrix() * b.vector())(0).real();
  return (a.density_matrix() * b.density_matrix()).trace().real();
}

double swap_test_exact(const QuantumState& a, const QuantumState& b, SwapRule rule) {
  const double ov = overlap(a, b);
  return rule == SwapRule::kPhysical ? 0.5 + 0.5 * ov : 0.5 + 0.5 * ov * ov;
}

bool swap_test_sampled(const QuantumState& a, const QuantumState& b, std::uint64_t seed, SwapRule rule) {
  const double p = swap_test_exact(a, b, rule);
  Rng rng = make_rng(seed, "swap-test");
  return uniform01(rng) < p;
}

}  // namespace qpuf
