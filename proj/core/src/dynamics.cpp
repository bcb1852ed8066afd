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

#include "qpuf/dynamics.hpp"

#include <cmath>

#include "qpuf/error.hpp"

namespace qpuf {

EvolutionOperator::EvolutionOperator(std::shared_ptr<const EigenSystem> eigensystem, double time)
    : eigensystem_(std::move(eigensystem)), time_(time), cache_(std::make_shared<Cache>()) {
  require(eigensystem_ != nullptr, ErrorKind::kValidation, "EvolutionOperator: null eigensystem");
  require(time >= 0.0 && std::isfinite(time), ErrorKind::kValidation, "EvolutionOperator: t must be >= 0");
}

CVector EvolutionOperator::phases() const {
  const auto& e = eigensystem_->eigenvalues;
  CVector out(e.size());
  for (std::size_t p = 0; p < e.size(); ++p) out(p) = std::polar(1.0, -e[p] * time_);
  return out;
}

const UnitaryOperator& EvolutionOperator::unitary() const {
  std::call_once(cache_->once, [this] {
    const CMatrix& v = eigensystem_->eigenvectors;
    cache_->unitary.emplace(v * phases().asDiagonal() * v.adjoint(), UnitaryProvenance::kEvolution);
    cache_->ready.store(true, std::memory_order_release);
  });
  return *cache_->unitary;
}

bool EvolutionOperator::is_materialized() const { return cache_->ready.load(std::memory_order_acquire); }

EvolutionOperator EvolutionOperator::at(double time) const { return EvolutionOperator(eigensystem_, time); }

CVector EvolutionOperator::apply_to(const CVector& psi) const {
  require(static_cast<std::size_t>(psi.size()) == dim(), ErrorKind::kDimensionMismatch,
          "EvolutionOperator::apply_to: dimension mismatch");
  const CMatrix& v = eigensystem_->eigenvectors;
  CVector coeffs = v.adjoint() * psi;
  coeffs.array() *= phases().array();
  return v * coeffs;
}

EvolutionOperator make_evolution(const HermitianOperator& h, double t) {
  require(t >= 0.0, ErrorKind::kValidation, "make_evolution: t must be >= 0");
  return EvolutionOperator(std::make_shared<const EigenSystem>(diagonalize(h)), t);
}

namespace {

QuantumState apply_matrix(const CMatrix& u, const QuantumState& state) {
  require(static_cast<std::size_t>(u.rows()) == state.dim(), ErrorKind::kDimensionMismatch,
          "apply: dimension mismatch");
  if (state.is_pure()) {
    CVector out = u * state.vector();
    return QuantumState::pure(std::move(out), state.factorization());
  }
  CMatrix rho = u * state.density_matrix() * u.adjoint();
  rho = (0.5 * (rho + rho.adjoint())).eval();
  return QuantumState::density(std::move(rho), state.factorization());
}

}  // namespace

QuantumState apply(const EvolutionOperator& u, const QuantumState& state) {
  if (state.is_pure() && !u.is_materialized()) {
    require(state.dim() == u.dim(), ErrorKind::kDimensionMismatch, "apply: dimension mismatch");
    return QuantumState::pure(u.apply_to(state.vector()), state.factorization());
  }
  return apply_matrix(u.unitary().entries(), state);
}

QuantumState apply(const UnitaryOperator& u, const QuantumState& state) {
  return apply_matrix(u.entries(), state);
}

QuantumState apply_on_R(const UnitaryOperator& u, const QuantumState& state) {
  require(state.factorization().has_value(), ErrorKind::kValidation, "apply_on_R: state is not factorized");
  const Factorization f = *state.factorization();
  require(f.dim_r == u.dim(), ErrorKind::kDimensionMismatch, "apply_on_R: R factor dimension mismatch");
  const CMatrix& m = u.entries();
  if (state.is_pure()) {
    CVector out(state.dim());
    for (std::size_t c = 0; c < f.dim_c; ++c)
      out.segment(c * f.dim_r, f.dim_r) = m * state.vector().segment(c * f.dim_r, f.dim_r);
    return QuantumState::pure(std::move(out), f);
  }
  CMatrix rho = state.density_matrix();
  for (std::size_t a = 0; a < f.dim_c; ++a)
    for (std::size_t b = 0; b < f.dim_c; ++b)
      rho.block(a * f.dim_r, b * f.dim_r, f.dim_r, f.dim_r) =
          m * rho.block(a * f.dim_r, b * f.dim_r, f.dim_r, f.dim_r) * m.adjoint();
  return QuantumState::density(std::move(rho), f);
}

}  // namespace qpuf
