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

#include <complex>
#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

namespace qpuf {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;

/// Largest Hilbert dimension any sampler will build unless overridden.
inline constexpr std::size_t kDefaultMaxDim = std::size_t{1} << 10;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline int log2_exact(std::size_t n) {
  int bits = 0;
  while ((std::size_t{1} << bits) < n) ++bits;
  return bits;
}

/// Max |A - A^dagger| over entries.
inline double hermiticity_residual(const CMatrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

/// ||A A^dagger - I||_F.
inline double unitarity_residual(const CMatrix& a) {
  return (a * a.adjoint() - CMatrix::Identity(a.rows(), a.cols())).norm();
}

}  // namespace qpuf
