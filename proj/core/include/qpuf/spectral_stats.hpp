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
#include <span>
#include <vector>

#include "qpuf/rmt_ensembles.hpp"
#include "qpuf/stats.hpp"

namespace qpuf {

/// Eigenvalues in ascending order with the matching column-eigenvector matrix.
struct EigenSystem {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
  /// V diag(E) V^dagger.
  CMatrix recompose() const;
};

/// Throws kValidation when the input is not Hermitian within 1e-12 per entry.
EigenSystem diagonalize(const HermitianOperator& h);
EigenSystem diagonalize(const CMatrix& hermitian);

namespace spectral {

// Defaults shared by the CLI reports and the acceptance suite.
inline constexpr double kDensityRange = 2.2;
inline constexpr int kDefaultBins = 50;
inline constexpr double kDefaultBulkFraction = 0.8;
inline constexpr double kLevelRepulsionThreshold = 0.1;
/// Late-time SFF window used by the plateau checks.
inline constexpr double kPlateauBegin = 40.0;
inline constexpr double kPlateauEnd = 60.0;

double semicircle_pdf(double e);
/// Integrated semicircle density on [-2, e].
double semicircle_cdf(double e);

/// Total-variation distance between the pooled eigenvalue histogram on
/// [-2.2, 2.2] and the binned semicircle. Mass outside the range counts fully.
double density_distance(std::span<const EigenSystem> systems, int bins = kDefaultBins);
double density_distance(std::span<const double> eigenvalues, int bins = kDefaultBins);

struct SpacingRecord {
  std::vector<double> raw_spacings;
  std::vector<double> unfolded_spacings;
  double bulk_fraction = 1.0;

  /// Fraction of unfolded spacings strictly below `threshold`.
  double fraction_below(double threshold) const;
};

/// Unfolds through N(E) = D * semicircle_cdf(E), keeps the central bulk and
/// rescales spacings to unit mean.
SpacingRecord unfold_spacings(const EigenSystem& es, double bulk_fraction = kDefaultBulkFraction);
SpacingRecord unfold_spacings(std::span<const double> sorted_eigenvalues,
                              double bulk_fraction = kDefaultBulkFraction);

/// Concatenates records; each member is already unit mean so the pool is too.
SpacingRecord pool(std::span<const SpacingRecord> records);

/// (pi/2) s exp(-pi s^2 / 4).
double wigner_surmise_pdf(double s);
/// 1 - exp(-pi s^2 / 4).
double wigner_surmise_cdf(double s);
/// Inverse cdf, used to draw oracle spacings.
double wigner_surmise_quantile(double u);

double spacing_ks_distance(const SpacingRecord& rec);

/// |integral e^{i s t} P(s) ds| for the surmise; logged next to SFF runs.
double surmise_characteristic_magnitude(double t);

struct SffCurve {
  std::vector<double> times;
  std::vector<double> values;
  std::vector<double> std_error;
  std::size_t samples = 0;
  std::size_t dim = 0;
  Ensemble ensemble = Ensemble::kGue;
};

/// |sum_p exp(-i E_p t)|^2 for one spectrum.
double sff_single(std::span<const double> eigenvalues, double t);

/// Ensemble-mean SFF from eigenvalues only; member i uses stream (seed, i).
SffCurve spectral_form_factor(const EnsembleConfig& config, std::span<const double> times,
                              std::size_t samples, std::uint64_t seed);

/// Per-member time averages over `times` reduced to mean and standard error.
/// Members are correlated across times, so this is the honest error bar for a window mean.
stats::Estimate sff_window_average(const EnsembleConfig& config, std::span<const double> times,
                                   std::size_t samples, std::uint64_t seed);

std::vector<double> linspace(double lo, double hi, std::size_t count);

struct PairCell {
  double energy_p = 0.0;
  double energy_q = 0.0;
};

struct PairCellResult {
  PairCell cell;
  std::size_t observed_pairs = 0;
  double empirical_density = 0.0;
  double factorized_density = 0.0;
  double ratio = 0.0;
  double sine_kernel_prediction = 0.0;  // 1 - sin^2(D dE) / (D pi dE)^2
  bool insufficient_data = false;
};

struct TwoPointReport {
  std::size_t eigensystems = 0;
  std::size_t dim = 0;
  double cell_width = 0.0;
  std::vector<PairCellResult> cells;
};

inline constexpr std::size_t kMinTwoPointSystems = 50;

/// Empirical pair density over ordered pairs p != q in square cells of side
/// `cell_width` centred at each requested (E_p, E_q).
TwoPointReport two_point_correlation_check(std::span<const EigenSystem> systems,
                                           std::span<const PairCell> cells,
                                           double cell_width = 0.1);

}  // namespace spectral
}  // namespace qpuf
