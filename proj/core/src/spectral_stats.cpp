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

#include "qpuf/spectral_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qpuf/error.hpp"
#include "qpuf/random.hpp"

namespace qpuf {

CMatrix EigenSystem::recompose() const {
  RVector e(eigenvalues.size());
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) e(i) = eigenvalues[i];
  return eigenvectors * e.asDiagonal() * eigenvectors.adjoint();
}

EigenSystem diagonalize(const CMatrix& hermitian) {
  require(hermitian.rows() == hermitian.cols() && hermitian.rows() >= 1,
          ErrorKind::kInvalidDimension, "diagonalize: matrix must be square");
  require(hermiticity_residual(hermitian) <= 1e-12, ErrorKind::kValidation,
          "diagonalize: input is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian);
  require(solver.info() == Eigen::Success, ErrorKind::kValidation, "diagonalize: solver failed");
  EigenSystem es;
  const RVector& values = solver.eigenvalues();
  es.eigenvalues.assign(values.data(), values.data() + values.size());
  es.eigenvectors = solver.eigenvectors();
  return es;
}

EigenSystem diagonalize(const HermitianOperator& h) { return diagonalize(h.entries()); }

namespace spectral {

namespace {

std::vector<double> eigenvalues_only(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h.entries(), Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorKind::kValidation, "eigenvalue solver failed");
  const RVector& v = solver.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

}  // namespace

double semicircle_pdf(double e) {
  if (e <= -2.0 || e >= 2.0) return 0.0;
  return std::sqrt(4.0 - e * e) / (2.0 * kPi);
}

double semicircle_cdf(double e) {
  if (e <= -2.0) return 0.0;
  if (e >= 2.0) return 1.0;
  return 0.5 + e * std::sqrt(4.0 - e * e) / (4.0 * kPi) + std::asin(e / 2.0) / kPi;
}

double density_distance(std::span<const double> eigenvalues, int bins) {
  require(!eigenvalues.empty(), ErrorKind::kValidation, "density_distance: no eigenvalues");
  require(bins >= 10, ErrorKind::kValidation, "density_distance: bins must be >= 10");
  const double lo = -kDensityRange;
  const double width = 2.0 * kDensityRange / bins;
  std::vector<double> counts(bins, 0.0);
  double outside = 0.0;
  for (double e : eigenvalues) {
    const double pos = (e - lo) / width;
    if (pos < 0.0 || pos >= bins) {
      outside += 1.0;
      continue;
    }
    counts[static_cast<int>(pos)] += 1.0;
  }
  const double total = static_cast<double>(eigenvalues.size());
  double tv = outside / total;
  for (int b = 0; b < bins; ++b) {
    const double a = std::max(-2.0, lo + b * width);
    const double c = std::min(2.0, lo + (b + 1) * width);
    const double mass = c > a ? stats::simpson(semicircle_pdf, a, c, 200) : 0.0;
    tv += std::abs(counts[b] / total - mass);
  }
  return 0.5 * tv;
}

double density_distance(std::span<const EigenSystem> systems, int bins) {
  require(!systems.empty(), ErrorKind::kValidation, "density_distance: no eigensystems");
  std::vector<double> pooled;
  for (const auto& es : systems) pooled.insert(pooled.end(), es.eigenvalues.begin(), es.eigenvalues.end());
  return density_distance(pooled, bins);
}

double SpacingRecord::fraction_below(double threshold) const {
  if (unfolded_spacings.empty()) return 0.0;
  const auto n = std::count_if(unfolded_spacings.begin(), unfolded_spacings.end(),
                               [&](double s) { return s < threshold; });
  return static_cast<double>(n) / static_cast<double>(unfolded_spacings.size());
}

SpacingRecord unfold_spacings(std::span<const double> sorted_eigenvalues, double bulk_fraction) {
  const std::size_t dim = sorted_eigenvalues.size();
  require(dim >= 16, ErrorKind::kInsufficientData, "unfold_spacings: need D >= 16");
  require(bulk_fraction > 0.0 && bulk_fraction <= 1.0, ErrorKind::kValidation,
          "unfold_spacings: bulk_fraction must lie in (0, 1]");
  const auto drop = static_cast<std::size_t>(std::floor(dim * (1.0 - bulk_fraction) / 2.0));
  const std::size_t first = drop;
  const std::size_t last = dim - drop;  // exclusive
  require(last > first && last - first >= 9, ErrorKind::kInsufficientData,
          "unfold_spacings: fewer than 8 spacings after bulk truncation");

  SpacingRecord rec;
  rec.bulk_fraction = bulk_fraction;
  const double d = static_cast<double>(dim);
  for (std::size_t p = first; p + 1 < last; ++p) {
    rec.raw_spacings.push_back(sorted_eigenvalues[p + 1] - sorted_eigenvalues[p]);
    rec.unfolded_spacings.push_back(d * (semicircle_cdf(sorted_eigenvalues[p + 1]) -
                                         semicircle_cdf(sorted_eigenvalues[p])));
  }
  const double mean = std::accumulate(rec.unfolded_spacings.begin(), rec.unfolded_spacings.end(), 0.0) /
                      static_cast<double>(rec.unfolded_spacings.size());
  require(mean > 0.0, ErrorKind::kInsufficientData, "unfold_spacings: bulk has zero width");
  for (double& s : rec.unfolded_spacings) s /= mean;
  return rec;
}

SpacingRecord unfold_spacings(const EigenSystem& es, double bulk_fraction) {
  return unfold_spacings(es.eigenvalues, bulk_fraction);
}

SpacingRecord pool(std::span<const SpacingRecord> records) {
  SpacingRecord out;
  if (records.empty()) return out;
  out.bulk_fraction = records.front().bulk_fraction;
  for (const auto& r : records) {
    out.raw_spacings.insert(out.raw_spacings.end(), r.raw_spacings.begin(), r.raw_spacings.end());
    out.unfolded_spacings.insert(out.unfolded_spacings.end(), r.unfolded_spacings.begin(),
                                 r.unfolded_spacings.end());
  }
  return out;
}

double wigner_surmise_pdf(double s) {
  require(s >= 0.0, ErrorKind::kDomain, "wigner_surmise_pdf: s must be >= 0");
  return 0.5 * kPi * s * std::exp(-kPi * s * s / 4.0);
}

double wigner_surmise_cdf(double s) {
  require(s >= 0.0, ErrorKind::kDomain, "wigner_surmise_cdf: s must be >= 0");
  return 1.0 - std::exp(-kPi * s * s / 4.0);
}

double wigner_surmise_quantile(double u) {
  require(u >= 0.0 && u < 1.0, ErrorKind::kDomain, "wigner_surmise_quantile: u must lie in [0, 1)");
  return std::sqrt(-4.0 * std::log1p(-u) / kPi);
}

double spacing_ks_distance(const SpacingRecord& rec) {
  require(rec.unfolded_spacings.size() >= 8, ErrorKind::kInsufficientData,
          "spacing_ks_distance: need at least 8 spacings");
  return stats::ks_distance(rec.unfolded_spacings, [](double s) { return wigner_surmise_cdf(std::max(0.0, s)); });
}

double surmise_characteristic_magnitude(double t) {
  const double upper = 10.0;
  const int panels = std::max(4000, static_cast<int>(40.0 * std::abs(t) * upper));
  const double re = stats::simpson([&](double s) { return std::cos(s * t) * wigner_surmise_pdf(s); }, 0.0, upper, panels);
  const double im = stats::simpson([&](double s) { return std::sin(s * t) * wigner_surmise_pdf(s); }, 0.0, upper, panels);
  return std::hypot(re, im);
}

double sff_single(std::span<const double> eigenvalues, double t) {
  double re = 0.0, im = 0.0;
  for (double e : eigenvalues) {
    re += std::cos(e * t);
    im -= std::sin(e * t);
  }
  return re * re + im * im;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / (count - 1);
  return out;
}

namespace {

// values[member][time]
std::vector<std::vector<double>> sff_members(const EnsembleConfig& config, std::span<const double> times,
                                             std::size_t samples, std::uint64_t seed) {
  require(samples >= 2, ErrorKind::kValidation, "spectral_form_factor: need at least 2 samples");
  for (double t : times) require(t >= 0.0, ErrorKind::kValidation, "spectral_form_factor: times must be >= 0");
  std::vector<std::vector<double>> members(samples);
  parallel_for(samples, [&](std::size_t i) {
    const auto h = sample_hamiltonian(config, seed, i);
    const auto e = eigenvalues_only(h);
    auto& row = members[i];
    row.resize(times.size());
    for (std::size_t k = 0; k < times.size(); ++k) row[k] = sff_single(e, times[k]);
  });
  return members;
}

}  // namespace

SffCurve spectral_form_factor(const EnsembleConfig& config, std::span<const double> times,
                              std::size_t samples, std::uint64_t seed) {
  const auto members = sff_members(config, times, samples, seed);
  SffCurve curve;
  curve.times.assign(times.begin(), times.end());
  curve.samples = samples;
  curve.dim = config.hilbert_dim();
  curve.ensemble = config.kind;
  std::vector<double> column(samples);
  for (std::size_t k = 0; k < times.size(); ++k) {
    for (std::size_t i = 0; i < samples; ++i) column[i] = members[i][k];
    const auto est = stats::estimate(column);
    curve.values.push_back(est.mean);
    curve.std_error.push_back(est.std_error);
  }
  return curve;
}

stats::Estimate sff_window_average(const EnsembleConfig& config, std::span<const double> times,
                                   std::size_t samples, std::uint64_t seed) {
  require(!times.empty(), ErrorKind::kValidation, "sff_window_average: empty time window");
  const auto members = sff_members(config, times, samples, seed);
  std::vector<double> averages(samples);
  for (std::size_t i = 0; i < samples; ++i)
    averages[i] = std::accumulate(members[i].begin(), members[i].end(), 0.0) / static_cast<double>(times.size());
  return stats::estimate(averages);
}

TwoPointReport two_point_correlation_check(std::span<const EigenSystem> systems,
                                           std::span<const PairCell> cells, double cell_width) {
  require(cell_width > 0.0, ErrorKind::kValidation, "two_point_correlation_check: cell width must be > 0");
  TwoPointReport report;
  report.eigensystems = systems.size();
  report.dim = systems.empty() ? 0 : systems.front().dim();
  report.cell_width = cell_width;
  const double half = cell_width / 2.0;
  const double d = static_cast<double>(report.dim);

  for (const PairCell& cell : cells) {
    PairCellResult r;
    r.cell = cell;
    std::size_t pairs = 0;
    for (const auto& es : systems) {
      require(es.dim() == report.dim, ErrorKind::kDimensionMismatch,
              "two_point_correlation_check: eigensystems differ in dimension");
      std::size_t in_p = 0, in_q = 0, in_both = 0;
      for (double e : es.eigenvalues) {
        const bool a = std::abs(e - cell.energy_p) < half;
        const bool b = std::abs(e - cell.energy_q) < half;
        in_p += a;
        in_q += b;
        in_both += (a && b);
      }
      pairs += in_p * in_q - in_both;  // ordered pairs with p != q
    }
    r.observed_pairs = pairs;
    const double mass_p = semicircle_cdf(cell.energy_p + half) - semicircle_cdf(cell.energy_p - half);
    const double mass_q = semicircle_cdf(cell.energy_q + half) - semicircle_cdf(cell.energy_q - half);
    r.factorized_density = mass_p * mass_q / (cell_width * cell_width);
    if (!systems.empty() && report.dim >= 2) {
      r.empirical_density = static_cast<double>(pairs) /
                            (static_cast<double>(systems.size()) * d * (d - 1.0) * cell_width * cell_width);
    }
    r.ratio = r.factorized_density > 0.0 ? r.empirical_density / r.factorized_density : 0.0;
    const double de = cell.energy_p - cell.energy_q;
    r.sine_kernel_prediction =
        de == 0.0 ? 1.0 - 1.0 / (kPi * kPi)
                  : 1.0 - std::pow(std::sin(d * de), 2) / std::pow(d * kPi * de, 2);
    r.insufficient_data = systems.size() < kMinTwoPointSystems || pairs == 0 || r.factorized_density <= 0.0;
    report.cells.push_back(r);
  }
  return report;
}

}  // namespace spectral
}  // namespace qpuf
