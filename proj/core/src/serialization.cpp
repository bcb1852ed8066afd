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

#include "qpuf/serialization.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qpuf/error.hpp"

namespace qpuf::io {

namespace {

Json matrix_entries(const CMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) rows.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
  return rows;
}

Complex complex_at(const Json& entry) {
  require(entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number(),
          ErrorKind::kValidation, "json: complex entries must be [re, im]");
  return {entry[0].get<double>(), entry[1].get<double>()};
}

const Json& field(const Json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorKind::kValidation, std::string("json: missing field '") + key + "'");
  return j.at(key);
}

std::size_t dim_of(const Json& j) {
  const Json& d = field(j, "dim");
  require(d.is_number_unsigned() && d.get<std::size_t>() >= 1, ErrorKind::kValidation, "json: dim must be positive");
  return d.get<std::size_t>();
}

CMatrix matrix_from(const Json& entries, std::size_t dim) {
  require(entries.is_array() && entries.size() == dim * dim, ErrorKind::kDimensionMismatch,
          "json: entries must hold dim^2 values");
  CMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = complex_at(entries[i * dim + j]);
  return m;
}

Json estimate_json(const stats::Estimate& e) {
  return Json{{"mean", e.mean}, {"stderr", e.std_error}, {"count", e.count}};
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json to_json(const HermitianOperator& h) {
  Json j{{"kind", "hamiltonian"},
         {"dim", h.dim()},
         {"ensemble", std::string(to_string(h.ensemble()))},
         {"seed", h.seed()},
         {"entries", matrix_entries(h.entries())}};
  if (!h.planted_spectrum().empty()) j["planted_spectrum"] = h.planted_spectrum();
  return j;
}

Json to_json(const UnitaryOperator& u) {
  return Json{{"kind", "unitary"},
              {"dim", u.dim()},
              {"ensemble", std::string(to_string(u.provenance()))},
              {"seed", 0},
              {"entries", matrix_entries(u.entries())}};
}

Json to_json(const QuantumState& s) {
  Json j{{"dim", s.dim()}, {"form", s.is_pure() ? "pure" : "density"}};
  if (s.factorization()) j["factorization"] = Json::array({s.factorization()->dim_c, s.factorization()->dim_r});
  if (s.is_pure()) {
    Json data = Json::array();
    for (Eigen::Index i = 0; i < s.vector().size(); ++i)
      data.push_back(Json::array({s.vector()(i).real(), s.vector()(i).imag()}));
    j["data"] = std::move(data);
  } else {
    j["data"] = matrix_entries(s.density_matrix());
  }
  return j;
}

HermitianOperator hermitian_from_json(const Json& j) {
  const std::size_t dim = dim_of(j);
  const Ensemble ensemble = ensemble_from_string(field(j, "ensemble").get<std::string>());
  const Json& seed = field(j, "seed");
  require(seed.is_number_unsigned(), ErrorKind::kValidation, "json: seed must be an unsigned integer");
  HermitianOperator h(matrix_from(field(j, "entries"), dim), ensemble, seed.get<std::uint64_t>());
  if (j.contains("planted_spectrum")) h.set_planted_spectrum(j.at("planted_spectrum").get<std::vector<double>>());
  return h;
}

UnitaryOperator unitary_from_json(const Json& j) {
  const std::size_t dim = dim_of(j);
  return UnitaryOperator(matrix_from(field(j, "entries"), dim),
                         provenance_from_string(field(j, "ensemble").get<std::string>()));
}

QuantumState state_from_json(const Json& j) {
  const std::size_t dim = dim_of(j);
  std::optional<Factorization> f;
  if (j.contains("factorization")) {
    const Json& fj = j.at("factorization");
    require(fj.is_array() && fj.size() == 2, ErrorKind::kValidation, "json: factorization must be [dim_c, dim_r]");
    f = Factorization{fj[0].get<std::size_t>(), fj[1].get<std::size_t>()};
  }
  const std::string form = field(j, "form").get<std::string>();
  const Json& data = field(j, "data");
  if (form == "pure") {
    require(data.is_array() && data.size() == dim, ErrorKind::kDimensionMismatch, "json: state data length != dim");
    CVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v(i) = complex_at(data[i]);
    return QuantumState::pure(std::move(v), f);
  }
  require(form == "density", ErrorKind::kValidation, "json: form must be pure or density");
  return QuantumState::density(matrix_from(data, dim), f);
}

Json to_json(const ProtocolConfig& cfg) {
  return Json{{"dim", cfg.dim},
              {"security_parameter", cfg.security_parameter},
              {"M", cfg.trials_per_round},
              {"N", cfg.rounds},
              {"t", cfg.time},
              {"swap_mode", std::string(to_string(cfg.swap_mode))},
              {"swap_rule", cfg.swap_rule == SwapRule::kPhysical ? "PHYSICAL" : "SQUARED"},
              {"challenge_mode", std::string(to_string(cfg.challenge_mode))},
              {"seed", cfg.seed},
              {"max_choi_dim", cfg.max_choi_dim}};
}

Json to_json(const Transcript& t) {
  Json trials = Json::array();
  for (const TrialRecord& r : t.trials) {
    Json row{{"round", r.round}, {"trial", r.trial}};
    if (t.scheme == Scheme::kMb && r.outcome) {
      row["m"] = *r.outcome;
    } else {
      row["challenge_id"] = r.challenge_id;
    }
    if (r.accepted) {
      row["bit"] = *r.accepted ? 1 : 0;
    } else {
      row["acceptance_prob"] = r.acceptance_probability;
    }
    row["response"] = r.response_digest.empty() ? Json(nullptr) : Json(r.response_digest);
    trials.push_back(std::move(row));
  }
  Json j{{"scheme", std::string(to_string(t.scheme))},
         {"dim", t.config.dim},
         {"M", t.config.trials_per_round},
         {"N", t.config.rounds},
         {"t", t.config.time},
         {"swap_mode", std::string(to_string(t.config.swap_mode))},
         {"responder", t.responder},
         {"trials", std::move(trials)},
         {"round_overall", t.round_overall},
         {"overall", t.overall}};
  if (t.verdict) j["verdict"] = *t.verdict;
  j["seeds"] = Json{{"root", t.config.seed}};
  return j;
}

Json to_json(const ExperimentReport& r) {
  return Json{{"scheme", std::string(to_string(r.scheme))},
              {"ensemble", std::string(to_string(r.ensemble))},
              {"adversary", r.adversary},
              {"white_box", r.white_box},
              {"dim", r.dim},
              {"q", r.queries},
              {"M", r.trials},
              {"t", r.time},
              {"mc_samples", r.mc_samples},
              {"mean", r.mean},
              {"stderr", r.std_error},
              {"bound", r.bound},
              {"per_trial_bound", r.per_trial_bound},
              {"pass", r.pass},
              {"seed", r.seed}};
}

Json to_json(const ProbeReport& r) {
  return Json{{"probe", std::string(to_string(r.probe))},
              {"ensemble", std::string(to_string(r.ensemble))},
              {"dim", r.dim},
              {"samples", r.samples},
              {"o1", r.descriptors.o1},
              {"o2", r.descriptors.o2},
              {"dim_a", r.descriptors.cut.dim_a},
              {"initial_basis_state", r.descriptors.initial_basis_state},
              {"alpha", r.descriptors.alpha},
              {"times", r.times},
              {"values", r.values},
              {"stderr", r.std_error},
              {"window", estimate_json(r.window)}};
}

Json to_json(const ContrastReport& r) {
  return Json{{"probe", std::string(to_string(r.probe))},
              {"a", to_json(r.a)},
              {"b", to_json(r.b)},
              {"gap", r.gap},
              {"gap_stderr", r.gap_std_error},
              {"gap_factor", r.gap_factor}};
}

Json to_json(std::span<const ReportEntry> entries) {
  Json arr = Json::array();
  for (const ReportEntry& e : entries)
    arr.push_back(Json{{"statistic", e.statistic}, {"value", e.value}, {"tolerance", e.tolerance}, {"pass", e.pass}});
  return arr;
}

std::string sff_csv(const spectral::SffCurve& curve) {
  std::ostringstream out;
  out << "t,sff_mean,sff_stderr,samples,dim,ensemble\n";
  for (std::size_t k = 0; k < curve.times.size(); ++k)
    out << format_double(curve.times[k]) << ',' << format_double(curve.values[k]) << ','
        << format_double(curve.std_error[k]) << ',' << curve.samples << ',' << curve.dim << ','
        << to_string(curve.ensemble) << '\n';
  return out.str();
}

std::string probe_csv(const ProbeReport& report) {
  std::ostringstream out;
  out << "t,value_mean,value_stderr,probe,ensemble,dim\n";
  for (std::size_t k = 0; k < report.times.size(); ++k)
    out << format_double(report.times[k]) << ',' << format_double(report.values[k]) << ','
        << format_double(report.std_error[k]) << ',' << to_string(report.probe) << ','
        << to_string(report.ensemble) << ',' << report.dim << '\n';
  return out.str();
}

std::string resource_csv(std::span<const ResourceEstimate> rows) {
  std::ostringstream out;
  out << "p,lambda,even_split_bits\n";
  for (const ResourceEstimate& r : rows)
    out << format_double(r.probability) << ',' << format_double(r.qubits) << ','
        << format_double(r.even_split_bits) << '\n';
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  require(in.good(), ErrorKind::kValidation, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::kValidation, "malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  require(out.good(), ErrorKind::kValidation, "cannot write " + path.string());
  out << text;
}

}  // namespace qpuf::io
