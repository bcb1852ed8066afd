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

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qpuf/adversary.hpp"
#include "qpuf/chaos_probes.hpp"
#include "qpuf/protocols.hpp"
#include "qpuf/quantum_state.hpp"
#include "qpuf/rmt_ensembles.hpp"
#include "qpuf/spectral_stats.hpp"

namespace qpuf::io {

/// Insertion-ordered so emitted documents are stable byte for byte.
using Json = nlohmann::ordered_json;

/// %.17g, the shortest printf form that round-trips any double.
std::string format_double(double v);

Json to_json(const HermitianOperator& h);
Json to_json(const UnitaryOperator& u);
Json to_json(const QuantumState& s);
Json to_json(const ProtocolConfig& cfg);
Json to_json(const Transcript& t);
Json to_json(const ExperimentReport& r);
Json to_json(const ProbeReport& r);
Json to_json(const ContrastReport& r);

/// Throw kValidation on malformed documents.
HermitianOperator hermitian_from_json(const Json& j);
UnitaryOperator unitary_from_json(const Json& j);
QuantumState state_from_json(const Json& j);

/// One row of a spectral report.
struct ReportEntry {
  std::string statistic;
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

Json to_json(std::span<const ReportEntry> entries);

/// Header `t,sff_mean,sff_stderr,samples,dim,ensemble`.
std::string sff_csv(const spectral::SffCurve& curve);
/// Header `t,value_mean,value_stderr,probe,ensemble,dim`.
std::string probe_csv(const ProbeReport& report);
/// Header `p,lambda,even_split_bits`.
std::string resource_csv(std::span<const ResourceEstimate> rows);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

Json read_json(const std::filesystem::path& path);
/// Creates parent directories; throws kValidation when the file cannot be written.
void write_text(const std::filesystem::path& path, std::string_view text);

}  // namespace qpuf::io
