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
#include <string>
#include <string_view>

#include "qpuf/linalg.hpp"
#include "qpuf/rmt_ensembles.hpp"
#include "qpuf/serialization.hpp"

namespace qpuf::cli {

/// Environment variable naming the directory for artifacts when --out is absent.
inline constexpr const char* kOutDirEnv = "QPUF_OUT_DIR";

struct GlobalOptions {
  std::uint64_t seed = 1;
  std::string out;
  std::string format;  // empty: the command's natural format
  std::size_t max_dim = kDefaultMaxDim;
  unsigned threads = 1;
  bool gate = false;
};

struct EnsembleOptions {
  std::string ensemble = "gue";
  std::size_t dim = 16;
  int modes = 4;
  double mu = 0.0;
  double coupling = 1.0;
  std::string variance_rule = "modes-cubed";
  std::size_t distinct = 2;
  int depth = 0;

  EnsembleConfig config(std::size_t max_dim) const;
  io::Json json(std::size_t max_dim) const;
};

struct TimeGrid {
  std::optional<double> t_min;
  std::optional<double> t_max;
  std::size_t points = 0;
};

struct GenOptions {
  EnsembleOptions ens;
};

struct SpectralOptions {
  std::string in;
  EnsembleOptions ens{.ensemble = "gue", .dim = 256};
  std::size_t samples = 20;
  int bins = 50;
  double bulk_fraction = 0.8;
};

struct SffOptions {
  EnsembleOptions ens{.ensemble = "gue", .dim = 64};
  std::size_t samples = 200;
  TimeGrid grid;
};

struct ProtocolOptions {
  std::string scheme;
  int qubits = 4;
  std::size_t trials = 4;
  std::size_t rounds = 1;
  std::optional<double> time;
  std::string adversary = "honest";
  std::size_t mc_samples = 1;
  bool sampled = false;
  bool exact = false;
  bool shortcut = false;
  std::string swap_rule = "physical";
  std::string ensemble = "gue";
};

struct SweepOptions {
  std::string lambda_range = "3:6";
  std::string adversary = "subspace";
  std::string scheme = "mb";
  std::size_t trials = 4;
  std::size_t mc_samples = 300;
  std::string ensemble = "gue";
};

struct ProbesOptions {
  std::string probe = "otoc";
  EnsembleOptions ens;
  std::size_t samples = 20;
  TimeGrid grid;
  std::string o1;
  std::string o2;
  std::size_t dim_a = 0;
  std::size_t basis_state = 0;
  int alpha = 2;
};

struct ContrastOptions {
  std::string a = "gue";
  std::string b = "pseudo";
  ProbesOptions probe = [] {
    ProbesOptions p;
    p.probe = "sff";
    return p;
  }();
};

struct WeingartenOptions {
  std::size_t dim = 8;
  std::size_t samples = 100000;
  std::size_t k = 0;
};

struct ResourceOptions {
  std::optional<double> prob;
  bool sweep = false;
  double p_min = 1e-3;
  std::size_t points = 100;
};

// Each returns the process exit code: 0 success, 2 gate failure.
int run_gen(const GlobalOptions& g, const GenOptions& o);
int run_spectral(const GlobalOptions& g, const SpectralOptions& o);
int run_sff(const GlobalOptions& g, const SffOptions& o);
int run_protocol_cmd(const GlobalOptions& g, const ProtocolOptions& o);
int run_adversary_sweep(const GlobalOptions& g, const SweepOptions& o);
int run_probes(const GlobalOptions& g, const ProbesOptions& o);
int run_contrast(const GlobalOptions& g, const ContrastOptions& o);
int run_weingarten_check(const GlobalOptions& g, const WeingartenOptions& o);
int run_resource(const GlobalOptions& g, const ResourceOptions& o);

}  // namespace qpuf::cli
