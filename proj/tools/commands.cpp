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

#include "commands.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>
#include <vector>

#include "qpuf/adversary.hpp"
#include "qpuf/chaos_probes.hpp"
#include "qpuf/dynamics.hpp"
#include "qpuf/error.hpp"
#include "qpuf/protocols.hpp"
#include "qpuf/random.hpp"
#include "qpuf/spectral_stats.hpp"

namespace qpuf::cli {

namespace {

using io::Json;

Json base_config(const GlobalOptions& g, std::string_view command) {
  // Threads and the output path are left out so artifacts match across both.
  return Json{{"command", std::string(command)}, {"seed", g.seed}, {"max_dim", g.max_dim}};
}

std::string resolve_format(const GlobalOptions& g, std::string_view natural, bool csv_ok, bool json_ok) {
  const std::string f = g.format.empty() ? std::string(natural) : g.format;
  require((f == "csv" && csv_ok) || (f == "json" && json_ok), ErrorKind::kValidation,
          "format '" + f + "' is not available for this command");
  return f;
}

void emit(const GlobalOptions& g, std::string_view default_name, const std::string& text) {
  std::filesystem::path path = g.out;
  if (path.empty()) {
    if (const char* dir = std::getenv(kOutDirEnv); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / std::string(default_name);
    }
  }
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  io::write_text(path, text);
}

std::string csv_with_config(const Json& config, const std::string& body) {
  return "# config=" + config.dump() + "\n" + body;
}

std::vector<double> time_grid(const TimeGrid& grid, double lo, double hi, std::size_t points) {
  const double a = grid.t_min.value_or(lo);
  const double b = grid.t_max.value_or(hi);
  const std::size_t n = grid.points == 0 ? points : grid.points;
  require(a >= 0.0 && b >= a, ErrorKind::kValidation, "time grid: need 0 <= t-min <= t-max");
  require(n >= 1, ErrorKind::kValidation, "time grid: need at least one point");
  if (n == 1) return {a};
  return spectral::linspace(a, b, n);
}

Json grid_json(const std::vector<double>& times) {
  return Json{{"t_min", times.front()}, {"t_max", times.back()}, {"points", times.size()}};
}

SykVarianceRule variance_rule_from(const std::string& s) {
  if (s == "modes-cubed") return SykVarianceRule::kModesCubed;
  if (s == "d-cubed") return SykVarianceRule::kDCubed;
  fail(ErrorKind::kValidation, "unknown SYK variance rule '" + s + "'");
}

EnsembleConfig ensemble_for_qubits(const std::string& name, int qubits, std::size_t max_dim) {
  EnsembleOptions e;
  e.ensemble = name;
  e.dim = std::size_t{1} << qubits;
  e.modes = qubits;
  return e.config(max_dim);
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  require(colon != std::string::npos, ErrorKind::kValidation, "lambda range must look like a:b");
  auto to_int = [&](std::string_view part) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    require(ec == std::errc() && ptr == part.data() + part.size(), ErrorKind::kValidation,
            "bad lambda range '" + text + "'");
    return v;
  };
  const std::string_view view(text);
  const int a = to_int(view.substr(0, colon));
  const int b = to_int(view.substr(colon + 1));
  require(a >= 2 && b >= a && b <= 10, ErrorKind::kValidation, "lambda range must satisfy 2 <= a <= b <= 10");
  return {a, b};
}

Json estimate_json(const stats::Estimate& e) {
  return Json{{"mean", e.mean}, {"stderr", e.std_error}, {"count", e.count}};
}

Json probe_options_json(const ProbesOptions& o, const std::vector<double>& times) {
  return Json{{"probe", o.probe},   {"samples", o.samples}, {"times", grid_json(times)},
              {"o1", o.o1},         {"o2", o.o2},           {"dim_a", o.dim_a},
              {"basis_state", o.basis_state}, {"alpha", o.alpha}};
}

ProbeConfig probe_config(const GlobalOptions& g, const ProbesOptions& o, std::vector<double> times) {
  ProbeConfig cfg;
  cfg.times = std::move(times);
  cfg.samples = o.samples;
  cfg.seed = g.seed;
  cfg.o1 = o.o1;
  cfg.o2 = o.o2;
  cfg.dim_a = o.dim_a;
  cfg.initial_basis_state = o.basis_state;
  cfg.alpha = o.alpha;
  return cfg;
}

std::vector<double> probe_times(const ProbesOptions& o) {
  if (probe_from_string(o.probe) == Probe::kSff)
    return time_grid(o.grid, spectral::kPlateauBegin, spectral::kPlateauEnd, 21);
  return time_grid(o.grid, kLateTimeBegin, kLateTimeEnd, 11);
}

}  // namespace

EnsembleConfig EnsembleOptions::config(std::size_t max_dim) const {
  EnsembleConfig cfg;
  cfg.kind = ensemble_from_string(ensemble);
  cfg.dim = dim;
  cfg.syk.modes = modes;
  cfg.syk.chemical_potential = mu;
  cfg.syk.coupling_scale = coupling;
  cfg.syk.variance_rule = variance_rule_from(variance_rule);
  cfg.syk.max_dim = max_dim;
  cfg.distinct_eigenvalues = distinct;
  cfg.design_depth = depth;
  require(cfg.kind != Ensemble::kExplicit, ErrorKind::kValidation, "EXPLICIT operators come from files, not samplers");
  if (cfg.kind == Ensemble::kSyk) {
    require(modes >= 1 && modes < 30, ErrorKind::kValidation, "SYK modes out of range");
  }
  require(cfg.hilbert_dim() <= max_dim, ErrorKind::kResourceLimit,
          "Hilbert dimension " + std::to_string(cfg.hilbert_dim()) + " exceeds --max-dim");
  return cfg;
}

Json EnsembleOptions::json(std::size_t max_dim) const {
  const EnsembleConfig cfg = config(max_dim);
  Json j{{"ensemble", std::string(to_string(cfg.kind))}, {"dim", cfg.hilbert_dim()}};
  if (cfg.kind == Ensemble::kSyk) {
    j["modes"] = modes;
    j["mu"] = mu;
    j["coupling"] = coupling;
    j["variance_rule"] = variance_rule;
  }
  if (cfg.kind == Ensemble::kPseudoChaotic) {
    j["distinct_eigenvalues"] = distinct;
    j["design_depth"] = depth == 0 ? default_design_depth(cfg.hilbert_dim()) : depth;
  }
  return j;
}

int run_gen(const GlobalOptions& g, const GenOptions& o) {
  resolve_format(g, "json", false, true);
  Json config = base_config(g, "gen");
  Json doc;
  if (o.ens.ensemble == "haar" || o.ens.ensemble == "design") {
    require(o.ens.dim <= g.max_dim, ErrorKind::kResourceLimit, "dimension exceeds --max-dim");
    const std::uint64_t seed = derive_seed(g.seed, "gen-unitary");
    const bool haar = o.ens.ensemble == "haar";
    const int depth = haar || o.ens.depth > 0 ? o.ens.depth : default_design_depth(o.ens.dim);
    const UnitaryOperator u = haar ? sample_haar_unitary(o.ens.dim, seed) : sample_design_unitary(o.ens.dim, depth, seed);
    doc = io::to_json(u);
    doc["seed"] = seed;
    config["unitary"] = Json{{"kind", o.ens.ensemble}, {"dim", o.ens.dim}};
    if (!haar) config["unitary"]["depth"] = depth;
  } else {
    config["ensemble"] = o.ens.json(g.max_dim);
    doc = io::to_json(sample_hamiltonian(o.ens.config(g.max_dim), g.seed, 0));
  }
  doc["config"] = std::move(config);
  emit(g, "hamiltonian.json", io::dump(doc));
  return 0;
}

int run_spectral(const GlobalOptions& g, const SpectralOptions& o) {
  resolve_format(g, "json", false, true);
  Json config = base_config(g, "spectral");
  std::vector<EigenSystem> systems;
  if (!o.in.empty()) {
    const Json doc = io::read_json(o.in);
    const HermitianOperator h = io::hermitian_from_json(doc);
    require(h.dim() <= g.max_dim, ErrorKind::kResourceLimit, "input dimension exceeds --max-dim");
    systems.push_back(diagonalize(h));
    config["input"] = Json{{"dim", h.dim()}, {"ensemble", std::string(to_string(h.ensemble()))}, {"seed", h.seed()}};
  } else {
    const EnsembleConfig ens = o.ens.config(g.max_dim);
    config["ensemble"] = o.ens.json(g.max_dim);
    config["samples"] = o.samples;
    require(o.samples >= 1, ErrorKind::kValidation, "spectral: need at least one sample");
    systems.resize(o.samples);
    parallel_for(o.samples, [&](std::size_t i) { systems[i] = diagonalize(sample_hamiltonian(ens, g.seed, i)); });
  }
  config["bins"] = o.bins;
  config["bulk_fraction"] = o.bulk_fraction;

  const double tv = spectral::density_distance(systems, o.bins);
  std::vector<spectral::SpacingRecord> recs;
  for (const auto& es : systems) recs.push_back(spectral::unfold_spacings(es, o.bulk_fraction));
  const spectral::SpacingRecord pooled = spectral::pool(recs);
  const double ks = spectral::spacing_ks_distance(pooled);
  const double below = pooled.fraction_below(spectral::kLevelRepulsionThreshold);
  const std::vector<io::ReportEntry> entries = {
      {"semicircle_tv_distance", tv, 0.05, tv < 0.05},
      {"wigner_surmise_ks_distance", ks, 0.08, ks < 0.08},
      {"spacing_fraction_below_0.1", below, 0.02, below < 0.02},
  };
  bool all = true;
  for (const auto& e : entries) all = all && e.pass;
  Json doc{{"config", std::move(config)},
           {"report", io::to_json(std::span<const io::ReportEntry>(entries))},
           {"pass", all}};
  emit(g, "spectral_report.json", io::dump(doc));
  return g.gate && !all ? 2 : 0;
}

int run_sff(const GlobalOptions& g, const SffOptions& o) {
  const std::string format = resolve_format(g, "csv", true, true);
  const EnsembleConfig ens = o.ens.config(g.max_dim);
  const std::vector<double> times = time_grid(o.grid, 0.0, 100.0, 101);
  Json config = base_config(g, "sff");
  config["ensemble"] = o.ens.json(g.max_dim);
  config["samples"] = o.samples;
  config["times"] = grid_json(times);
  const spectral::SffCurve curve = spectral::spectral_form_factor(ens, times, o.samples, g.seed);
  if (format == "csv") {
    emit(g, "sff.csv", csv_with_config(config, io::sff_csv(curve)));
  } else {
    emit(g, "sff.json", io::dump(Json{{"config", config},
                                      {"t", curve.times},
                                      {"sff_mean", curve.values},
                                      {"sff_stderr", curve.std_error}}));
  }
  return 0;
}

int run_protocol_cmd(const GlobalOptions& g, const ProtocolOptions& o) {
  resolve_format(g, "json", false, true);
  require(!(o.exact && o.sampled), ErrorKind::kValidation, "--exact and --sampled are exclusive");
  const Scheme scheme = o.scheme == "selective" ? Scheme::kSelective : Scheme::kMb;
  const EnsembleConfig ens = ensemble_for_qubits(o.ensemble, o.qubits, g.max_dim);
  ProtocolConfig cfg = protocol_config_for_qubits(o.qubits, o.trials, g.seed);
  cfg.rounds = o.rounds;
  if (o.time) cfg.time = *o.time;
  cfg.swap_mode = o.sampled ? SwapMode::kSampled : SwapMode::kExact;
  cfg.challenge_mode = o.shortcut ? ChallengeMode::kShortcut : ChallengeMode::kFull;
  require(o.swap_rule == "physical" || o.swap_rule == "squared", ErrorKind::kValidation,
          "--swap-rule must be physical or squared");
  cfg.swap_rule = o.swap_rule == "squared" ? SwapRule::kSquared : SwapRule::kPhysical;
  cfg.validate();
  require(o.mc_samples >= 1, ErrorKind::kValidation, "--mc-samples must be >= 1");
  const bool honest = o.adversary == "honest";
  const AdversarySpec spec = honest ? AdversarySpec{} : parse_adversary(o.adversary);

  Json config = base_config(g, "protocol");
  config["scheme"] = std::string(to_string(scheme));
  config["qubits"] = o.qubits;
  config["ensemble"] = std::string(to_string(ens.kind));
  config["adversary"] = honest ? std::string("honest") : spec.label();
  config["mc_samples"] = o.mc_samples;
  config["protocol"] = io::to_json(cfg);

  Json transcripts = Json::array();
  std::vector<double> overall;
  for (std::size_t s = 0; s < o.mc_samples; ++s) {
    const EvolutionOperator qpuf =
        make_evolution(sample_hamiltonian(ens, derive_seed(g.seed, "protocol-qpuf"), s), cfg.time);
    ProtocolConfig run_cfg = cfg;
    run_cfg.seed = derive_seed(g.seed, "protocol-run", s);
    std::unique_ptr<Responder> responder;
    if (honest) {
      responder = std::make_unique<HonestResponder>(qpuf);
    } else {
      responder = make_adversary(spec, qpuf, derive_seed(g.seed, "protocol-adversary", s));
    }
    const Transcript t = run_protocol(scheme, qpuf, *responder, run_cfg);
    overall.push_back(t.overall);
    Json tj = io::to_json(t);
    tj["seeds"]["qpuf_member"] = s;
    transcripts.push_back(std::move(tj));
  }
  Json doc{{"config", std::move(config)},
           {"transcripts", std::move(transcripts)},
           {"summary", estimate_json(stats::estimate(overall))}};
  emit(g, "transcript.json", io::dump(doc));
  return 0;
}

int run_adversary_sweep(const GlobalOptions& g, const SweepOptions& o) {
  const std::string format = resolve_format(g, "csv", true, true);
  const auto [lo, hi] = parse_range(o.lambda_range);
  const Scheme scheme = o.scheme == "selective" ? Scheme::kSelective : Scheme::kMb;
  require(o.scheme == "selective" || o.scheme == "mb", ErrorKind::kValidation, "--scheme must be selective or mb");
  Json config = base_config(g, "adversary-sweep");
  config["lambda_range"] = Json::array({lo, hi});
  config["adversary"] = o.adversary;
  config["scheme"] = std::string(to_string(scheme));
  config["M"] = o.trials;
  config["mc_samples"] = o.mc_samples;
  config["ensemble"] = o.ensemble;

  std::vector<ExperimentReport> reports;
  for (int lambda = lo; lambda <= hi; ++lambda) {
    AdversarySpec spec;
    if (o.adversary == "subspace") {
      spec.kind = AdversarySpec::Kind::kSubspace;
      spec.queries = static_cast<std::size_t>(lambda);
    } else {
      spec = parse_adversary(o.adversary);
    }
    const EnsembleConfig ens = ensemble_for_qubits(o.ensemble, lambda, g.max_dim);
    const ProtocolConfig cfg = protocol_config_for_qubits(lambda, o.trials, g.seed);
    reports.push_back(estimate_forging_probability(scheme, ens, spec, cfg, o.mc_samples,
                                                   derive_seed(g.seed, "adversary-sweep", lambda)));
  }
  bool all = true;
  for (const auto& r : reports) all = all && r.pass;

  if (format == "csv") {
    std::ostringstream csv;
    csv << "lambda,dim,q,M,mc_samples,mean,stderr,bound,pass\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      csv << (lo + static_cast<int>(i)) << ',' << r.dim << ',' << r.queries << ',' << r.trials << ','
          << r.mc_samples << ',' << io::format_double(r.mean) << ',' << io::format_double(r.std_error) << ','
          << io::format_double(r.bound) << ',' << (r.pass ? "true" : "false") << '\n';
    }
    emit(g, "adversary_sweep.csv", csv_with_config(config, csv.str()));
  } else {
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(io::to_json(r));
    emit(g, "adversary_sweep.json", io::dump(Json{{"config", config}, {"reports", arr}, {"pass", all}}));
  }
  return g.gate && !all ? 2 : 0;
}

int run_probes(const GlobalOptions& g, const ProbesOptions& o) {
  const std::string format = resolve_format(g, "csv", true, true);
  const Probe probe = probe_from_string(o.probe);
  const EnsembleConfig ens = o.ens.config(g.max_dim);
  const std::vector<double> times = probe_times(o);
  Json config = base_config(g, "probes");
  config["ensemble"] = o.ens.json(g.max_dim);
  config["probe"] = probe_options_json(o, times);
  const ProbeReport report = run_probe(ens, probe, probe_config(g, o, times));
  if (format == "csv") {
    emit(g, "probe.csv", csv_with_config(config, io::probe_csv(report)));
  } else {
    emit(g, "probe.json", io::dump(Json{{"config", config}, {"report", io::to_json(report)}}));
  }
  return 0;
}

int run_contrast(const GlobalOptions& g, const ContrastOptions& o) {
  resolve_format(g, "json", false, true);
  const Probe probe = probe_from_string(o.probe.probe);
  EnsembleOptions ea = o.probe.ens, eb = o.probe.ens;
  ea.ensemble = o.a;
  eb.ensemble = o.b;
  const std::vector<double> times = probe_times(o.probe);
  Json config = base_config(g, "contrast");
  config["a"] = ea.json(g.max_dim);
  config["b"] = eb.json(g.max_dim);
  config["probe"] = probe_options_json(o.probe, times);
  const ContrastReport r =
      probe_contrast(ea.config(g.max_dim), eb.config(g.max_dim), probe, probe_config(g, o.probe, times));
  emit(g, "contrast.json", io::dump(Json{{"config", config}, {"contrast", io::to_json(r)}}));
  return 0;
}

int run_weingarten_check(const GlobalOptions& g, const WeingartenOptions& o) {
  resolve_format(g, "json", false, true);
  require(o.dim >= 2 && o.dim <= g.max_dim, ErrorKind::kValidation, "weingarten-check: bad --dim");
  require(o.samples >= 2, ErrorKind::kValidation, "weingarten-check: need at least 2 samples");
  Rng rng = make_rng(g.seed, "weingarten-lambda");
  std::vector<Complex> lambda(o.dim);
  for (auto& z : lambda) z = std::polar(1.0, 2.0 * kPi * uniform01(rng));
  const QuantumState rho = random_pure_state(o.dim, derive_seed(g.seed, "weingarten-rho"));
  const double closed = weingarten_expectation(lambda, rho, o.k);
  const stats::Estimate mc = weingarten_monte_carlo(lambda, rho, o.k, o.samples, derive_seed(g.seed, "weingarten"));
  const std::vector<Complex> ones(o.dim, Complex(1.0, 0.0));
  const double identity_error = std::abs(weingarten_expectation(ones, rho, o.k) - std::norm(rho.vector()(o.k)));
  const double mixed_error =
      std::abs(weingarten_expectation(lambda, QuantumState::maximally_mixed(o.dim), o.k) - 1.0 / o.dim);
  const bool mc_pass = std::abs(mc.mean - closed) <= 3.0 * mc.std_error;
  const bool trivial_pass = identity_error <= 1e-12 && mixed_error <= 1e-12;

  Json config = base_config(g, "weingarten-check");
  config["dim"] = o.dim;
  config["samples"] = o.samples;
  config["k"] = o.k;
  Json lam = Json::array();
  for (const auto& z : lambda) lam.push_back(Json::array({z.real(), z.imag()}));
  Json doc{{"config", std::move(config)},
           {"lambda", std::move(lam)},
           {"rho", io::to_json(rho)},
           {"closed_form", closed},
           {"mc", estimate_json(mc)},
           {"mc_sigma", mc.std_error > 0 ? (mc.mean - closed) / mc.std_error : 0.0},
           {"identity_case_error", identity_error},
           {"mixed_case_error", mixed_error},
           {"pass", mc_pass && trivial_pass}};
  emit(g, "weingarten.json", io::dump(doc));
  return g.gate && !(mc_pass && trivial_pass) ? 2 : 0;
}

int run_resource(const GlobalOptions& g, const ResourceOptions& o) {
  require(o.prob.has_value() != o.sweep, ErrorKind::kValidation, "resource: give exactly one of --prob or --sweep");
  Json config = base_config(g, "resource");
  if (o.sweep) {
    const std::string format = resolve_format(g, "csv", true, true);
    const auto rows = resource_sweep(o.p_min, o.points);
    config["p_min"] = o.p_min;
    config["points"] = o.points;
    if (format == "csv") {
      emit(g, "resource_sweep.csv", csv_with_config(config, io::resource_csv(rows)));
    } else {
      Json arr = Json::array();
      for (const auto& r : rows) arr.push_back(Json{{"p", r.probability}, {"lambda", r.qubits}});
      emit(g, "resource_sweep.json", io::dump(Json{{"config", config}, {"sweep", arr}}));
    }
    return 0;
  }
  const ResourceEstimate r = resource_budget(*o.prob);
  if (g.format == "json") {
    config["prob"] = *o.prob;
    emit(g, "resource.json", io::dump(Json{{"config", config},
                                           {"p", r.probability},
                                           {"lambda", r.qubits},
                                           {"even_split_bits", r.even_split_bits}}));
  } else {
    require(g.format.empty(), ErrorKind::kValidation, "resource --prob prints text unless --format json");
    emit(g, "resource.txt", "lambda = " + io::format_double(r.qubits) + "\n");
  }
  return 0;
}

}  // namespace qpuf::cli
