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

// qpuf command-line driver.

#include <CLI11.hpp>

#include <exception>
#include <iostream>
#include <string>

#include "commands.hpp"
#include "qpuf/error.hpp"
#include "qpuf/random.hpp"

namespace {

using namespace qpuf::cli;

void add_ensemble(CLI::App* cmd, EnsembleOptions& e) {
  cmd->add_option("--ensemble", e.ensemble, "gue | syk | pseudo")->capture_default_str();
  cmd->add_option("--dim", e.dim, "Hilbert dimension (ignored for syk)")->capture_default_str();
  cmd->add_option("--modes", e.modes, "SYK fermion modes")->capture_default_str();
  cmd->add_option("--mu", e.mu, "SYK chemical potential")->capture_default_str();
  cmd->add_option("--coupling", e.coupling, "SYK coupling scale J")->capture_default_str();
  cmd->add_option("--variance-rule", e.variance_rule, "modes-cubed | d-cubed")->capture_default_str();
  cmd->add_option("--distinct", e.distinct, "pseudo-chaotic distinct eigenvalues d")->capture_default_str();
  cmd->add_option("--depth", e.depth, "brickwork depth (0: 4 log2 D)")->capture_default_str();
}

void add_grid(CLI::App* cmd, TimeGrid& grid) {
  cmd->add_option("--t-min", grid.t_min, "first time");
  cmd->add_option("--t-max", grid.t_max, "last time");
  cmd->add_option("--points", grid.points, "number of evenly spaced times");
}

void add_probe(CLI::App* cmd, ProbesOptions& p, bool with_ensemble) {
  cmd->add_option("--probe", p.probe, "otoc | renyi2 | loe | stab | sff")->capture_default_str();
  if (with_ensemble) add_ensemble(cmd, p.ens);
  else {
    cmd->add_option("--dim", p.ens.dim, "Hilbert dimension")->capture_default_str();
    cmd->add_option("--modes", p.ens.modes, "SYK fermion modes")->capture_default_str();
    cmd->add_option("--distinct", p.ens.distinct, "pseudo-chaotic distinct eigenvalues d")->capture_default_str();
  }
  cmd->add_option("--samples", p.samples, "ensemble members")->capture_default_str();
  add_grid(cmd, p.grid);
  cmd->add_option("--o1", p.o1, "Pauli string for O1 (default X on qubit 0)");
  cmd->add_option("--o2", p.o2, "Pauli string for O2 (default Z on qubit 1)");
  cmd->add_option("--dim-a", p.dim_a, "dimension of the leading factor A");
  cmd->add_option("--basis-state", p.basis_state, "initial computational basis state");
  cmd->add_option("--alpha", p.alpha, "stabilizer entropy order")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum PUF simulation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--seed", g.seed, "root seed")->capture_default_str();
  app.add_option("--out", g.out, "output file (default: $QPUF_OUT_DIR/<name> or stdout)");
  app.add_option("--format", g.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-dim", g.max_dim, "largest Hilbert dimension allowed")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->capture_default_str()->check(CLI::Range(1u, 256u));
  app.add_flag("--gate", g.gate, "exit 2 when a reported tolerance fails");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "sample a Hamiltonian or unitary and write it as JSON");
  add_ensemble(gen_cmd, gen.ens);
  gen_cmd->get_option("--ensemble")->description("gue | syk | pseudo | haar | design");

  SpectralOptions spectral;
  auto* spectral_cmd = app.add_subcommand("spectral", "semicircle and spacing statistics");
  spectral_cmd->add_option("--in", spectral.in, "Hamiltonian JSON (otherwise sample an ensemble)");
  spectral_cmd->add_option("--report", g.out, "alias for --out");
  add_ensemble(spectral_cmd, spectral.ens);
  spectral_cmd->add_option("--samples", spectral.samples, "ensemble members")->capture_default_str();
  spectral_cmd->add_option("--bins", spectral.bins, "histogram bins")->capture_default_str();
  spectral_cmd->add_option("--bulk-fraction", spectral.bulk_fraction, "central fraction kept")->capture_default_str();

  SffOptions sff;
  auto* sff_cmd = app.add_subcommand("sff", "spectral form factor curve");
  add_ensemble(sff_cmd, sff.ens);
  sff_cmd->add_option("--samples", sff.samples, "ensemble members")->capture_default_str();
  add_grid(sff_cmd, sff.grid);

  ProtocolOptions proto;
  auto* proto_cmd = app.add_subcommand("protocol", "enroll and verify one scheme");
  proto_cmd->add_option("scheme", proto.scheme, "selective | mb")->required()->check(CLI::IsMember({"selective", "mb"}));
  proto_cmd->add_option("--qubits", proto.qubits, "security parameter n, D = 2^n")->capture_default_str();
  proto_cmd->add_option("--trials", proto.trials, "M tests per round")->capture_default_str();
  proto_cmd->add_option("--rounds", proto.rounds, "N rounds")->capture_default_str();
  proto_cmd->add_option("--time", proto.time, "evolution time (default 10 D)");
  proto_cmd->add_option("--adversary", proto.adversary, "honest | none | random | mixed | oracle | subspace:q")
      ->capture_default_str();
  proto_cmd->add_option("--mc-samples", proto.mc_samples, "independent QPUF draws")->capture_default_str();
  proto_cmd->add_flag("--exact", proto.exact, "exact acceptance probabilities (default)");
  proto_cmd->add_flag("--sampled", proto.sampled, "Bernoulli SWAP-test outcomes");
  proto_cmd->add_flag("--shortcut", proto.shortcut, "MB challenges from U|m> instead of the Choi state");
  proto_cmd->add_option("--swap-rule", proto.swap_rule, "physical | squared")->capture_default_str();
  proto_cmd->add_option("--ensemble", proto.ensemble, "gue | syk | pseudo")->capture_default_str();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("adversary-sweep", "forging probability against the bound per lambda");
  sweep_cmd->add_option("--lambda-range", sweep.lambda_range, "a:b qubits")->capture_default_str();
  sweep_cmd->add_option("--adversary", sweep.adversary, "subspace (q = lambda) | subspace:q | mixed | ...")
      ->capture_default_str();
  sweep_cmd->add_option("--scheme", sweep.scheme, "selective | mb")->capture_default_str();
  sweep_cmd->add_option("--trials", sweep.trials, "M")->capture_default_str();
  sweep_cmd->add_option("--mc-samples", sweep.mc_samples, "QPUF draws per lambda")->capture_default_str();
  sweep_cmd->add_option("--ensemble", sweep.ensemble, "gue | syk | pseudo")->capture_default_str();

  ProbesOptions probes;
  auto* probes_cmd = app.add_subcommand("probes", "chaos probe curves");
  add_probe(probes_cmd, probes, true);

  ContrastOptions contrast;
  auto* contrast_cmd = app.add_subcommand("contrast", "compare one probe across two ensembles");
  contrast_cmd->add_option("--a", contrast.a, "first ensemble")->capture_default_str();
  contrast_cmd->add_option("--b", contrast.b, "second ensemble")->capture_default_str();
  add_probe(contrast_cmd, contrast.probe, false);

  WeingartenOptions wg;
  auto* wg_cmd = app.add_subcommand("weingarten-check", "closed form against Haar Monte Carlo");
  wg_cmd->add_option("--dim", wg.dim, "dimension D")->capture_default_str();
  wg_cmd->add_option("--samples", wg.samples, "Haar samples")->capture_default_str();
  wg_cmd->add_option("--k", wg.k, "basis index")->capture_default_str();

  ResourceOptions res;
  auto* res_cmd = app.add_subcommand("resource", "qubits needed for a target forging probability");
  res_cmd->add_option("--prob", res.prob, "target probability p in (0, 1)");
  res_cmd->add_flag("--sweep", res.sweep, "CSV over log-spaced p in [p-min, 1)");
  res_cmd->add_option("--p-min", res.p_min, "sweep lower end")->capture_default_str();
  res_cmd->add_option("--points", res.points, "sweep points")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    qpuf::set_default_threads(g.threads);
    if (gen_cmd->parsed()) return run_gen(g, gen);
    if (spectral_cmd->parsed()) return run_spectral(g, spectral);
    if (sff_cmd->parsed()) return run_sff(g, sff);
    if (proto_cmd->parsed()) return run_protocol_cmd(g, proto);
    if (sweep_cmd->parsed()) return run_adversary_sweep(g, sweep);
    if (probes_cmd->parsed()) return run_probes(g, probes);
    if (contrast_cmd->parsed()) return run_contrast(g, contrast);
    if (wg_cmd->parsed()) return run_weingarten_check(g, wg);
    if (res_cmd->parsed()) return run_resource(g, res);
  } catch (const qpuf::Error& e) {
    std::cerr << "error [" << qpuf::to_string(e.kind()) << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
