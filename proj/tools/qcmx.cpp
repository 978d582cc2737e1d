// Copyright 2026 The qcmx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <qcmx/app.hpp>

namespace {

struct Options {
  qcmx::RunConfig config;
  std::string state = "hf";
  std::string pool = "pauli";
  std::string recursion = "cioslowski";
  std::string ordering = "interleaved";
  std::string scan_list;
  std::string jw_out = "qubit_hamiltonian.txt";
};

void add_source(CLI::App* cmd, Options& o) {
  auto* f = cmd->add_option("--fcidump", o.config.fcidump_path, "FCIDUMP integral file")
                ->check(CLI::ExistingFile);
  auto* q = cmd->add_option("--qubit-ham", o.config.qubit_ham_path, "Qubit Hamiltonian file")
                ->check(CLI::ExistingFile);
  f->excludes(q);
  cmd->add_option("--ordering", o.ordering, "Spin-orbital ordering")
      ->check(CLI::IsMember({"interleaved"}));
  cmd->add_option("--out", o.config.out_dir, "Output directory")->capture_default_str();
}

void add_energy_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--state", o.state, "Trial state")
      ->check(CLI::IsMember({"hf", "adapt1", "adapt-full", "file"}))
      ->capture_default_str();
  cmd->add_option("--state-file", o.config.state_file, "Amplitude file for --state file");
  cmd->add_option("--reference", o.config.reference,
                  "Reference bitstring (qubit 0 first) for qubit Hamiltonians");
  cmd->add_option("--pool", o.pool, "ADAPT operator pool")
      ->check(CLI::IsMember({"pauli", "fermionic"}))
      ->capture_default_str();
  cmd->add_option("--order", o.config.orders, "Expansion orders K")->delimiter(',');
  cmd->add_option("--epsilon", o.config.epsilons, "Coefficient thresholds")->delimiter(',');
  cmd->add_option("--cache", o.config.cache_path, "Expectation cache file (read and written)");
  cmd->add_option("--grad-stop", o.config.grad_stop, "ADAPT gradient-norm threshold")
      ->capture_default_str();
  cmd->add_option("--vqe-tol", o.config.vqe_tol, "VQE energy tolerance (Hartree)")
      ->capture_default_str();
  cmd->add_option("--adapt-max-iter", o.config.adapt_max_iterations,
                  "Maximum ADAPT iterations for adapt-full")
      ->capture_default_str();
  cmd->add_option("--cmx-recursion", o.recursion, "S-table recursion")
      ->check(CLI::IsMember({"cioslowski", "as-printed"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qcmx: moment-based ground-state energy estimates for qubit Hamiltonians"};
  app.require_subcommand(1);
  Options o;

  auto* fci = app.add_subcommand("fci", "Exact lowest levels by dense diagonalization");
  add_source(fci, o);

  auto* energy = app.add_subcommand("energy", "CMX and PDS energies for a trial state");
  add_source(energy, o);
  add_energy_options(energy, o);

  auto* scan = app.add_subcommand("scan", "Energy table over a list of Hamiltonians");
  scan->add_option("list", o.scan_list, "File of '<coordinate> <path>' lines")
      ->required()
      ->check(CLI::ExistingFile);
  scan->add_option("--out", o.config.out_dir, "Output directory")->capture_default_str();
  add_energy_options(scan, o);

  auto* jw = app.add_subcommand("jw", "Write the Jordan-Wigner qubit Hamiltonian");
  add_source(jw, o);
  jw->add_option("-o,--output", o.jw_out, "Output file")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? qcmx::kExitOk : qcmx::kExitError;
  }

  try {
    o.config.state = qcmx::parse_state_kind(o.state);
    o.config.pool = qcmx::parse_pool_choice(o.pool);
    o.config.cmx_recursion = qcmx::parse_cmx_recursion(o.recursion);
    if (fci->parsed()) return qcmx::cmd_fci(o.config, std::cout);
    if (energy->parsed()) return qcmx::cmd_energy(o.config, std::cout);
    if (scan->parsed()) return qcmx::cmd_scan(o.config, o.scan_list, std::cout);
    if (jw->parsed()) return qcmx::cmd_jw(o.config, o.jw_out, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return qcmx::kExitError;
  }
  return qcmx::kExitError;
}
