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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <qcmx/adapt.hpp>
#include <qcmx/fermion.hpp>
#include <qcmx/moments.hpp>

namespace qcmx {

enum class StateKind { Hf, Adapt1, AdaptFull, File };
enum class PoolChoice { Pauli, Fermionic };

std::string to_string(StateKind s);
StateKind parse_state_kind(const std::string& text);
std::string to_string(PoolChoice p);
PoolChoice parse_pool_choice(const std::string& text);

struct RunConfig {
  std::string fcidump_path;
  std::string qubit_ham_path;
  StateKind state = StateKind::Hf;
  std::string state_file;
  /// Reference bitstring for qubit Hamiltonians; FCIDUMP input uses Aufbau.
  std::string reference;
  PoolChoice pool = PoolChoice::Pauli;
  std::vector<int> orders{2};
  std::vector<double> epsilons{0.0, 1e-2, 1e-3, 1e-4, 1e-5};
  /// Cache file read before and written after the run. Empty: start cold and
  /// write `<out_dir>/cache.json`.
  std::string cache_path;
  std::string out_dir = "out";
  double grad_stop = 1e-2;
  double vqe_tol = 1e-7;
  int adapt_max_iterations = 50;
  CmxRecursion cmx_recursion = CmxRecursion::Cioslowski;

  /// Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitGuard = 2;

struct Problem {
  std::string source;
  PauliSum hamiltonian;
  std::optional<FermionHamiltonian> fermion;
  BasisState reference;
  /// Lowest eigenvalue in the reference particle sector (the whole space for
  /// qubit Hamiltonians).
  double fci_energy = 0.0;
  /// Lowest eigenvalue over the whole register.
  double global_min = 0.0;
  /// Up to eight lowest levels of the spectrum `fci_energy` is taken from.
  std::vector<double> fci_levels;
};

Problem load_problem(const RunConfig& config);

struct EnergyRow {
  std::string method;
  int order = 0;
  double epsilon = 0.0;
  double energy = 0.0;
  double error_vs_fci = 0.0;
  std::size_t depth = 0;
  std::size_t cache_hits = 0;
  std::size_t cache_misses = 0;
};

struct EnergyReport {
  std::vector<EnergyRow> rows;
  std::vector<MeasurementReport> measurements;
  std::vector<std::string> guard_events;
  std::optional<AdaptTrace> adapt_trace;
  AnsatzProgram program;
  ExpectationCache cache;
  double fci_energy = 0.0;
  double global_min = 0.0;
  double state_energy = 0.0;

  bool guard_tripped() const noexcept { return !guard_events.empty(); }
};

/// Prepares the configured state and evaluates every (K, epsilon) pair.
/// `cache` may be pre-populated for the same state.
EnergyReport run_energy(const RunConfig& config, const Problem& problem,
                        ExpectationCache cache = {});

/// CSV `method,K,epsilon,energy,error_vs_fci,depth,cache_hits,cache_misses`,
/// optionally prefixed by a `coordinate` column.
void write_energy_csv(std::ostream& out, const std::vector<EnergyRow>& rows,
                      const std::vector<std::string>* coordinates = nullptr);

/// Lowest eight levels as `level,energy`.
int cmd_fci(const RunConfig& config, std::ostream& log);
int cmd_energy(const RunConfig& config, std::ostream& log);
/// `list_path` holds `<coordinate> <hamiltonian path>` lines; relative paths
/// resolve against the list file's directory. Qubit-Hamiltonian files are
/// recognized by their `n_qubits:` header, anything else is read as FCIDUMP.
int cmd_scan(const RunConfig& config, const std::string& list_path, std::ostream& log);
/// Writes the Jordan-Wigner qubit Hamiltonian of an FCIDUMP.
int cmd_jw(const RunConfig& config, const std::string& out_path, std::ostream& log);

}  // namespace qcmx
