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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include <qcmx/app.hpp>
#include <qcmx/errors.hpp>
#include <qcmx/oracle.hpp>

namespace qcmx {

namespace fs = std::filesystem;

std::string to_string(StateKind s) {
  switch (s) {
    case StateKind::Hf: return "hf";
    case StateKind::Adapt1: return "adapt1";
    case StateKind::AdaptFull: return "adapt-full";
    case StateKind::File: return "file";
  }
  return "unknown";
}

StateKind parse_state_kind(const std::string& text) {
  if (text == "hf") return StateKind::Hf;
  if (text == "adapt1") return StateKind::Adapt1;
  if (text == "adapt-full") return StateKind::AdaptFull;
  if (text == "file") return StateKind::File;
  throw std::invalid_argument("unknown state '" + text + "'");
}

std::string to_string(PoolChoice p) { return p == PoolChoice::Pauli ? "pauli" : "fermionic"; }

PoolChoice parse_pool_choice(const std::string& text) {
  if (text == "pauli") return PoolChoice::Pauli;
  if (text == "fermionic") return PoolChoice::Fermionic;
  throw std::invalid_argument("unknown pool '" + text + "'");
}

void RunConfig::validate() const {
  if (fcidump_path.empty() == qubit_ham_path.empty()) {
    throw std::invalid_argument("exactly one of --fcidump and --qubit-ham is required");
  }
  if (orders.empty()) throw std::invalid_argument("at least one order is required");
  for (int k : orders) {
    if (k < 1) throw std::invalid_argument("orders must be at least 1");
  }
  if (epsilons.empty()) throw std::invalid_argument("at least one epsilon is required");
  for (double e : epsilons) {
    if (!(e >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
  }
  if (state == StateKind::File && state_file.empty()) {
    throw std::invalid_argument("--state file needs --state-file");
  }
  if (pool == PoolChoice::Fermionic && fcidump_path.empty() &&
      (state == StateKind::Adapt1 || state == StateKind::AdaptFull)) {
    throw std::invalid_argument("the fermionic pool needs an FCIDUMP Hamiltonian");
  }
  if (!(grad_stop > 0.0) || !(vqe_tol > 0.0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (adapt_max_iterations < 1) throw std::invalid_argument("--adapt-max-iter must be >= 1");
}

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_eps(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::vector<double> lowest(const Eigen::VectorXd& values, Eigen::Index n) {
  std::vector<double> out;
  for (Eigen::Index i = 0; i < std::min(n, values.size()); ++i) out.push_back(values(i));
  return out;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

Problem load_problem(const RunConfig& config) {
  Problem p;
  if (!config.fcidump_path.empty()) {
    p.source = config.fcidump_path;
    FermionHamiltonian f = parse_fcidump(config.fcidump_path);
    p.hamiltonian = jordan_wigner(f);
    p.reference = hf_bitstring(f);
    p.fermion = std::move(f);
  } else {
    p.source = config.qubit_ham_path;
    p.hamiltonian = read_qubit_hamiltonian_file(config.qubit_ham_path);
    if (config.reference.empty()) {
      p.reference = BasisState(p.hamiltonian.n_qubits(), 0);
    } else {
      p.reference = BasisState::parse(config.reference);
    }
  }
  if (p.reference.n_qubits() != p.hamiltonian.n_qubits()) {
    throw DimensionError("reference has " + std::to_string(p.reference.n_qubits()) +
                         " qubits, Hamiltonian has " +
                         std::to_string(p.hamiltonian.n_qubits()));
  }
  const DenseOperator dense = sum_to_matrix(p.hamiltonian);
  const Eigen::VectorXd all = exact_spectrum(dense).values;
  p.global_min = all(0);
  if (p.fermion) {
    const Eigen::VectorXd sector =
        sector_spectrum(dense, p.fermion->n_alpha(), p.fermion->n_beta());
    p.fci_energy = sector(0);
    p.fci_levels = lowest(sector, 8);
  } else {
    p.fci_energy = p.global_min;
    p.fci_levels = lowest(all, 8);
  }
  return p;
}

EnergyReport run_energy(const RunConfig& config, const Problem& problem, ExpectationCache cache) {
  config.validate();
  const PauliSum& h = problem.hamiltonian;
  EnergyReport report;
  report.fci_energy = problem.fci_energy;
  report.global_min = problem.global_min;
  report.program.reference = problem.reference;

  Statevector state;
  switch (config.state) {
    case StateKind::Hf:
      state = prepare_basis_state(problem.reference);
      break;
    case StateKind::File: {
      std::ifstream in(config.state_file);
      if (!in) throw std::runtime_error("cannot open state file " + config.state_file);
      state = read_amplitudes(in);
      break;
    }
    case StateKind::Adapt1:
    case StateKind::AdaptFull: {
      std::vector<PoolElement> pool;
      if (config.pool == PoolChoice::Pauli) {
        pool = build_pauli_pool(h.n_qubits());
      } else {
        pool = build_fermionic_singlet_pool(*problem.fermion);
      }
      AdaptOptions opts;
      opts.grad_stop = config.grad_stop;
      opts.max_iterations = config.state == StateKind::Adapt1 ? 1 : config.adapt_max_iterations;
      opts.vqe.energy_tol = config.vqe_tol;
      AdaptResult ar = adapt_run(h, pool, problem.reference, opts);
      report.program = std::move(ar.program);
      report.adapt_trace = std::move(ar.trace);
      state = prepare_ansatz_state(report.program);
      break;
    }
  }
  if (state.n_qubits() != h.n_qubits()) {
    throw DimensionError("state and Hamiltonian qubit counts differ");
  }
  report.state_energy = expect_sum(state, h);
  const std::size_t depth = config.state == StateKind::File ? 0 : estimate_depth(report.program);

  const int max_order = *std::max_element(config.orders.begin(), config.orders.end());
  const std::vector<PauliSum> powers = sum_power(h, 2 * max_order - 1);
  const std::string prefix = to_string(config.state) + "/";

  for (double eps : config.epsilons) {
    const auto before = cache.counters();
    const MomentTable table = raw_moments(state, powers, cache, eps);
    const auto after = cache.counters();
    const std::size_t hits = after.hits - before.hits;
    const std::size_t misses = after.misses - before.misses;
    auto add = [&](const std::string& method, int k, double e) {
      report.rows.push_back({prefix + method, k, eps, e, e - problem.fci_energy, depth, hits,
                             misses});
    };
    add("EXPVAL", 0, table.raw[0]);
    for (int k : config.orders) {
      const CmxResult cmx = cmx_energy(table.connected, k, config.cmx_recursion);
      add("CMX", k, cmx.energy);
      if (cmx.degenerate) {
        report.guard_events.push_back("CMX(" + std::to_string(k) + ") degenerate at epsilon " +
                                      fmt_eps(eps));
      }
      const PdsResult pds = pds_energy(table.raw, k);
      add("PDS", k, pds.ground_estimate);
      for (std::size_t r = 0; r < pds.excited_estimates.size(); ++r) {
        add("PDS_ROOT" + std::to_string(r + 2), k, pds.excited_estimates[r]);
      }
      if (pds.fell_back) {
        report.guard_events.push_back("PDS(" + std::to_string(k) + ") fell back to order " +
                                      std::to_string(pds.order) + " at epsilon " +
                                      fmt_eps(eps));
      }
      if (pds.no_real_root) {
        report.guard_events.push_back("PDS(" + std::to_string(k) + ") has no real root at epsilon " +
                                      fmt_eps(eps));
      }
    }
    report.measurements.push_back(measurement_report(table, h, max_order));
  }
  report.cache = std::move(cache);
  return report;
}

void write_energy_csv(std::ostream& out, const std::vector<EnergyRow>& rows,
                      const std::vector<std::string>* coordinates) {
  if (coordinates && coordinates->size() != rows.size()) {
    throw std::invalid_argument("one coordinate per row is required");
  }
  if (coordinates) out << "coordinate,";
  out << "method,K,epsilon,energy,error_vs_fci,depth,cache_hits,cache_misses\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EnergyRow& r = rows[i];
    if (coordinates) out << (*coordinates)[i] << ',';
    out << r.method << ',' << r.order << ',' << fmt_eps(r.epsilon) << ',' << fmt(r.energy) << ','
        << fmt(r.error_vs_fci) << ',' << r.depth << ',' << r.cache_hits << ',' << r.cache_misses
        << '\n';
  }
}

int cmd_fci(const RunConfig& config, std::ostream& log) {
  if (config.fcidump_path.empty() == config.qubit_ham_path.empty()) {
    throw std::invalid_argument("exactly one of --fcidump and --qubit-ham is required");
  }
  const Problem p = load_problem(config);
  fs::create_directories(config.out_dir);
  auto out = open_out(fs::path(config.out_dir) / "fci.csv");
  out << "level,energy\n";
  for (std::size_t i = 0; i < p.fci_levels.size(); ++i) {
    out << i << ',' << fmt(p.fci_levels[i]) << '\n';
    log << "level " << i << ": " << fmt(p.fci_levels[i]) << '\n';
  }
  return kExitOk;
}

namespace {

nlohmann::json summary_json(const RunConfig& config, const Problem& p, const EnergyReport& r) {
  nlohmann::json j;
  j["hamiltonian"] = p.source;
  j["n_qubits"] = p.hamiltonian.n_qubits();
  j["n_terms"] = p.hamiltonian.size();
  j["state"] = to_string(config.state);
  j["reference"] = p.reference.str();
  j["fci_energy"] = p.fci_energy;
  j["global_min"] = p.global_min;
  j["state_energy"] = r.state_energy;
  j["cmx_recursion"] = to_string(config.cmx_recursion);
  if (r.adapt_trace) {
    const AdaptTrace& t = *r.adapt_trace;
    j["adapt"] = {{"pool", to_string(config.pool)},
                  {"operators", r.program.steps.size()},
                  {"grad_stop", config.grad_stop},
                  {"converged", t.converged},
                  {"vqe_converged", t.vqe_converged},
                  {"final_grad_norm", t.iterations.back().grad_norm}};
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& s : r.program.steps) labels.push_back(s.element.label);
    j["adapt"]["labels"] = labels;
  }
  j["guard_events"] = r.guard_events;
  j["guard_tripped"] = r.guard_tripped();
  nlohmann::json meas = nlohmann::json::array();
  for (const auto& m : r.measurements) {
    meas.push_back({{"epsilon", m.epsilon}, {"order", m.order}, {"fraction_kept", m.fraction_kept}});
  }
  j["measurements"] = meas;
  const auto& c = r.cache.counters();
  j["cache"] = {{"entries", r.cache.size()},
                {"hits", c.hits},
                {"misses", c.misses},
                {"skipped_by_threshold", c.skipped_by_threshold}};
  return j;
}

}  // namespace

int cmd_energy(const RunConfig& config, std::ostream& log) {
  config.validate();
  const Problem p = load_problem(config);
  ExpectationCache cache;
  if (!config.cache_path.empty() && fs::exists(config.cache_path)) {
    cache = cache_load_file(config.cache_path);
  }
  EnergyReport r = run_energy(config, p, std::move(cache));

  const fs::path dir(config.out_dir);
  fs::create_directories(dir);
  {
    auto out = open_out(dir / "energy.csv");
    write_energy_csv(out, r.rows);
  }
  for (const auto& m : r.measurements) {
    auto out = open_out(dir / ("measurements_" + fmt_eps(m.epsilon) + ".csv"));
    write_measurement_csv(out, m);
  }
  if (r.adapt_trace) {
    auto out = open_out(dir / "adapt_trace.csv");
    write_adapt_trace_csv(out, *r.adapt_trace);
  }
  {
    auto out = open_out(dir / "summary.json");
    out << summary_json(config, p, r).dump(2) << '\n';
  }
  cache_save_file(config.cache_path.empty() ? (dir / "cache.json").string() : config.cache_path,
                  r.cache);

  log << "FCI reference " << fmt(p.fci_energy) << ", state energy " << fmt(r.state_energy)
      << '\n';
  if (r.adapt_trace && !r.adapt_trace->vqe_converged) {
    log << "warning: a VQE sub-optimization did not converge\n";
  }
  for (const auto& e : r.guard_events) log << "guard: " << e << '\n';
  return r.guard_tripped() ? kExitGuard : kExitOk;
}

int cmd_scan(const RunConfig& config, const std::string& list_path, std::ostream& log) {
  std::ifstream list(list_path);
  if (!list) throw std::runtime_error("cannot open scan list " + list_path);
  const fs::path base = fs::path(list_path).parent_path();

  std::vector<EnergyRow> rows;
  std::vector<std::string> coords;
  std::optional<std::size_t> n_qubits;
  bool guard = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(list, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string coord, path;
    if (!(ls >> coord)) continue;
    if (!(ls >> path)) throw ParseError("expected '<coordinate> <path>'", line_no);
    fs::path file(path);
    if (file.is_relative()) file = base / file;

    RunConfig item = config;
    item.cache_path.clear();
    item.fcidump_path.clear();
    item.qubit_ham_path.clear();
    std::ifstream probe(file);
    if (!probe) throw std::runtime_error("cannot open " + file.string());
    std::string first;
    probe >> first;
    if (first.rfind("n_qubits", 0) == 0) {
      item.qubit_ham_path = file.string();
    } else {
      item.fcidump_path = file.string();
    }
    const Problem p = load_problem(item);
    if (n_qubits && *n_qubits != p.hamiltonian.n_qubits()) {
      throw DimensionError("scan mixes " + std::to_string(*n_qubits) + "- and " +
                           std::to_string(p.hamiltonian.n_qubits()) + "-qubit Hamiltonians");
    }
    n_qubits = p.hamiltonian.n_qubits();
    const EnergyReport r = run_energy(item, p);
    for (const auto& e : r.guard_events) log << coord << ": guard: " << e << '\n';
    guard = guard || r.guard_tripped();
    for (const auto& row : r.rows) {
      rows.push_back(row);
      coords.push_back(coord);
    }
  }
  fs::create_directories(config.out_dir);
  auto out = open_out(fs::path(config.out_dir) / "scan.csv");
  write_energy_csv(out, rows, &coords);
  return guard ? kExitGuard : kExitOk;
}

int cmd_jw(const RunConfig& config, const std::string& out_path, std::ostream& log) {
  if (config.fcidump_path.empty()) throw std::invalid_argument("jw needs --fcidump");
  const FermionHamiltonian f = parse_fcidump(config.fcidump_path);
  const PauliSum h = jordan_wigner(f);
  if (const fs::path parent = fs::path(out_path).parent_path(); !parent.empty()) {
    fs::create_directories(parent);
  }
  write_qubit_hamiltonian_file(out_path, h);
  log << h.n_qubits() << " qubits, " << h.size() << " terms\n";
  return kExitOk;
}

}  // namespace qcmx
