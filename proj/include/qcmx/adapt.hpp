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
#include <string>
#include <vector>

#include <qcmx/pauli.hpp>
#include <qcmx/pool.hpp>
#include <qcmx/statevector.hpp>

namespace qcmx {

struct VqeOptions {
  /// Converged once an accepted step improves the energy by less than this
  /// (Hartree) and the gradient norm is below `grad_tol`.
  double energy_tol = 1e-7;
  double grad_tol = 1e-6;
  int max_iterations = 1000;
  /// Central-difference step for generators the shift rule does not cover.
  double fd_step = 1e-5;
};

struct VqeResult {
  double energy = 0.0;
  std::vector<double> thetas;
  int n_iterations = 0;
  bool converged = false;
};

/// E(θ) = <Ψ(θ)|H|Ψ(θ)> for the program's current parameters.
double ansatz_energy(const PauliSum& h, const AnsatzProgram& program);

/**
 * @brief dE/dθ_k for every step of the program.
 *
 * Single-term generators i·r·P use the two-point shift rule
 * r·[E(θ + π/(4r)) - E(θ - π/(4r))], exact for exp(iθrP). Multi-term
 * (Trotterized fermionic) generators fall back to central differences.
 */
std::vector<double> parameter_shift_gradient(const PauliSum& h, const AnsatzProgram& program,
                                             double fd_step = 1e-5);

/// Deterministic BFGS from `theta0` with analytic gradients. Returns the best
/// parameters seen.
VqeResult vqe_minimize(const PauliSum& h, const AnsatzProgram& program,
                       const std::vector<double>& theta0, const VqeOptions& options = {});

struct AdaptOptions {
  /// Stop once the Euclidean norm of the pool gradient vector drops below.
  double grad_stop = 1e-2;
  /// Maximum number of operators appended. 1 yields single-operator states.
  int max_iterations = 50;
  VqeOptions vqe;
};

/// Snapshot of the ansatz after `iteration` operators have been appended.
struct AdaptIteration {
  int iteration = 0;
  /// Operator selected from this state; empty on the terminal record.
  std::string label;
  std::vector<double> pool_gradients;
  double grad_norm = 0.0;
  double energy = 0.0;
  std::size_t depth = 0;
  bool vqe_converged = true;
};

struct AdaptTrace {
  std::vector<AdaptIteration> iterations;
  /// Final gradient norm fell below grad_stop.
  bool converged = false;
  /// Every VQE sub-optimization met its tolerances.
  bool vqe_converged = true;
};

struct AdaptResult {
  AnsatzProgram program;
  AdaptTrace trace;
  double energy = 0.0;
};

/// <ψ|[H, G]|ψ> for each pool element, the energy slope of appending it.
std::vector<double> pool_gradients(const PauliSum& h, const std::vector<PauliSum>& commutators,
                                   const Statevector& state);

AdaptResult adapt_run(const PauliSum& h, const std::vector<PoolElement>& pool,
                      const BasisState& reference, const AdaptOptions& options = {});

/// CSV with header `iter,label,grad_norm,energy,depth`.
void write_adapt_trace_csv(std::ostream& out, const AdaptTrace& trace);

}  // namespace qcmx
