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
#include <ostream>

#include <qcmx/adapt.hpp>
#include <qcmx/errors.hpp>

namespace qcmx {

std::vector<double> pool_gradients(const PauliSum& h, const std::vector<PauliSum>& commutators,
                                   const Statevector& state) {
  (void)h;
  std::vector<double> g;
  g.reserve(commutators.size());
  for (const auto& c : commutators) g.push_back(c.empty() ? 0.0 : expect_sum(state, c));
  return g;
}

AdaptResult adapt_run(const PauliSum& h, const std::vector<PoolElement>& pool,
                      const BasisState& reference, const AdaptOptions& options) {
  if (pool.empty()) throw std::invalid_argument("ADAPT needs a non-empty pool");
  if (reference.n_qubits() != h.n_qubits()) {
    throw DimensionError("reference and Hamiltonian qubit counts differ");
  }
  std::vector<PauliSum> commutators;
  commutators.reserve(pool.size());
  for (const auto& e : pool) {
    if (e.n_qubits() != h.n_qubits()) throw DimensionError("pool element qubit count mismatch");
    commutators.push_back(commutator(h, e.generator));
  }

  AdaptResult result;
  result.program.reference = reference;
  result.energy = ansatz_energy(h, result.program);

  for (int it = 0;; ++it) {
    const Statevector state = prepare_ansatz_state(result.program);
    AdaptIteration rec;
    rec.iteration = it;
    rec.pool_gradients = pool_gradients(h, commutators, state);
    double sq = 0.0;
    for (double g : rec.pool_gradients) sq += g * g;
    rec.grad_norm = std::sqrt(sq);
    rec.energy = result.energy;
    rec.depth = estimate_depth(result.program);
    rec.vqe_converged = result.trace.vqe_converged;

    if (rec.grad_norm < options.grad_stop) {
      result.trace.converged = true;
      result.trace.iterations.push_back(std::move(rec));
      break;
    }
    if (it >= options.max_iterations) {
      result.trace.iterations.push_back(std::move(rec));
      break;
    }

    std::size_t best = 0;
    for (std::size_t k = 1; k < rec.pool_gradients.size(); ++k) {
      if (std::abs(rec.pool_gradients[k]) > std::abs(rec.pool_gradients[best])) best = k;
    }
    rec.label = pool[best].label;
    result.trace.iterations.push_back(std::move(rec));

    result.program.steps.push_back({pool[best], 0.0});
    const VqeResult vqe = vqe_minimize(h, result.program, result.program.thetas(), options.vqe);
    result.program.set_thetas(vqe.thetas);
    result.energy = vqe.energy;
    if (!vqe.converged) result.trace.vqe_converged = false;
  }
  return result;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace

void write_adapt_trace_csv(std::ostream& out, const AdaptTrace& trace) {
  out << "iter,label,grad_norm,energy,depth\n";
  const auto old_precision = out.precision(17);
  for (const auto& r : trace.iterations) {
    out << r.iteration << ',' << csv_field(r.label) << ',' << r.grad_norm << ',' << r.energy << ','
        << r.depth << '\n';
  }
  out.precision(old_precision);
}

}  // namespace qcmx
