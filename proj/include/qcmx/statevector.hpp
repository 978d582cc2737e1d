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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <qcmx/pauli.hpp>
#include <qcmx/pool.hpp>

namespace qcmx {

/**
 * @brief A computational basis state.
 *
 * Text form lists qubits left to right starting at qubit 0, so "1100" has
 * qubits 0 and 1 set and maps to basis index 3.
 */
class BasisState {
 public:
  BasisState() = default;
  BasisState(std::size_t n_qubits, std::uint64_t bits);

  static BasisState parse(std::string_view text);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t bits() const noexcept { return bits_; }
  bool test(std::size_t qubit) const { return (bits_ >> qubit) & 1U; }
  std::string str() const;

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::uint64_t bits_ = 0;
};

/// Registers above this size are refused by the simulator.
inline constexpr std::size_t kMaxSimQubits = 24;

/**
 * @brief Normalized 2^N amplitude vector, little-endian: qubit 0 is the least
 * significant bit of the basis index.
 */
class Statevector {
 public:
  Statevector() = default;

  /// Takes ownership of `amplitudes`; size must be a power of two and the
  /// norm must be 1 within 1e-10.
  explicit Statevector(std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

  /// In-place exp(i·angle·P).
  void apply_pauli_rotation(const PauliWord& word, double angle);

  /// Applies P (no rotation) in place.
  void apply_pauli(const PauliWord& word);

  /// Multiplies every amplitude by `phase` (|phase| = 1).
  void apply_global_phase(Complex phase);

 private:
  std::size_t n_qubits_ = 0;
  std::vector<Complex> amps_;
};

struct AnsatzStep {
  PoolElement element;
  double theta = 0.0;
};

/// exp(θ_n G_n) ... exp(θ_1 G_1)|reference>: step 0 acts first.
struct AnsatzProgram {
  BasisState reference;
  std::vector<AnsatzStep> steps;

  std::vector<double> thetas() const;
  void set_thetas(std::span<const double> thetas);
  std::size_t n_qubits() const noexcept { return reference.n_qubits(); }
};

Statevector prepare_basis_state(const BasisState& bits);

/// exp(θG)|state>. Multi-term generators are applied as one first-order
/// Trotter pass over their terms in canonical word order.
Statevector apply_generator_exp(const Statevector& state, const PoolElement& element,
                                double theta);

Statevector prepare_ansatz_state(const AnsatzProgram& program);

/// <s|w|s>, real by Hermiticity of w.
double expect_word(const Statevector& state, const PauliWord& w);

/// sum_k α_k <s|h_k|s> for a Hermitian sum.
double expect_sum(const Statevector& state, const PauliSum& a);

/**
 * @brief Circuit depth under a CNOT-staircase decomposition.
 *
 * The reference preparation is one layer of X gates. Each exponential of a
 * weight-w word (w >= 1) costs one basis-change layer, w-1 CNOTs down the
 * staircase, one Rz, w-1 CNOTs back up and one basis-restore layer:
 * 2w + 1 layers. Identity terms are free; multi-term generators cost the sum
 * of their words.
 */
std::size_t estimate_depth(const AnsatzProgram& program);

/// Text dump, one `index real imag` line per amplitude.
void write_amplitudes(std::ostream& out, const Statevector& state);
Statevector read_amplitudes(std::istream& in);

}  // namespace qcmx
