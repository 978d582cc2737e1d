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

#include <qcmx/statevector.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <qcmx/errors.hpp>

namespace qcmx {

namespace {

constexpr double kNormTol = 1e-10;
constexpr double kImagTol = 1e-10;

// P|j> = i^{|x&z|} (-1)^{|j&z|} |j ^ x>
inline Complex word_phase_on(std::uint64_t basis, const PauliWord& w, Complex y_phase) {
  return (std::popcount(basis & w.z_mask()) & 1) ? -y_phase : y_phase;
}

inline Complex y_phase_of(const PauliWord& w) {
  static const Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[w.y_count() % 4];
}

void require_dims(const Statevector& s, std::size_t n_qubits, const char* where) {
  if (s.n_qubits() != n_qubits) {
    throw DimensionError(std::string(where) + ": state has " + std::to_string(s.n_qubits()) +
                         " qubits, operator has " + std::to_string(n_qubits));
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// BasisState

BasisState::BasisState(std::size_t n_qubits, std::uint64_t bits)
    : n_qubits_(n_qubits), bits_(bits) {
  if (n_qubits > kMaxQubits) throw DimensionError("basis state wider than 64 qubits");
  if (n_qubits < 64 && (bits >> n_qubits) != 0) {
    throw DimensionError("basis state has bits beyond its qubit count");
  }
}

BasisState BasisState::parse(std::string_view text) {
  if (text.empty() || text.size() > kMaxQubits) {
    throw ParseError("invalid bitstring length");
  }
  std::uint64_t bits = 0;
  for (std::size_t q = 0; q < text.size(); ++q) {
    if (text[q] == '1') {
      bits |= std::uint64_t{1} << q;
    } else if (text[q] != '0') {
      throw ParseError("bitstring '" + std::string(text) + "' contains non-binary characters");
    }
  }
  return BasisState(text.size(), bits);
}

std::string BasisState::str() const {
  std::string out(n_qubits_, '0');
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    if (test(q)) out[q] = '1';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Statevector

Statevector::Statevector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  const std::size_t dim = amps_.size();
  if (dim == 0 || !std::has_single_bit(dim)) {
    throw DimensionError("amplitude count must be a power of two");
  }
  n_qubits_ = static_cast<std::size_t>(std::countr_zero(dim));
  if (n_qubits_ > kMaxSimQubits) throw DimensionError("statevector too large");
  if (std::abs(norm() - 1.0) > kNormTol) {
    std::ostringstream msg;
    msg << "statevector norm " << std::setprecision(17) << norm() << " differs from 1";
    throw NumericalError(msg.str());
  }
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::apply_pauli(const PauliWord& word) {
  if (word.n_qubits() != n_qubits_) throw DimensionError("apply_pauli: qubit count mismatch");
  const Complex yp = y_phase_of(word);
  std::vector<Complex> out(amps_.size());
  const std::uint64_t x = word.x_mask();
  for (std::uint64_t j = 0; j < amps_.size(); ++j) {
    out[j ^ x] = word_phase_on(j, word, yp) * amps_[j];
  }
  amps_ = std::move(out);
}

void Statevector::apply_pauli_rotation(const PauliWord& word, double angle) {
  if (word.n_qubits() != n_qubits_) {
    throw DimensionError("apply_pauli_rotation: qubit count mismatch");
  }
  if (angle == 0.0) return;
  const double c = std::cos(angle);
  const Complex is{0.0, std::sin(angle)};
  if (word.is_identity()) {
    const Complex phase = c + is;
    for (auto& a : amps_) a *= phase;
    return;
  }
  const Complex yp = y_phase_of(word);
  const std::uint64_t x = word.x_mask();
  std::vector<Complex> out(amps_.size());
  for (std::uint64_t k = 0; k < amps_.size(); ++k) {
    const std::uint64_t j = k ^ x;
    out[k] = c * amps_[k] + is * word_phase_on(j, word, yp) * amps_[j];
  }
  amps_ = std::move(out);
}

void Statevector::apply_global_phase(Complex phase) {
  for (auto& a : amps_) a *= phase;
}

// ---------------------------------------------------------------------------
// Programs

std::vector<double> AnsatzProgram::thetas() const {
  std::vector<double> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.theta);
  return out;
}

void AnsatzProgram::set_thetas(std::span<const double> thetas) {
  if (thetas.size() != steps.size()) {
    throw DimensionError("parameter count " + std::to_string(thetas.size()) +
                         " does not match program length " + std::to_string(steps.size()));
  }
  for (std::size_t i = 0; i < steps.size(); ++i) steps[i].theta = thetas[i];
}

Statevector prepare_basis_state(const BasisState& bits) {
  if (bits.n_qubits() > kMaxSimQubits) throw DimensionError("basis state too large to simulate");
  std::vector<Complex> amps(std::size_t{1} << bits.n_qubits());
  amps[bits.bits()] = 1.0;
  return Statevector(std::move(amps));
}

Statevector apply_generator_exp(const Statevector& state, const PoolElement& element,
                                double theta) {
  require_dims(state, element.n_qubits(), "apply_generator_exp");
  Statevector out = state;
  if (theta == 0.0) return out;
  for (const auto& [word, c] : element.generator.terms()) {
    if (std::abs(c.real()) > kImagTol * std::max(1.0, std::abs(c))) {
      throw NumericalError("generator term " + word.str() + " of '" + element.label +
                           "' is not anti-Hermitian");
    }
    // exp(θ · i r P) = cos(θr) + i sin(θr) P
    out.apply_pauli_rotation(word, theta * c.imag());
  }
  return out;
}

Statevector prepare_ansatz_state(const AnsatzProgram& program) {
  Statevector state = prepare_basis_state(program.reference);
  for (const auto& step : program.steps) {
    state = apply_generator_exp(state, step.element, step.theta);
  }
  return state;
}

double expect_word(const Statevector& state, const PauliWord& w) {
  require_dims(state, w.n_qubits(), "expect_word");
  const auto amps = state.amplitudes();
  Complex acc{};
  if (w.x_mask() == 0) {
    // Diagonal word: no Y factors, phase is the Z parity.
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
      const double p = std::norm(amps[k]);
      acc += (std::popcount(k & w.z_mask()) & 1) ? -p : p;
    }
  } else {
    const Complex yp = y_phase_of(w);
    const std::uint64_t x = w.x_mask();
    for (std::uint64_t k = 0; k < amps.size(); ++k) {
      const std::uint64_t j = k ^ x;
      acc += std::conj(amps[k]) * word_phase_on(j, w, yp) * amps[j];
    }
  }
  if (std::abs(acc.imag()) > kImagTol) {
    throw NumericalError("expectation of " + w.str() + " has imaginary residue");
  }
  return std::clamp(acc.real(), -1.0, 1.0);
}

double expect_sum(const Statevector& state, const PauliSum& a) {
  require_dims(state, a.n_qubits(), "expect_sum");
  if (!a.is_hermitian(kHermitianClampTol)) {
    throw NumericalError("expect_sum requires a Hermitian operator");
  }
  double e = 0.0;
  for (const auto& [w, c] : a.terms()) e += c.real() * expect_word(state, w);
  return e;
}

std::size_t estimate_depth(const AnsatzProgram& program) {
  std::size_t depth = 1;
  for (const auto& step : program.steps) {
    for (const auto& [word, c] : step.element.generator.terms()) {
      const std::size_t w = word.weight();
      if (w > 0) depth += 2 * w + 1;
    }
  }
  return depth;
}

void write_amplitudes(std::ostream& out, const Statevector& state) {
  const auto amps = state.amplitudes();
  out << std::setprecision(17);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    out << i << " " << amps[i].real() << " " << amps[i].imag() << "\n";
  }
}

Statevector read_amplitudes(std::istream& in) {
  std::vector<Complex> amps;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::size_t index = 0;
    double re = 0.0, im = 0.0;
    if (!(fields >> index)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("expected 'index real imag'", lineno);
    }
    if (!(fields >> re >> im)) throw ParseError("expected 'index real imag'", lineno);
    if (index > (std::size_t{1} << kMaxSimQubits)) throw ParseError("index too large", lineno);
    if (index >= amps.size()) amps.resize(index + 1);
    amps[index] = {re, im};
  }
  if (amps.empty()) throw ParseError("no amplitudes");
  amps.resize(std::bit_ceil(amps.size()));
  return Statevector(std::move(amps));
}

}  // namespace qcmx
