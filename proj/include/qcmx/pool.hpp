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

#include <string>

#include <qcmx/pauli.hpp>

namespace qcmx {

enum class PoolKind { PauliWord, FermionicSingletSingle, FermionicSingletDouble };

std::string to_string(PoolKind kind);

/**
 * @brief One candidate operator for ansatz growth.
 *
 * The generator G is anti-Hermitian: every term is i·r·P with r real, so
 * exp(θG) is unitary. Pauli-word elements hold exactly one word with
 * coefficient i, i.e. exp(θG) = exp(iθP).
 */
struct PoolElement {
  std::string label;
  PauliSum generator;
  PoolKind kind = PoolKind::PauliWord;

  std::size_t n_qubits() const noexcept { return generator.n_qubits(); }
};

/// Wraps a single word as the generator i·word.
PoolElement make_pauli_element(const PauliWord& word);

}  // namespace qcmx
