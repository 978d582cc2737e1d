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

#include <vector>

#include <Eigen/Dense>

#include <qcmx/pauli.hpp>
#include <qcmx/statevector.hpp>

namespace qcmx {

inline constexpr std::size_t kOracleMaxQubits = 12;

/// Dense 2^N x 2^N matrix in the little-endian basis of the simulator.
using DenseOperator = Eigen::MatrixXcd;

/// Builds each word entrywise from 2x2 Pauli factors. Throws SizeLimitError
/// above `max_qubits`.
DenseOperator sum_to_matrix(const PauliSum& a, std::size_t max_qubits = kOracleMaxQubits);

struct Spectrum {
  /// Ascending.
  Eigen::VectorXd values;
  /// Column k pairs with values(k); empty unless requested.
  Eigen::MatrixXcd vectors;
};

/// Full spectrum of a Hermitian matrix. Throws NumericalError if `a` is not
/// Hermitian within `tol`.
Spectrum exact_spectrum(const DenseOperator& a, bool with_vectors = false, double tol = 1e-10);

/// Basis indices with `n_alpha` set even qubits and `n_beta` set odd qubits
/// (interleaved spin-orbital ordering).
std::vector<std::size_t> sector_indices(std::size_t n_qubits, int n_alpha, int n_beta);

/// Ascending eigenvalues of `a` restricted to a fixed (N_alpha, N_beta)
/// sector.
Eigen::VectorXd sector_spectrum(const DenseOperator& a, int n_alpha, int n_beta);

/// <psi|A^n|psi> for n = 1..max_power by repeated matrix-vector products.
std::vector<double> oracle_moments(const Statevector& state, const DenseOperator& a,
                                   int max_power);

}  // namespace qcmx
