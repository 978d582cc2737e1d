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

#include <array>
#include <bit>
#include <stdexcept>

#include <qcmx/errors.hpp>
#include <qcmx/oracle.hpp>

namespace qcmx {

namespace {

using Mat2 = std::array<std::array<Complex, 2>, 2>;

const Mat2& pauli_matrix(char op) {
  static const Mat2 kI{{{1.0, 0.0}, {0.0, 1.0}}};
  static const Mat2 kX{{{0.0, 1.0}, {1.0, 0.0}}};
  static const Mat2 kY{{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}}};
  static const Mat2 kZ{{{1.0, 0.0}, {0.0, -1.0}}};
  switch (op) {
    case 'X': return kX;
    case 'Y': return kY;
    case 'Z': return kZ;
    default: return kI;
  }
}

}  // namespace

DenseOperator sum_to_matrix(const PauliSum& a, std::size_t max_qubits) {
  const std::size_t n = a.n_qubits();
  if (n > max_qubits) {
    throw SizeLimitError("dense oracle limited to " + std::to_string(max_qubits) +
                         " qubits, got " + std::to_string(n));
  }
  const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (const auto& [w, c] : a.terms()) {
    std::vector<const Mat2*> factors(n);
    Eigen::Index flip = 0;
    for (std::size_t q = 0; q < n; ++q) {
      factors[q] = &pauli_matrix(w.op_at(q));
      // Off-diagonal 2x2 factors move the row away from the column.
      if ((*factors[q])[0][0] == Complex(0.0)) flip |= Eigen::Index{1} << q;
    }
    for (Eigen::Index col = 0; col < dim; ++col) {
      const Eigen::Index row = col ^ flip;
      Complex v = c;
      for (std::size_t q = 0; q < n; ++q) v *= (*factors[q])[(row >> q) & 1][(col >> q) & 1];
      m(row, col) += v;
    }
  }
  return m;
}

Spectrum exact_spectrum(const DenseOperator& a, bool with_vectors, double tol) {
  if (a.rows() != a.cols()) throw DimensionError("matrix is not square");
  if ((a - a.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw NumericalError("matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> es(
      a, with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed");
  Spectrum s;
  s.values = es.eigenvalues();
  if (with_vectors) s.vectors = es.eigenvectors();
  return s;
}

std::vector<std::size_t> sector_indices(std::size_t n_qubits, int n_alpha, int n_beta) {
  std::uint64_t even = 0;
  for (std::size_t q = 0; q < n_qubits; q += 2) even |= std::uint64_t{1} << q;
  std::vector<std::size_t> idx;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n_qubits); ++i) {
    if (std::popcount(i & even) == n_alpha && std::popcount(i & ~even) == n_beta) {
      idx.push_back(static_cast<std::size_t>(i));
    }
  }
  return idx;
}

Eigen::VectorXd sector_spectrum(const DenseOperator& a, int n_alpha, int n_beta) {
  const auto dim = static_cast<std::size_t>(a.rows());
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  if (a.rows() != a.cols() || (std::size_t{1} << n) != dim) {
    throw DimensionError("operator dimension is not a power of two");
  }
  const auto idx = sector_indices(n, n_alpha, n_beta);
  if (idx.empty()) throw DimensionError("empty particle-number sector");
  const auto k = static_cast<Eigen::Index>(idx.size());
  DenseOperator sub(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      sub(i, j) = a(static_cast<Eigen::Index>(idx[i]), static_cast<Eigen::Index>(idx[j]));
    }
  }
  return exact_spectrum(sub).values;
}

std::vector<double> oracle_moments(const Statevector& state, const DenseOperator& a,
                                   int max_power) {
  if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != state.dim()) {
    throw DimensionError("state and operator dimensions differ");
  }
  if (max_power < 0) throw std::invalid_argument("max_power must be non-negative");
  const auto amps = state.amplitudes();
  const Eigen::VectorXcd psi =
      Eigen::Map<const Eigen::VectorXcd>(amps.data(), static_cast<Eigen::Index>(amps.size()));
  Eigen::VectorXcd v = psi;
  std::vector<double> out;
  for (int p = 1; p <= max_power; ++p) {
    v = a * v;
    out.push_back(psi.dot(v).real());
  }
  return out;
}

}  // namespace qcmx
