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

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <qcmx/pauli.hpp>
#include <qcmx/pool.hpp>
#include <qcmx/statevector.hpp>

namespace qcmx {

/**
 * @brief Second-quantized molecular Hamiltonian over spatial orbitals.
 *
 *   H = e_core + sum_{pq,s} h1(p,q) a+_{ps} a_{qs}
 *       + 1/2 sum_{pqrs,s,t} (pq|rs) a+_{ps} a+_{rt} a_{st} a_{qs}
 *
 * with two-electron integrals in chemists' notation. All energies in Hartree.
 */
class FermionHamiltonian {
 public:
  FermionHamiltonian() = default;
  FermionHamiltonian(std::size_t n_spatial, int n_electrons, int ms2);

  std::size_t n_spatial() const noexcept { return n_spatial_; }
  std::size_t n_spin_orbitals() const noexcept { return 2 * n_spatial_; }
  int n_electrons() const noexcept { return n_electrons_; }
  int ms2() const noexcept { return ms2_; }
  int n_alpha() const;
  int n_beta() const;

  double e_core = 0.0;

  double h1(std::size_t p, std::size_t q) const { return h1_[p * n_spatial_ + q]; }
  double h2(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return h2_[((p * n_spatial_ + q) * n_spatial_ + r) * n_spatial_ + s];
  }

  /// Sets h1(p,q) and h1(q,p).
  void set_h1(std::size_t p, std::size_t q, double value);
  /// Sets (pq|rs) together with its 7 real-orbital symmetry partners.
  void set_h2(std::size_t p, std::size_t q, std::size_t r, std::size_t s, double value);

  /// Checks index-permutation symmetry of the integrals and the electron
  /// count; throws std::invalid_argument on violation.
  void validate(double tol = 1e-10) const;

 private:
  std::size_t n_spatial_ = 0;
  int n_electrons_ = 0;
  int ms2_ = 0;
  std::vector<double> h1_;
  std::vector<double> h2_;
};

struct FcidumpWarning {
  std::size_t line;
  std::string message;
};

/// Parses a Molpro-convention FCIDUMP (1-based indices). Repeated index
/// lines keep the last value and are reported through `warnings`.
FermionHamiltonian parse_fcidump(const std::filesystem::path& path,
                                 std::vector<FcidumpWarning>* warnings = nullptr);
FermionHamiltonian parse_fcidump(std::istream& in,
                                 std::vector<FcidumpWarning>* warnings = nullptr);

/// Qubit index of a spin orbital: alpha and beta interleaved, 2p and 2p+1.
inline std::size_t spin_orbital(std::size_t spatial, bool beta) {
  return 2 * spatial + (beta ? 1 : 0);
}

/// Jordan-Wigner images of a+_j and a_j on n qubits:
///   a+_j = (X_j - iY_j)/2 · Z_{j-1} ... Z_0.
PauliSum jw_creation(std::size_t n_qubits, std::size_t mode);
PauliSum jw_annihilation(std::size_t n_qubits, std::size_t mode);

/// Jordan-Wigner image of the full Hamiltonian on 2·n_spatial qubits.
PauliSum jordan_wigner(const FermionHamiltonian& f);

/// Total number operator sum_j n_j.
PauliSum number_operator(std::size_t n_qubits);

/// S^2 = S- S+ + Sz (Sz + 1) over n_spatial orbitals.
PauliSum build_s2_operator(std::size_t n_spatial);

/// Aufbau reference: the lowest n_alpha alpha and n_beta beta spin orbitals.
BasisState hf_bitstring(const FermionHamiltonian& f);

/// All Y_i X_j (i != j) words followed by all Y_i X_j X_k X_l words
/// (j < k < l, i outside {j,k,l}); each group in lexicographic (i, j, k, l)
/// order, every word wrapped as the generator i·word.
std::vector<PoolElement> build_pauli_pool(std::size_t n_qubits);

/// Spin-adapted singles and the two singlet double combinations between the
/// occupied and virtual spatial orbitals of the reference. See pools.cpp for
/// the normalization.
std::vector<PoolElement> build_fermionic_singlet_pool(const FermionHamiltonian& f);

}  // namespace qcmx
