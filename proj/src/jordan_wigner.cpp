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

#include <cmath>
#include <map>

#include <qcmx/errors.hpp>
#include <qcmx/fermion.hpp>

namespace qcmx {

namespace {

using Accumulator = std::map<PauliWord, Complex>;

void accumulate(Accumulator& acc, const PauliSum& s, Complex scale) {
  for (const auto& [w, c] : s.terms()) acc[w] += scale * c;
}

PauliSum finish_hermitian(std::size_t n_qubits, const Accumulator& acc) {
  PauliSum out(n_qubits);
  for (const auto& [w, c] : acc) {
    if (std::abs(c) > kMergeTol) out.add_term(w, c);
  }
  return out.clamped_real();
}

PauliSum z_string_times(std::size_t n_qubits, std::size_t mode, char op, Complex c) {
  std::uint64_t z = (std::uint64_t{1} << mode) - 1;
  const std::uint64_t bit = std::uint64_t{1} << mode;
  std::uint64_t x = bit;
  if (op == 'Y') z |= bit;
  PauliSum out(n_qubits);
  out.add_term(PauliWord(n_qubits, x, z), c);
  return out;
}

}  // namespace

PauliSum jw_creation(std::size_t n_qubits, std::size_t mode) {
  if (mode >= n_qubits) throw DimensionError("fermionic mode out of range");
  return z_string_times(n_qubits, mode, 'X', 0.5) +
         z_string_times(n_qubits, mode, 'Y', Complex(0.0, -0.5));
}

PauliSum jw_annihilation(std::size_t n_qubits, std::size_t mode) {
  if (mode >= n_qubits) throw DimensionError("fermionic mode out of range");
  return z_string_times(n_qubits, mode, 'X', 0.5) +
         z_string_times(n_qubits, mode, 'Y', Complex(0.0, 0.5));
}

PauliSum jordan_wigner(const FermionHamiltonian& f) {
  const std::size_t n_spatial = f.n_spatial();
  const std::size_t nq = f.n_spin_orbitals();

  std::vector<PauliSum> create, destroy;
  for (std::size_t j = 0; j < nq; ++j) {
    create.push_back(jw_creation(nq, j));
    destroy.push_back(jw_annihilation(nq, j));
  }

  Accumulator acc;
  acc[PauliWord(nq)] += f.e_core;

  for (std::size_t p = 0; p < n_spatial; ++p) {
    for (std::size_t q = 0; q < n_spatial; ++q) {
      const double v = f.h1(p, q);
      if (v == 0.0) continue;
      for (bool beta : {false, true}) {
        accumulate(acc, sum_mul(create[spin_orbital(p, beta)], destroy[spin_orbital(q, beta)]),
                   v);
      }
    }
  }

  // a+_P a+_R and a_S a_Q pair products, indexed [first][second].
  std::vector<std::vector<PauliSum>> cc(nq), aa(nq);
  for (std::size_t i = 0; i < nq; ++i) {
    for (std::size_t j = 0; j < nq; ++j) {
      cc[i].push_back(sum_mul(create[i], create[j]));
      aa[i].push_back(sum_mul(destroy[i], destroy[j]));
    }
  }

  // 1/2 sum (pq|rs) a+_{p s} a+_{r t} a_{s t} a_{q s}
  for (std::size_t p = 0; p < n_spatial; ++p) {
    for (std::size_t q = 0; q < n_spatial; ++q) {
      for (std::size_t r = 0; r < n_spatial; ++r) {
        for (std::size_t s = 0; s < n_spatial; ++s) {
          const double v = f.h2(p, q, r, s);
          if (v == 0.0) continue;
          for (bool sig : {false, true}) {
            for (bool tau : {false, true}) {
              const std::size_t P = spin_orbital(p, sig), Q = spin_orbital(q, sig);
              const std::size_t R = spin_orbital(r, tau), S = spin_orbital(s, tau);
              if (P == R || Q == S) continue;
              accumulate(acc, sum_mul(cc[P][R], aa[S][Q]), 0.5 * v);
            }
          }
        }
      }
    }
  }
  return finish_hermitian(nq, acc);
}

PauliSum number_operator(std::size_t n_qubits) {
  PauliSum out(n_qubits);
  for (std::size_t j = 0; j < n_qubits; ++j) {
    out.add_term(PauliWord(n_qubits), 0.5);
    out.add_term(PauliWord::single(n_qubits, j, 'Z'), -0.5);
  }
  return out;
}

PauliSum build_s2_operator(std::size_t n_spatial) {
  if (n_spatial == 0) throw std::invalid_argument("build_s2_operator needs n_spatial >= 1");
  const std::size_t nq = 2 * n_spatial;
  PauliSum s_plus(nq), s_minus(nq), s_z(nq);
  for (std::size_t p = 0; p < n_spatial; ++p) {
    const std::size_t a = spin_orbital(p, false), b = spin_orbital(p, true);
    s_plus += sum_mul(jw_creation(nq, a), jw_annihilation(nq, b));
    s_minus += sum_mul(jw_creation(nq, b), jw_annihilation(nq, a));
    // Sz = (n_a - n_b)/2 = (Z_b - Z_a)/4
    s_z.add_term(PauliWord::single(nq, a, 'Z'), -0.25);
    s_z.add_term(PauliWord::single(nq, b, 'Z'), 0.25);
  }
  PauliSum s2 = sum_mul(s_minus, s_plus) + sum_mul(s_z, s_z) + s_z;
  return s2.clamped_real();
}

BasisState hf_bitstring(const FermionHamiltonian& f) {
  const int na = f.n_alpha();
  const int nb = f.n_beta();
  if (na < 0 || nb < 0 || static_cast<std::size_t>(na) > f.n_spatial() ||
      static_cast<std::size_t>(nb) > f.n_spatial()) {
    throw std::invalid_argument("electron and spin counts do not fit the orbital space");
  }
  std::uint64_t bits = 0;
  for (int p = 0; p < na; ++p) bits |= std::uint64_t{1} << spin_orbital(p, false);
  for (int p = 0; p < nb; ++p) bits |= std::uint64_t{1} << spin_orbital(p, true);
  return BasisState(f.n_spin_orbitals(), bits);
}

}  // namespace qcmx
