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
#include <map>
#include <utility>

#include <qcmx/errors.hpp>
#include <qcmx/fermion.hpp>

namespace qcmx {

std::string to_string(PoolKind kind) {
  switch (kind) {
    case PoolKind::PauliWord: return "pauli_word";
    case PoolKind::FermionicSingletSingle: return "fermionic_singlet_single";
    case PoolKind::FermionicSingletDouble: return "fermionic_singlet_double";
  }
  return "unknown";
}

PoolElement make_pauli_element(const PauliWord& word) {
  PauliSum g(word.n_qubits());
  g.add_term(word, Complex(0.0, 1.0));
  return {word.str(), std::move(g), PoolKind::PauliWord};
}

std::vector<PoolElement> build_pauli_pool(std::size_t n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("Pauli pool needs at least 2 qubits");
  auto bit = [](std::size_t q) { return std::uint64_t{1} << q; };
  std::vector<PoolElement> pool;
  for (std::size_t i = 0; i < n_qubits; ++i) {
    for (std::size_t j = 0; j < n_qubits; ++j) {
      if (i == j) continue;
      pool.push_back(make_pauli_element(PauliWord(n_qubits, bit(i) | bit(j), bit(i))));
    }
  }
  for (std::size_t i = 0; i < n_qubits; ++i) {
    for (std::size_t j = 0; j < n_qubits; ++j) {
      for (std::size_t k = j + 1; k < n_qubits; ++k) {
        for (std::size_t l = k + 1; l < n_qubits; ++l) {
          if (i == j || i == k || i == l) continue;
          pool.push_back(make_pauli_element(
              PauliWord(n_qubits, bit(i) | bit(j) | bit(k) | bit(l), bit(i))));
        }
      }
    }
  }
  return pool;
}

namespace {

// A normal-ordered excitation string a+_{c0} a+_{c1}... a_{d0} a_{d1}...
// with creators and annihilators each sorted ascending.
using ExcitationKey = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
using Excitations = std::map<ExcitationKey, double>;

// Sorts `ops` ascending by adjacent swaps; returns the permutation sign, or 0
// when an index repeats (the string vanishes).
int sort_with_sign(std::vector<std::size_t>& ops) {
  int sign = 1;
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = 0; j + 1 < ops.size() - i; ++j) {
      if (ops[j] > ops[j + 1]) {
        std::swap(ops[j], ops[j + 1]);
        sign = -sign;
      } else if (ops[j] == ops[j + 1]) {
        return 0;
      }
    }
  }
  for (std::size_t j = 0; j + 1 < ops.size(); ++j) {
    if (ops[j] == ops[j + 1]) return 0;
  }
  return sign;
}

void add_excitation(Excitations& ex, std::vector<std::size_t> create,
                    std::vector<std::size_t> destroy, double coeff) {
  const int sign = sort_with_sign(create) * sort_with_sign(destroy);
  if (sign == 0) return;
  ex[{std::move(create), std::move(destroy)}] += sign * coeff;
}

// Normalizes the excitation to unit coefficient norm and returns the JW image
// of T - T+, or an empty sum when T vanishes.
PauliSum anti_hermitian_jw(std::size_t n_qubits, const Excitations& ex) {
  double norm2 = 0.0;
  for (const auto& [key, c] : ex) norm2 += c * c;
  PauliSum t(n_qubits);
  if (norm2 < 1e-20) return t;
  const double scale = 1.0 / std::sqrt(norm2);
  for (const auto& [key, c] : ex) {
    if (std::abs(c) < 1e-14) continue;
    PauliSum term = PauliSum::identity(n_qubits, c * scale);
    for (std::size_t m : key.first) term = sum_mul(term, jw_creation(n_qubits, m));
    for (std::size_t m : key.second) term = sum_mul(term, jw_annihilation(n_qubits, m));
    t += term;
  }
  PauliSum g = t - adjoint(t);
  // Remove real dust so every term is exactly i·r·P.
  PauliSum clean(n_qubits);
  for (const auto& [w, c] : g.terms()) {
    if (std::abs(c.real()) > kHermitianClampTol) {
      throw NumericalError("excitation generator is not anti-Hermitian");
    }
    if (std::abs(c.imag()) > kMergeTol) clean.add_term(w, Complex(0.0, c.imag()));
  }
  return clean;
}

}  // namespace

std::vector<PoolElement> build_fermionic_singlet_pool(const FermionHamiltonian& f) {
  const std::size_t n = f.n_spatial();
  const std::size_t nq = f.n_spin_orbitals();
  // Occupied: any spatial orbital holding an electron in the reference.
  // Virtual: any spatial orbital with a vacancy. They coincide only for
  // singly occupied orbitals of open-shell references.
  const std::size_t n_occ = static_cast<std::size_t>(std::max(f.n_alpha(), f.n_beta()));
  const std::size_t first_virt = static_cast<std::size_t>(std::min(f.n_alpha(), f.n_beta()));
  constexpr bool kAlpha = false, kBeta = true;

  std::vector<PoolElement> pool;
  for (std::size_t q = 0; q < n_occ; ++q) {
    for (std::size_t p = first_virt; p < n; ++p) {
      if (p == q) continue;
      Excitations ex;
      for (bool s : {kAlpha, kBeta}) {
        add_excitation(ex, {spin_orbital(p, s)}, {spin_orbital(q, s)}, 1.0);
      }
      PauliSum g = anti_hermitian_jw(nq, ex);
      if (g.empty()) continue;
      pool.push_back({"s(" + std::to_string(q) + "->" + std::to_string(p) + ")", std::move(g),
                      PoolKind::FermionicSingletSingle});
    }
  }

  // e(ai,bj) = sum_{s,t} a+_{as} a+_{bt} a_{jt} a_{is}; the two singlet
  // doubles are e(ai,bj) + e(aj,bi) and e(ai,bj) - e(aj,bi).
  auto e_op = [&](Excitations& ex, std::size_t a, std::size_t i, std::size_t b, std::size_t j,
                  double sign) {
    for (bool s : {kAlpha, kBeta}) {
      for (bool t : {kAlpha, kBeta}) {
        add_excitation(ex, {spin_orbital(a, s), spin_orbital(b, t)},
                       {spin_orbital(j, t), spin_orbital(i, s)}, sign);
      }
    }
  };
  for (std::size_t i = 0; i < n_occ; ++i) {
    for (std::size_t j = i; j < n_occ; ++j) {
      for (std::size_t a = first_virt; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          if (a == i || a == j || b == i || b == j) continue;
          const std::string idx = "(" + std::to_string(i) + "," + std::to_string(j) + "->" +
                                  std::to_string(a) + "," + std::to_string(b) + ")";
          for (double sign : {1.0, -1.0}) {
            Excitations ex;
            e_op(ex, a, i, b, j, 1.0);
            e_op(ex, a, j, b, i, sign);
            PauliSum g = anti_hermitian_jw(nq, ex);
            if (g.empty()) continue;
            pool.push_back({(sign > 0 ? "d+" : "d-") + idx, std::move(g),
                            PoolKind::FermionicSingletDouble});
          }
        }
      }
    }
  }
  return pool;
}

}  // namespace qcmx
