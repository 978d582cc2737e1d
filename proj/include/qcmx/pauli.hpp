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

#include <compare>
#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qcmx {

using Complex = std::complex<double>;

/// Largest register a PauliWord can describe (one bit per qubit per mask).
inline constexpr std::size_t kMaxQubits = 64;

/// Default tolerance for dropping floating-point dust when merging terms.
inline constexpr double kMergeTol = 1e-12;

/// Imaginary residue up to which a coefficient of a Hermitian product is
/// clamped to real. Anything larger signals a bug upstream.
inline constexpr double kHermitianClampTol = 1e-10;

/**
 * @brief An N-qubit Pauli string in symplectic form.
 *
 * Qubit q carries I, X, Y or Z according to the bit pair
 * (x_mask[q], z_mask[q]) = (0,0), (1,0), (1,1), (0,1). No phase is stored in
 * the word; every phase lives in the coefficient of the owning PauliSum. As an
 * operator the word is Hermitian and squares to the identity.
 *
 * The canonical text form lists the non-identity factors by ascending qubit,
 * e.g. "X0 Z2 Y3"; the identity renders as "I".
 */
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::size_t n_qubits);
  PauliWord(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Parses the canonical text form. Factors may come in any order but a
  /// qubit may appear at most once.
  static PauliWord parse(std::string_view text, std::size_t n_qubits);

  /// Word with a single non-identity factor `op` in {I, X, Y, Z} on `qubit`.
  static PauliWord single(std::size_t n_qubits, std::size_t qubit, char op);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }

  char op_at(std::size_t qubit) const;
  std::size_t weight() const noexcept;
  bool is_identity() const noexcept { return (x_ | z_) == 0; }
  std::size_t y_count() const noexcept;

  bool commutes_with(const PauliWord& other) const;

  std::string str() const;

  /// Canonical word order: by qubit count, then x mask, then z mask.
  friend auto operator<=>(const PauliWord&, const PauliWord&) = default;
  friend bool operator==(const PauliWord&, const PauliWord&) = default;

 private:
  std::size_t n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

std::ostream& operator<<(std::ostream& os, const PauliWord& word);

struct PauliWordHash {
  std::size_t operator()(const PauliWord& w) const noexcept {
    std::uint64_t h = w.x_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= (w.z_mask() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2));
    h ^= w.n_qubits();
    return static_cast<std::size_t>(h);
  }
};

/// Result of multiplying two words: a·b = phase · word.
struct WordProduct {
  Complex phase;
  PauliWord word;
};

/// Operator product of two words. The phase is one of 1, i, -1, -i.
WordProduct word_mul(const PauliWord& a, const PauliWord& b);

/// Power of i (0..3) such that a·b = i^k · (a xor b).
int word_mul_phase_exponent(const PauliWord& a, const PauliWord& b);

/**
 * @brief A complex linear combination of PauliWords on a fixed register.
 *
 * Terms are kept in canonical word order with no duplicate words. Adding a
 * term merges it into an existing entry and drops the entry when the merged
 * magnitude falls to or below the merge tolerance.
 */
class PauliSum {
 public:
  using TermMap = std::map<PauliWord, Complex>;

  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits, double merge_tol = kMergeTol);

  /// Convenience builder from (canonical text, coefficient) pairs.
  static PauliSum from_terms(
      std::size_t n_qubits,
      std::initializer_list<std::pair<std::string_view, Complex>> terms);

  /// c · I on n qubits.
  static PauliSum identity(std::size_t n_qubits, Complex c = 1.0);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  double merge_tol() const noexcept { return merge_tol_; }
  const TermMap& terms() const noexcept { return terms_; }

  /// Coefficient of `word`, zero when absent.
  Complex coeff(const PauliWord& word) const;

  void add_term(const PauliWord& word, Complex c);
  void add_term(std::string_view word, Complex c);

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scalar);

  /// True when every coefficient is real within `tol`.
  bool is_hermitian(double tol = kHermitianClampTol) const;

  /// True when every coefficient is imaginary within `tol`.
  bool is_anti_hermitian(double tol = kHermitianClampTol) const;

  /// Largest |Im c| over all terms.
  double max_imag() const;

  /// Drops imaginary parts. Throws NumericalError if any residue exceeds
  /// `tol`.
  PauliSum clamped_real(double tol = kHermitianClampTol) const;

  std::string str() const;

  friend bool operator==(const PauliSum&, const PauliSum&) = default;

 private:
  std::size_t n_qubits_ = 0;
  double merge_tol_ = kMergeTol;
  TermMap terms_;
};

PauliSum operator+(PauliSum a, const PauliSum& b);
PauliSum operator-(PauliSum a, const PauliSum& b);
PauliSum operator*(Complex scalar, PauliSum a);
std::ostream& operator<<(std::ostream& os, const PauliSum& sum);

/// Hermitian adjoint: conjugates every coefficient.
PauliSum adjoint(const PauliSum& a);

/// Distributes word_mul over all term pairs and merges equal words.
PauliSum sum_mul(const PauliSum& a, const PauliSum& b, double merge_tol = kMergeTol);

/// Returns [H, H^2, ..., H^n], each power formed as H · H^(k-1). When H is
/// Hermitian every power has its imaginary dust clamped.
std::vector<PauliSum> sum_power(const PauliSum& h, int n, double merge_tol = kMergeTol);

/// A·B - B·A.
PauliSum commutator(const PauliSum& a, const PauliSum& b, double merge_tol = kMergeTol);

struct Truncation {
  PauliSum kept;
  std::size_t dropped_count = 0;
};

/// Keeps exactly the terms with |coefficient| >= epsilon.
Truncation truncate_by_coeff(const PauliSum& a, double epsilon);

/// Reads the qubit-Hamiltonian text format:
///   n_qubits: <N>
///   <re> [<im>] <word>
/// with `#` comments and blank lines ignored.
PauliSum read_qubit_hamiltonian(std::istream& in);
PauliSum read_qubit_hamiltonian_file(const std::string& path);
void write_qubit_hamiltonian(std::ostream& out, const PauliSum& h);
void write_qubit_hamiltonian_file(const std::string& path, const PauliSum& h);

}  // namespace qcmx
