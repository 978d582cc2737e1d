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

#include <qcmx/pauli.hpp>

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <qcmx/errors.hpp>

namespace qcmx {

namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

void require_same_register(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionError(std::string(where) + ": qubit counts differ (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

const Complex kPhases[4] = {{1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

// ---------------------------------------------------------------------------
// PauliWord

PauliWord::PauliWord(std::size_t n_qubits) : PauliWord(n_qubits, 0, 0) {}

PauliWord::PauliWord(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
  if (n_qubits > kMaxQubits) {
    throw DimensionError("PauliWord supports at most 64 qubits, got " +
                         std::to_string(n_qubits));
  }
  if (((x_mask | z_mask) & ~low_mask(n_qubits)) != 0) {
    throw DimensionError("PauliWord mask has bits beyond qubit " +
                         std::to_string(n_qubits));
  }
}

PauliWord PauliWord::single(std::size_t n_qubits, std::size_t qubit, char op) {
  if (qubit >= n_qubits) {
    throw DimensionError("qubit " + std::to_string(qubit) + " out of range for " +
                         std::to_string(n_qubits) + " qubits");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (std::toupper(static_cast<unsigned char>(op))) {
    case 'I': return PauliWord(n_qubits);
    case 'X': return PauliWord(n_qubits, bit, 0);
    case 'Y': return PauliWord(n_qubits, bit, bit);
    case 'Z': return PauliWord(n_qubits, 0, bit);
    default:
      throw ParseError(std::string("unknown Pauli operator '") + op + "'");
  }
}

PauliWord PauliWord::parse(std::string_view text, std::size_t n_qubits) {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  std::uint64_t seen = 0;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    const char op = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      // A bare "I" is the identity word.
      if (op == 'I' && !any &&
          (pos >= text.size() || std::isspace(static_cast<unsigned char>(text[pos])))) {
        any = true;
        continue;
      }
      throw ParseError("malformed Pauli factor in '" + std::string(text) + "'");
    }
    const std::size_t qubit = std::stoul(std::string(text.substr(start, pos - start)));
    if (qubit >= n_qubits) {
      throw ParseError("qubit index " + std::to_string(qubit) + " out of range in '" +
                       std::string(text) + "'");
    }
    const std::uint64_t bit = std::uint64_t{1} << qubit;
    if (seen & bit) {
      throw ParseError("qubit " + std::to_string(qubit) + " repeated in '" +
                       std::string(text) + "'");
    }
    seen |= bit;
    switch (op) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      case 'Z': z |= bit; break;
      default:
        throw ParseError(std::string("unknown Pauli operator '") + op + "' in '" +
                         std::string(text) + "'");
    }
    any = true;
  }
  if (!any) throw ParseError("empty Pauli word");
  return PauliWord(n_qubits, x, z);
}

char PauliWord::op_at(std::size_t qubit) const {
  if (qubit >= n_qubits_) throw DimensionError("qubit index out of range");
  const bool xb = (x_ >> qubit) & 1U;
  const bool zb = (z_ >> qubit) & 1U;
  if (xb && zb) return 'Y';
  if (xb) return 'X';
  if (zb) return 'Z';
  return 'I';
}

std::size_t PauliWord::weight() const noexcept {
  return static_cast<std::size_t>(std::popcount(x_ | z_));
}

std::size_t PauliWord::y_count() const noexcept {
  return static_cast<std::size_t>(std::popcount(x_ & z_));
}

bool PauliWord::commutes_with(const PauliWord& other) const {
  require_same_register(n_qubits_, other.n_qubits_, "commutes_with");
  const int anti = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
  return anti % 2 == 0;
}

std::string PauliWord::str() const {
  if (is_identity()) return "I";
  std::string out;
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    const char op = op_at(q);
    if (op == 'I') continue;
    if (!out.empty()) out += ' ';
    out += op;
    out += std::to_string(q);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PauliWord& word) {
  return os << word.str();
}

// Per qubit, the ordered product of two distinct non-identity Paulis is
// +i·third for XY, YZ, ZX and -i·third for the reverse orders.
int word_mul_phase_exponent(const PauliWord& a, const PauliWord& b) {
  const std::uint64_t x1 = a.x_mask(), z1 = a.z_mask();
  const std::uint64_t x2 = b.x_mask(), z2 = b.z_mask();
  const std::uint64_t pos = (x1 & ~z1 & x2 & z2)     // X·Y
                          | (x1 & z1 & ~x2 & z2)     // Y·Z
                          | (~x1 & z1 & x2 & ~z2);   // Z·X
  const std::uint64_t neg = (x1 & z1 & x2 & ~z2)     // Y·X
                          | (~x1 & z1 & x2 & z2)     // Z·Y
                          | (x1 & ~z1 & ~x2 & z2);   // X·Z
  const int k = std::popcount(pos) - std::popcount(neg);
  return ((k % 4) + 4) % 4;
}

WordProduct word_mul(const PauliWord& a, const PauliWord& b) {
  require_same_register(a.n_qubits(), b.n_qubits(), "word_mul");
  return {kPhases[word_mul_phase_exponent(a, b)],
          PauliWord(a.n_qubits(), a.x_mask() ^ b.x_mask(), a.z_mask() ^ b.z_mask())};
}

// ---------------------------------------------------------------------------
// PauliSum

PauliSum::PauliSum(std::size_t n_qubits, double merge_tol)
    : n_qubits_(n_qubits), merge_tol_(merge_tol) {
  if (n_qubits > kMaxQubits) {
    throw DimensionError("PauliSum supports at most 64 qubits");
  }
  if (merge_tol < 0.0) throw std::invalid_argument("merge tolerance must be >= 0");
}

PauliSum PauliSum::from_terms(
    std::size_t n_qubits, std::initializer_list<std::pair<std::string_view, Complex>> terms) {
  PauliSum out(n_qubits);
  for (const auto& [text, c] : terms) out.add_term(text, c);
  return out;
}

PauliSum PauliSum::identity(std::size_t n_qubits, Complex c) {
  PauliSum out(n_qubits);
  out.add_term(PauliWord(n_qubits), c);
  return out;
}

Complex PauliSum::coeff(const PauliWord& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? Complex{} : it->second;
}

void PauliSum::add_term(const PauliWord& word, Complex c) {
  require_same_register(n_qubits_, word.n_qubits(), "PauliSum::add_term");
  auto [it, inserted] = terms_.try_emplace(word, c);
  if (!inserted) it->second += c;
  if (std::abs(it->second) <= merge_tol_) terms_.erase(it);
}

void PauliSum::add_term(std::string_view word, Complex c) {
  add_term(PauliWord::parse(word, n_qubits_), c);
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_register(n_qubits_, other.n_qubits_, "PauliSum::operator+=");
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  require_same_register(n_qubits_, other.n_qubits_, "PauliSum::operator-=");
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scalar) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= scalar;
    if (std::abs(it->second) <= merge_tol_) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

bool PauliSum::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const auto& t) { return std::abs(t.second.imag()) <= tol; });
}

bool PauliSum::is_anti_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const auto& t) { return std::abs(t.second.real()) <= tol; });
}

double PauliSum::max_imag() const {
  double m = 0.0;
  for (const auto& [w, c] : terms_) m = std::max(m, std::abs(c.imag()));
  return m;
}

PauliSum PauliSum::clamped_real(double tol) const {
  PauliSum out(n_qubits_, merge_tol_);
  for (const auto& [w, c] : terms_) {
    if (std::abs(c.imag()) > tol) {
      std::ostringstream msg;
      msg << "imaginary residue " << c.imag() << " on word " << w
          << " exceeds Hermitian clamp tolerance";
      throw NumericalError(msg.str());
    }
    if (std::abs(c.real()) > merge_tol_) out.terms_.emplace_hint(out.terms_.end(), w, c.real());
  }
  return out;
}

std::string PauliSum::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
PauliSum operator*(Complex scalar, PauliSum a) { return a *= scalar; }

std::ostream& operator<<(std::ostream& os, const PauliSum& sum) {
  if (sum.empty()) return os << "0";
  bool first = true;
  for (const auto& [w, c] : sum.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.real();
    if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    os << ") " << w;
  }
  return os;
}

PauliSum adjoint(const PauliSum& a) {
  PauliSum out(a.n_qubits(), a.merge_tol());
  for (const auto& [w, c] : a.terms()) out.add_term(w, std::conj(c));
  return out;
}

PauliSum sum_mul(const PauliSum& a, const PauliSum& b, double merge_tol) {
  require_same_register(a.n_qubits(), b.n_qubits(), "sum_mul");
  if (merge_tol < 0.0) throw std::invalid_argument("merge tolerance must be >= 0");
  // Accumulation order per word follows the (sorted) pair loop, so results
  // are deterministic regardless of hash-table layout.
  std::unordered_map<PauliWord, Complex, PauliWordHash> acc;
  acc.reserve(a.size() * b.size() / 2 + 1);
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      const int k = word_mul_phase_exponent(wa, wb);
      const PauliWord w(a.n_qubits(), wa.x_mask() ^ wb.x_mask(), wa.z_mask() ^ wb.z_mask());
      acc[w] += kPhases[k] * ca * cb;
    }
  }
  std::vector<std::pair<PauliWord, Complex>> sorted(acc.begin(), acc.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  PauliSum out(a.n_qubits(), merge_tol);
  for (const auto& [w, c] : sorted) {
    if (std::abs(c) > merge_tol) out.add_term(w, c);
  }
  return out;
}

std::vector<PauliSum> sum_power(const PauliSum& h, int n, double merge_tol) {
  if (n < 1) throw std::invalid_argument("sum_power requires n >= 1");
  const bool hermitian = h.is_hermitian(0.0);
  std::vector<PauliSum> powers;
  powers.reserve(static_cast<std::size_t>(n));
  powers.push_back(h);
  for (int k = 2; k <= n; ++k) {
    PauliSum next = sum_mul(h, powers.back(), merge_tol);
    if (hermitian) next = next.clamped_real(kHermitianClampTol);
    powers.push_back(std::move(next));
  }
  return powers;
}

PauliSum commutator(const PauliSum& a, const PauliSum& b, double merge_tol) {
  require_same_register(a.n_qubits(), b.n_qubits(), "commutator");
  // Only anticommuting word pairs contribute, each with twice its product.
  std::unordered_map<PauliWord, Complex, PauliWordHash> acc;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      if (wa.commutes_with(wb)) continue;
      const int k = word_mul_phase_exponent(wa, wb);
      const PauliWord w(a.n_qubits(), wa.x_mask() ^ wb.x_mask(), wa.z_mask() ^ wb.z_mask());
      acc[w] += 2.0 * kPhases[k] * ca * cb;
    }
  }
  std::vector<std::pair<PauliWord, Complex>> sorted(acc.begin(), acc.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  PauliSum out(a.n_qubits(), merge_tol);
  for (const auto& [w, c] : sorted) {
    if (std::abs(c) > merge_tol) out.add_term(w, c);
  }
  return out;
}

Truncation truncate_by_coeff(const PauliSum& a, double epsilon) {
  if (epsilon < 0.0) throw std::invalid_argument("epsilon must be >= 0");
  if (epsilon == 0.0) return {a, 0};
  Truncation out{PauliSum(a.n_qubits(), a.merge_tol()), 0};
  for (const auto& [w, c] : a.terms()) {
    if (std::abs(c) >= epsilon) {
      out.kept.add_term(w, c);
    } else {
      ++out.dropped_count;
    }
  }
  return out;
}

}  // namespace qcmx
