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

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <qcmx/errors.hpp>
#include <qcmx/pauli.hpp>

namespace qcmx {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_double(const std::string& token, double& out) {
  char* end = nullptr;
  out = std::strtod(token.c_str(), &end);
  return end != token.c_str() && *end == '\0';
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

PauliSum read_qubit_hamiltonian(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n_qubits = 0;
  bool have_header = false;
  PauliSum h;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;

    if (!have_header) {
      constexpr std::string_view key = "n_qubits:";
      if (body.substr(0, key.size()) != key) {
        throw ParseError("expected 'n_qubits: <N>' header", lineno);
      }
      auto rest = trim(body.substr(key.size()));
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n_qubits);
      if (ec != std::errc{} || ptr != rest.data() + rest.size() || n_qubits == 0 ||
          n_qubits > kMaxQubits) {
        throw ParseError("invalid qubit count '" + std::string(rest) + "'", lineno);
      }
      h = PauliSum(n_qubits);
      have_header = true;
      continue;
    }

    std::istringstream tokens{std::string(body)};
    std::string tok_re, tok_second;
    tokens >> tok_re;
    double re = 0.0;
    if (!parse_double(tok_re, re)) {
      throw ParseError("non-numeric coefficient '" + tok_re + "'", lineno);
    }
    double im = 0.0;
    std::string word_text;
    if (tokens >> tok_second) {
      if (!std::isalpha(static_cast<unsigned char>(tok_second.front()))) {
        if (!parse_double(tok_second, im)) {
          throw ParseError("non-numeric imaginary part '" + tok_second + "'", lineno);
        }
      } else {
        word_text = tok_second;
      }
    }
    std::string rest;
    std::getline(tokens, rest);
    word_text += " " + rest;
    if (trim(word_text).empty()) throw ParseError("missing Pauli word", lineno);
    try {
      h.add_term(PauliWord::parse(word_text, n_qubits), Complex(re, im));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!have_header) throw ParseError("missing 'n_qubits: <N>' header");
  return h;
}

PauliSum read_qubit_hamiltonian_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open qubit Hamiltonian file '" + path + "'");
  return read_qubit_hamiltonian(in);
}

void write_qubit_hamiltonian(std::ostream& out, const PauliSum& h) {
  out << "n_qubits: " << h.n_qubits() << "\n";
  for (const auto& [w, c] : h.terms()) {
    out << format_double(c.real());
    if (c.imag() != 0.0) out << " " << format_double(c.imag());
    out << " " << w.str() << "\n";
  }
}

void write_qubit_hamiltonian_file(const std::string& path, const PauliSum& h) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  write_qubit_hamiltonian(out, h);
}

}  // namespace qcmx
