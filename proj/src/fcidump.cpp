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
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <regex>
#include <sstream>
#include <tuple>

#include <qcmx/errors.hpp>
#include <qcmx/fermion.hpp>

namespace qcmx {

FermionHamiltonian::FermionHamiltonian(std::size_t n_spatial, int n_electrons, int ms2)
    : n_spatial_(n_spatial),
      n_electrons_(n_electrons),
      ms2_(ms2),
      h1_(n_spatial * n_spatial, 0.0),
      h2_(n_spatial * n_spatial * n_spatial * n_spatial, 0.0) {
  if (n_spatial == 0) throw std::invalid_argument("need at least one spatial orbital");
  if (2 * n_spatial > kMaxQubits) throw std::invalid_argument("too many orbitals");
  if (n_electrons <= 0 || static_cast<std::size_t>(n_electrons) > 2 * n_spatial) {
    throw std::invalid_argument("electron count " + std::to_string(n_electrons) +
                                " outside (0, 2*norb]");
  }
}

int FermionHamiltonian::n_alpha() const {
  if ((n_electrons_ + ms2_) % 2 != 0) {
    throw std::invalid_argument("NELEC and MS2 have inconsistent parity");
  }
  return (n_electrons_ + ms2_) / 2;
}

int FermionHamiltonian::n_beta() const { return n_electrons_ - n_alpha(); }

void FermionHamiltonian::set_h1(std::size_t p, std::size_t q, double value) {
  h1_[p * n_spatial_ + q] = value;
  h1_[q * n_spatial_ + p] = value;
}

void FermionHamiltonian::set_h2(std::size_t p, std::size_t q, std::size_t r, std::size_t s,
                                double value) {
  const std::size_t n = n_spatial_;
  auto at = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> double& {
    return h2_[((a * n + b) * n + c) * n + d];
  };
  at(p, q, r, s) = value;
  at(q, p, r, s) = value;
  at(p, q, s, r) = value;
  at(q, p, s, r) = value;
  at(r, s, p, q) = value;
  at(s, r, p, q) = value;
  at(r, s, q, p) = value;
  at(s, r, q, p) = value;
}

void FermionHamiltonian::validate(double tol) const {
  const std::size_t n = n_spatial_;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (std::abs(h1(p, q) - h1(q, p)) > tol) {
        throw std::invalid_argument("one-electron integrals are not symmetric");
      }
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) {
          const double v = h2(p, q, r, s);
          if (std::abs(v - h2(q, p, r, s)) > tol || std::abs(v - h2(p, q, s, r)) > tol ||
              std::abs(v - h2(r, s, p, q)) > tol) {
            throw std::invalid_argument("two-electron integrals lack 8-fold symmetry");
          }
        }
      }
    }
  }
  const int na = n_alpha();
  const int nb = n_beta();
  if (na < 0 || nb < 0 || static_cast<std::size_t>(na) > n ||
      static_cast<std::size_t>(nb) > n) {
    throw std::invalid_argument("MS2 inconsistent with orbital and electron counts");
  }
}

namespace {

// Pulls KEY=value (integer) from the namelist header text.
bool header_int(const std::string& header, const std::string& key, int& out) {
  const std::regex re("(^|[^A-Z_])" + key + R"(\s*=\s*([-+]?\d+))", std::regex::icase);
  std::smatch m;
  if (!std::regex_search(header, m, re)) return false;
  out = std::stoi(m[2].str());
  return true;
}

bool parse_number(const std::string& tok, double& out) {
  std::string t = tok;
  // Fortran-style exponents.
  std::replace(t.begin(), t.end(), 'D', 'E');
  std::replace(t.begin(), t.end(), 'd', 'e');
  char* end = nullptr;
  out = std::strtod(t.c_str(), &end);
  return end != t.c_str() && *end == '\0';
}

bool parse_index(const std::string& tok, long& out) {
  char* end = nullptr;
  out = std::strtol(tok.c_str(), &end, 10);
  return end != tok.c_str() && *end == '\0';
}

}  // namespace

FermionHamiltonian parse_fcidump(std::istream& in, std::vector<FcidumpWarning>* warnings) {
  std::string line;
  std::size_t lineno = 0;
  std::string header;
  bool in_header = false;
  bool header_done = false;
  std::size_t header_line = 0;

  while (!header_done && std::getline(in, line)) {
    ++lineno;
    std::string upper = line;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (!in_header) {
      if (upper.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (upper.find("&FCI") == std::string::npos) {
        throw ParseError("expected '&FCI' namelist header", lineno);
      }
      in_header = true;
      header_line = lineno;
    }
    header += upper + " ";
    if (upper.find("&END") != std::string::npos || upper.find('/') != std::string::npos) {
      header_done = true;
    }
  }
  if (!header_done) throw ParseError("unterminated &FCI header", lineno);

  int norb = 0, nelec = 0, ms2 = 0;
  if (!header_int(header, "NORB", norb) || norb <= 0) {
    throw ParseError("header lacks a positive NORB", header_line);
  }
  if (!header_int(header, "NELEC", nelec)) throw ParseError("header lacks NELEC", header_line);
  header_int(header, "MS2", ms2);

  FermionHamiltonian f;
  try {
    f = FermionHamiltonian(static_cast<std::size_t>(norb), nelec, ms2);
    f.n_alpha();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid header: ") + e.what(), header_line);
  }

  std::map<std::tuple<long, long, long, long>, std::size_t> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok.size() != 5) throw ParseError("expected 'value i j k l'", lineno);
    double value = 0.0;
    if (!parse_number(tok[0], value)) {
      throw ParseError("non-numeric integral value '" + tok[0] + "'", lineno);
    }
    long idx[4];
    for (int k = 0; k < 4; ++k) {
      if (!parse_index(tok[k + 1], idx[k])) {
        throw ParseError("non-numeric orbital index '" + tok[k + 1] + "'", lineno);
      }
      if (idx[k] < 0 || idx[k] > norb) {
        throw ParseError("orbital index " + tok[k + 1] + " out of range 0.." +
                         std::to_string(norb), lineno);
      }
    }
    const auto key = std::make_tuple(idx[0], idx[1], idx[2], idx[3]);
    if (auto [it, inserted] = seen.emplace(key, lineno); !inserted) {
      if (warnings) {
        warnings->push_back({lineno, "duplicate integral (" + tok[1] + " " + tok[2] + " " +
                                         tok[3] + " " + tok[4] + ") overrides line " +
                                         std::to_string(it->second)});
      }
      it->second = lineno;
    }
    const long i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    if (i == 0 && j == 0 && k == 0 && l == 0) {
      f.e_core = value;
    } else if (i > 0 && j > 0 && k == 0 && l == 0) {
      f.set_h1(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), value);
    } else if (i > 0 && j > 0 && k > 0 && l > 0) {
      f.set_h2(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1),
               static_cast<std::size_t>(k - 1), static_cast<std::size_t>(l - 1), value);
    } else if (i > 0 && j == 0 && k == 0 && l == 0) {
      // Orbital energies; not part of the Hamiltonian.
    } else {
      throw ParseError("unsupported index pattern", lineno);
    }
  }
  return f;
}

FermionHamiltonian parse_fcidump(const std::filesystem::path& path,
                                 std::vector<FcidumpWarning>* warnings) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open FCIDUMP '" + path.string() + "'");
  return parse_fcidump(in, warnings);
}

}  // namespace qcmx
