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
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include <qcmx/errors.hpp>
#include <qcmx/moments.hpp>

namespace qcmx {

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;
constexpr double kQuantum = 1e-12;
constexpr double kConflictTol = 1e-12;

void fnv_mix(std::uint64_t& h, std::uint64_t v) {
  for (int b = 0; b < 8; ++b) {
    h ^= (v >> (8 * b)) & 0xFFU;
    h *= kFnvPrime;
  }
}

std::string to_hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

std::uint64_t state_fingerprint(const Statevector& state) {
  std::uint64_t h = kFnvOffset;
  fnv_mix(h, state.n_qubits());
  for (const Complex& a : state.amplitudes()) {
    fnv_mix(h, static_cast<std::uint64_t>(std::llround(a.real() / kQuantum)));
    fnv_mix(h, static_cast<std::uint64_t>(std::llround(a.imag() / kQuantum)));
  }
  return h;
}

std::uint64_t ExpectationCache::fingerprint() const {
  if (!fingerprint_) throw CacheError("cache is not bound to a state");
  return *fingerprint_;
}

void ExpectationCache::bind(const Statevector& state) { bind(state_fingerprint(state)); }

void ExpectationCache::bind(std::uint64_t fingerprint) {
  if (!fingerprint_) {
    fingerprint_ = fingerprint;
    return;
  }
  if (*fingerprint_ != fingerprint) {
    throw CacheError("cache fingerprint " + to_hex(*fingerprint_) +
                     " does not match state fingerprint " + to_hex(fingerprint));
  }
}

std::optional<double> ExpectationCache::lookup(const PauliWord& word) {
  auto v = peek(word);
  if (v) {
    ++counters_.hits;
  } else {
    ++counters_.misses;
  }
  return v;
}

std::optional<double> ExpectationCache::peek(const PauliWord& word) const {
  auto it = entries_.find(word.str());
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ExpectationCache::insert(const PauliWord& word, double value) { insert(word.str(), value); }

void ExpectationCache::insert(const std::string& word_text, double value) {
  if (!std::isfinite(value) || value < -1.0 || value > 1.0) {
    throw CacheError("expectation of " + word_text + " outside [-1, 1]");
  }
  auto [it, inserted] = entries_.emplace(word_text, value);
  if (!inserted && std::abs(it->second - value) > kConflictTol) {
    throw CacheError("conflicting values cached for " + word_text);
  }
}

void cache_save(std::ostream& out, const ExpectationCache& cache) {
  nlohmann::json j;
  j["version"] = kCacheFormatVersion;
  j["fingerprint"] = cache.bound() ? nlohmann::json(to_hex(cache.fingerprint())) : nlohmann::json();
  j["entries"] = cache.entries();
  const auto& c = cache.counters();
  j["counters"] = {{"hits", c.hits},
                   {"misses", c.misses},
                   {"skipped_by_threshold", c.skipped_by_threshold}};
  out << j.dump(2) << '\n';
}

void cache_save_file(const std::string& path, const ExpectationCache& cache) {
  std::ofstream out(path);
  if (!out) throw CacheError("cannot write cache file " + path);
  cache_save(out, cache);
  if (!out) throw CacheError("failed writing cache file " + path);
}

ExpectationCache cache_load(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("corrupt cache file: ") + e.what());
  }
  ExpectationCache cache;
  try {
    if (!j.is_object() || !j.contains("version")) throw CacheError("cache file has no version");
    const int version = j.at("version").get<int>();
    if (version != kCacheFormatVersion) {
      throw CacheError("unsupported cache version " + std::to_string(version));
    }
    const auto& fp = j.at("fingerprint");
    if (!fp.is_null()) {
      const auto text = fp.get<std::string>();
      std::size_t used = 0;
      const auto v = std::stoull(text, &used, 16);
      if (used != text.size()) throw CacheError("malformed fingerprint " + text);
      cache.bind(static_cast<std::uint64_t>(v));
    }
    for (const auto& [key, value] : j.at("entries").items()) {
      if (PauliWord::parse(key, kMaxQubits).str() != key) {
        throw CacheError("non-canonical word key '" + key + "'");
      }
      cache.insert(key, value.get<double>());
    }
    const auto& c = j.at("counters");
    cache.set_counters({c.at("hits").get<std::size_t>(), c.at("misses").get<std::size_t>(),
                        c.at("skipped_by_threshold").get<std::size_t>()});
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("corrupt cache file: ") + e.what());
  } catch (const ParseError& e) {
    throw CacheError(std::string("corrupt cache file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw CacheError(std::string("corrupt cache file: ") + e.what());
  }
  return cache;
}

ExpectationCache cache_load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot open cache file " + path);
  return cache_load(in);
}

}  // namespace qcmx
