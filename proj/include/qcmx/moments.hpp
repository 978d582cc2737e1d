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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <qcmx/pauli.hpp>
#include <qcmx/statevector.hpp>

namespace qcmx {

/// FNV-1a hash over the amplitudes rounded to multiples of 1e-12.
std::uint64_t state_fingerprint(const Statevector& state);

/**
 * @brief Memo of measured Pauli-word expectations for one prepared state.
 *
 * Entries are keyed by canonical word text. A cache is bound to the state
 * whose fingerprint it carries; binding it to any other state throws.
 */
class ExpectationCache {
 public:
  struct Counters {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t skipped_by_threshold = 0;

    friend bool operator==(const Counters&, const Counters&) = default;
  };

  ExpectationCache() = default;

  bool bound() const noexcept { return fingerprint_.has_value(); }
  std::uint64_t fingerprint() const;

  /// Binds an unbound cache to `state`; throws CacheError on a mismatch.
  void bind(const Statevector& state);
  void bind(std::uint64_t fingerprint);

  /// Counts a hit or a miss.
  std::optional<double> lookup(const PauliWord& word);
  /// Read-only probe that leaves the counters untouched.
  std::optional<double> peek(const PauliWord& word) const;

  /// Stores a value in [-1, 1]. Re-inserting a word with a value more than
  /// 1e-12 away from the stored one throws CacheError.
  void insert(const PauliWord& word, double value);
  void insert(const std::string& word_text, double value);

  void note_skipped(std::size_t n) noexcept { counters_.skipped_by_threshold += n; }

  const std::map<std::string, double>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const Counters& counters() const noexcept { return counters_; }
  void set_counters(const Counters& c) noexcept { counters_ = c; }
  void reset_counters() noexcept { counters_ = {}; }

  friend bool operator==(const ExpectationCache&, const ExpectationCache&) = default;

 private:
  std::optional<std::uint64_t> fingerprint_;
  std::map<std::string, double> entries_;
  Counters counters_;
};

inline constexpr int kCacheFormatVersion = 1;

void cache_save(std::ostream& out, const ExpectationCache& cache);
void cache_save_file(const std::string& path, const ExpectationCache& cache);
ExpectationCache cache_load(std::istream& in);
ExpectationCache cache_load_file(const std::string& path);

/**
 * @brief Raw and connected moments plus the word census of each power.
 *
 * Index k-1 holds data for H^k. Census counts come from the untruncated
 * powers, except `kept_words` and `cumulative_kept`, which count the words
 * that survived the threshold.
 */
struct MomentTable {
  std::vector<double> raw;
  std::vector<double> connected;
  double epsilon = 0.0;
  std::vector<std::size_t> distinct_words;
  std::vector<std::size_t> kept_words;
  std::vector<std::size_t> new_words;
  std::vector<std::size_t> cumulative_words;
  std::vector<std::size_t> cumulative_kept;

  int max_power() const noexcept { return static_cast<int>(raw.size()); }
};

/// Measures <H^n> for n = 1..powers.size() from the given expanded powers,
/// dropping terms with |c| < epsilon and serving repeated words from
/// `cache`.
MomentTable raw_moments(const Statevector& state, const std::vector<PauliSum>& powers,
                        ExpectationCache& cache, double epsilon);

MomentTable raw_moments(const Statevector& state, const PauliSum& h, int max_power,
                        ExpectationCache& cache, double epsilon);

/// Rebuilds the moment table purely from cached expectations. Throws
/// CacheError if any surviving word is missing.
MomentTable moments_from_cache(const std::vector<PauliSum>& powers,
                               const ExpectationCache& cache, double epsilon);

/// I_k = <H^k> - sum_{i=0}^{k-2} C(k-1, i) I_{i+1} <H^{k-i-1}>.
std::vector<double> connected_moments(const std::vector<double>& raw);

enum class CmxRecursion {
  /// S_{k,i+1} = S_{k,i} S_{k+2,i} - S_{k+1,i}^2
  Cioslowski,
  /// S_{k,i+1} = S_{k,1} S_{k+2,i} - S_{k+1,i}^2
  AsPrinted,
};

std::string to_string(CmxRecursion r);
CmxRecursion parse_cmx_recursion(const std::string& text);

inline constexpr double kCmxDegenerateTol = 1e-12;

struct CmxResult {
  int order = 0;
  double energy = 0.0;
  /// s_table[i-1][k-1] = S_{k,i}.
  std::vector<std::vector<double>> s_table;
  bool degenerate = false;
};

/// CMX(K) from connected moments I_1..I_{2K-1}.
CmxResult cmx_energy(const std::vector<double>& connected, int order,
                     CmxRecursion recursion = CmxRecursion::Cioslowski);

inline constexpr double kPdsConditionLimit = 1e12;
inline constexpr double kPdsRealRootTol = 1e-8;

struct PdsResult {
  int requested_order = 0;
  /// Order actually solved after any fallback.
  int order = 0;
  bool fell_back = false;
  std::vector<std::vector<double>> matrix_m;
  std::vector<double> vector_b;
  /// a_1..a_K of the monic polynomial x^K + a_1 x^(K-1) + ... + a_K.
  std::vector<double> coeffs_a;
  std::vector<std::complex<double>> roots;
  /// Real roots, ascending.
  std::vector<double> real_roots;
  /// Minimum real root; NaN when `no_real_root`.
  double ground_estimate = 0.0;
  std::vector<double> excited_estimates;
  bool no_real_root = false;
  double condition = 1.0;
};

/// PDS(K) from raw moments <H^1>..<H^{2K-1}>.
PdsResult pds_energy(const std::vector<double>& raw, int order);

/// Value of the monic polynomial with coefficients `a` at `x`.
std::complex<double> pds_polynomial(const std::vector<double>& a, std::complex<double> x);

struct MeasurementRow {
  int power = 0;
  /// |terms(H)|^n, the number of products before merging.
  double naive = 0.0;
  std::size_t actual_new = 0;
  std::size_t cumulative = 0;
  double fraction_kept = 0.0;
};

struct MeasurementReport {
  double epsilon = 0.0;
  int order = 0;
  std::vector<MeasurementRow> rows;
  /// Share of distinct words through H^(2K-1) that survive the threshold.
  double fraction_kept = 0.0;
};

/// Census through power 2K-1. Throws if the table is too short.
MeasurementReport measurement_report(const MomentTable& table, const PauliSum& h, int order);

/// CSV `power,naive,actual_new,cumulative,fraction_kept`.
void write_measurement_csv(std::ostream& out, const MeasurementReport& report);

}  // namespace qcmx
