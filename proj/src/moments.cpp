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
#include <ostream>
#include <unordered_set>

#include <qcmx/errors.hpp>
#include <qcmx/moments.hpp>

namespace qcmx {

namespace {

using WordSet = std::unordered_set<PauliWord, PauliWordHash>;

void check_powers(const std::vector<PauliSum>& powers) {
  if (powers.empty()) throw std::invalid_argument("need at least one Hamiltonian power");
  for (const auto& p : powers) {
    if (p.n_qubits() != powers.front().n_qubits()) {
      throw DimensionError("Hamiltonian powers act on different registers");
    }
  }
}

double real_coeff(const PauliWord& w, Complex c) {
  if (std::abs(c.imag()) > kHermitianClampTol) {
    throw NumericalError("non-Hermitian term " + w.str() + " in Hamiltonian power");
  }
  return c.real();
}

// Shared driver: `measure` returns the expectation of a surviving word.
template <typename Measure>
MomentTable build_table(const std::vector<PauliSum>& powers, double epsilon, Measure&& measure,
                        std::size_t& skipped) {
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be non-negative");
  check_powers(powers);
  MomentTable t;
  t.epsilon = epsilon;
  WordSet seen;
  WordSet seen_kept;
  for (const auto& hn : powers) {
    std::size_t fresh = 0;
    for (const auto& [w, c] : hn.terms()) {
      (void)c;
      if (seen.insert(w).second) ++fresh;
    }
    Truncation tr = truncate_by_coeff(hn, epsilon);
    skipped += tr.dropped_count;
    double value = 0.0;
    for (const auto& [w, c] : tr.kept.terms()) {
      seen_kept.insert(w);
      value += real_coeff(w, c) * measure(w);
    }
    t.raw.push_back(value);
    t.distinct_words.push_back(hn.size());
    t.kept_words.push_back(tr.kept.size());
    t.new_words.push_back(fresh);
    t.cumulative_words.push_back(seen.size());
    t.cumulative_kept.push_back(seen_kept.size());
  }
  t.connected = connected_moments(t.raw);
  return t;
}

}  // namespace

MomentTable raw_moments(const Statevector& state, const std::vector<PauliSum>& powers,
                        ExpectationCache& cache, double epsilon) {
  check_powers(powers);
  if (powers.front().n_qubits() != state.n_qubits()) {
    throw DimensionError("state and Hamiltonian qubit counts differ");
  }
  cache.bind(state);
  std::size_t skipped = 0;
  MomentTable t = build_table(
      powers, epsilon,
      [&](const PauliWord& w) {
        if (auto v = cache.lookup(w)) return *v;
        const double v = expect_word(state, w);
        cache.insert(w, v);
        return v;
      },
      skipped);
  cache.note_skipped(skipped);
  return t;
}

MomentTable raw_moments(const Statevector& state, const PauliSum& h, int max_power,
                        ExpectationCache& cache, double epsilon) {
  if (max_power < 1) throw std::invalid_argument("max_power must be at least 1");
  return raw_moments(state, sum_power(h, max_power), cache, epsilon);
}

MomentTable moments_from_cache(const std::vector<PauliSum>& powers,
                               const ExpectationCache& cache, double epsilon) {
  std::size_t skipped = 0;
  return build_table(
      powers, epsilon,
      [&](const PauliWord& w) {
        auto v = cache.peek(w);
        if (!v) throw CacheError("word " + w.str() + " is not in the cache");
        return *v;
      },
      skipped);
}

std::vector<double> connected_moments(const std::vector<double>& raw) {
  const std::size_t n = raw.size();
  auto moment = [&](std::size_t k) { return k == 0 ? 1.0 : raw[k - 1]; };
  // Pascal row k-1, rebuilt per k.
  std::vector<double> binom{1.0};
  std::vector<double> conn(n, 0.0);
  for (std::size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      std::vector<double> next(k, 1.0);
      for (std::size_t i = 1; i + 1 < k; ++i) next[i] = binom[i - 1] + binom[i];
      binom = std::move(next);
    }
    double value = moment(k);
    for (std::size_t i = 0; i + 2 <= k; ++i) {
      value -= binom[i] * conn[i] * moment(k - i - 1);
    }
    conn[k - 1] = value;
  }
  return conn;
}

MeasurementReport measurement_report(const MomentTable& table, const PauliSum& h, int order) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  const int top = 2 * order - 1;
  if (table.max_power() < top) {
    throw std::invalid_argument("moment table does not reach H^" + std::to_string(top));
  }
  MeasurementReport r;
  r.epsilon = table.epsilon;
  r.order = order;
  const double terms = static_cast<double>(h.size());
  for (int n = 1; n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    MeasurementRow row;
    row.power = n;
    row.naive = std::pow(terms, n);
    row.actual_new = table.new_words[i];
    row.cumulative = table.cumulative_words[i];
    row.fraction_kept = row.cumulative == 0 ? 0.0
                                            : static_cast<double>(table.cumulative_kept[i]) /
                                                  static_cast<double>(row.cumulative);
    r.rows.push_back(row);
  }
  r.fraction_kept = r.rows.back().fraction_kept;
  return r;
}

void write_measurement_csv(std::ostream& out, const MeasurementReport& report) {
  out << "power,naive,actual_new,cumulative,fraction_kept\n";
  const auto old_precision = out.precision(17);
  for (const auto& row : report.rows) {
    out << row.power << ',' << row.naive << ',' << row.actual_new << ',' << row.cumulative << ','
        << row.fraction_kept << '\n';
  }
  out.precision(old_precision);
}

}  // namespace qcmx
