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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include <qcmx/adapt.hpp>
#include <qcmx/fermion.hpp>
#include <qcmx/moments.hpp>
#include <qcmx/oracle.hpp>
#include <qcmx/pool.hpp>

#include "test_support.hpp"

namespace {

using namespace qcmx;
using testing::data_path;
using testing::random_state;
using testing::random_sum;
namespace fs = std::filesystem;

struct Outcome {
  bool ok = true;
  std::string detail;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

Statevector to_state(const Eigen::VectorXcd& v) {
  return Statevector(std::vector<Complex>(v.data(), v.data() + v.size()));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int run_cli(const std::string& args, const fs::path& log) {
  const std::string cmd = std::string(QCMX_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / "qcmx_acceptance" / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

/// Random program over the Pauli pool acting on `reference`.
AnsatzProgram random_program(std::mt19937_64& rng, const BasisState& reference, int length) {
  const auto pool = build_pauli_pool(reference.n_qubits());
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_real_distribution<double> angle(-1.0, 1.0);
  AnsatzProgram p;
  p.reference = reference;
  for (int i = 0; i < length; ++i) p.steps.push_back({pool[pick(rng)], angle(rng)});
  return p;
}

Outcome twolevel_exactness() {
  Outcome o;
  const auto h = PauliSum::from_terms(1, {{"Z0", 1.0}, {"X0", 1.0}});
  ExpectationCache cache;
  const MomentTable t = raw_moments(prepare_basis_state(BasisState(1, 0)), h, 3, cache, 0.0);
  const double pds = pds_energy(t.raw, 2).ground_estimate;
  const CmxResult cmx = cmx_energy(t.connected, 2);
  o.check(std::abs(pds + std::sqrt(2.0)) <= 1e-12, "PDS(2) = " + num(pds));
  o.check(std::abs(cmx.energy - 1.5) <= 1e-12, "CMX(2) = " + num(cmx.energy));
  o.check(!cmx.degenerate, "CMX(2) flagged degenerate");
  o.detail = o.ok ? "PDS(2) = -sqrt(2), CMX(2) = 1.5" : o.detail;
  return o;
}

Outcome pds1_is_expectation() {
  Outcome o;
  std::mt19937_64 rng(101);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto h = random_sum(rng, n, 3 + t % 10, true);
    const Statevector s = random_state(rng, n);
    ExpectationCache cache;
    const MomentTable tab = raw_moments(s, h, 1, cache, 0.0);
    worst = std::max(worst, std::abs(pds_energy(tab.raw, 1).ground_estimate - expect_sum(s, h)));
  }
  o.check(worst <= 1e-12, "max deviation " + num(worst));
  if (o.ok) o.detail = "max deviation " + num(worst);
  return o;
}

Outcome variational_bounds() {
  Outcome o;
  std::mt19937_64 rng(202);
  double worst_ground = -1e300, worst_excited = -1e300;
  int excited_checks = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 3;
    const auto h = random_sum(rng, n, 3 + t % 12, true);
    const Statevector s = random_state(rng, n);
    const Eigen::VectorXd levels = exact_spectrum(sum_to_matrix(h)).values;
    ExpectationCache cache;
    const MomentTable tab = raw_moments(s, h, 5, cache, 0.0);
    for (int k = 1; k <= 3; ++k) {
      const PdsResult r = pds_energy(tab.raw, k);
      if (r.no_real_root) {
        o.check(false, "instance " + std::to_string(t) + " K=" + std::to_string(k) +
                           " has no real root");
        continue;
      }
      worst_ground = std::max(worst_ground, levels(0) - r.ground_estimate);
      if (k == 3 && r.real_roots.size() >= 2) {
        worst_excited = std::max(worst_excited, levels(1) - r.real_roots[1]);
        ++excited_checks;
      }
    }
  }
  o.check(worst_ground <= 1e-9, "ground bound violated by " + num(worst_ground));
  o.check(worst_excited <= 1e-9, "second-root bound violated by " + num(worst_excited));
  o.check(excited_checks > 0, "no PDS(3) second root");
  if (o.ok) {
    o.detail = "max violation ground " + num(worst_ground) + ", excited " + num(worst_excited) +
               " over " + std::to_string(excited_checks) + " second roots";
  }
  return o;
}

Outcome closed_form_cmx() {
  Outcome o;
  std::mt19937_64 rng(303);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 3;
    const DenseOperator m = sum_to_matrix(random_sum(rng, n, 4 + t % 8, true));
    const auto i = connected_moments(oracle_moments(random_state(rng, n), m, 5));
    const double e2 = i[0] - i[1] * i[1] / i[2];
    const double d = i[1] * i[3] - i[2] * i[2];
    const double e3 = i[0] - i[1] * i[1] / i[2] - (1.0 / i[2]) * d * d / (i[2] * i[4] - i[3] * i[3]);
    worst = std::max(worst, rel_err(cmx_energy(i, 2).energy, e2) * std::max(1.0, std::abs(e2)) /
                                std::abs(e2));
    worst = std::max(worst, rel_err(cmx_energy(i, 3).energy, e3) * std::max(1.0, std::abs(e3)) /
                                std::abs(e3));
  }
  o.check(worst <= 1e-12, "max relative deviation " + num(worst));
  if (o.ok) o.detail = "max relative deviation " + num(worst);
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto f = parse_fcidump(data_path("h2_sto3g_0.7414.fcidump"));
  const PauliSum h = jordan_wigner(f);
  const DenseOperator m = sum_to_matrix(h);
  const auto powers = sum_power(h, 7);
  std::mt19937_64 rng(404);
  std::vector<Statevector> states{prepare_basis_state(hf_bitstring(f))};
  for (int i = 0; i < 20; ++i) {
    states.push_back(prepare_ansatz_state(random_program(rng, hf_bitstring(f), 1 + i % 6)));
  }
  double worst = 0.0;
  for (const auto& s : states) {
    ExpectationCache cache;
    const MomentTable t = raw_moments(s, powers, cache, 0.0);
    const auto want = oracle_moments(s, m, 7);
    for (std::size_t k = 0; k < 7; ++k) worst = std::max(worst, rel_err(t.raw[k], want[k]));
  }
  o.check(worst <= 1e-10, "max relative deviation " + num(worst));
  if (o.ok) o.detail = "21 states, max relative deviation " + num(worst);
  return o;
}

Outcome cache_plateau() {
  Outcome o;
  const auto f = parse_fcidump(data_path("h2_sto3g_0.7414.fcidump"));
  const PauliSum h = jordan_wigner(f);
  const auto powers7 = sum_power(h, 7);
  const auto powers9 = sum_power(h, 9);
  std::mt19937_64 rng(505);
  const std::vector<std::pair<std::string, Statevector>> states{
      {"HF", prepare_basis_state(hf_bitstring(f))},
      {"random", prepare_ansatz_state(random_program(rng, hf_bitstring(f), 8))}};
  int plateau = 0;
  for (const auto& [name, s] : states) {
    ExpectationCache cache;
    const MomentTable cold = raw_moments(s, powers7, cache, 0.0);
    int first_zero = 0;
    for (std::size_t k = 0; k < cold.new_words.size(); ++k) {
      if (cold.new_words[k] == 0 && first_zero == 0) first_zero = static_cast<int>(k) + 1;
      if (first_zero != 0 && cold.new_words[k] != 0) {
        o.check(false, name + ": new words reappear at power " + std::to_string(k + 1));
      }
    }
    o.check(first_zero != 0, name + ": no plateau through power 7");
    plateau = first_zero;

    cache.reset_counters();
    const MomentTable warm = raw_moments(s, powers7, cache, 0.0);
    o.check(cache.counters().misses == 0, name + ": warm rerun missed");
    o.check(warm.raw == cold.raw, name + ": warm moments differ");
    for (int k = 1; k <= 4; ++k) {
      o.check(pds_energy(warm.raw, k).ground_estimate == pds_energy(cold.raw, k).ground_estimate &&
                  cmx_energy(warm.connected, k).energy == cmx_energy(cold.connected, k).energy,
              name + ": warm energies differ at K=" + std::to_string(k));
    }

    // Orders beyond the measured horizon, from cached values alone.
    const MomentTable from_cache = moments_from_cache(powers9, cache, 0.0);
    ExpectationCache fresh;
    const MomentTable direct = raw_moments(s, powers9, fresh, 0.0);
    for (int k : {4, 5}) {
      const double a = pds_energy(from_cache.raw, k).ground_estimate;
      const double b = pds_energy(direct.raw, k).ground_estimate;
      o.check(std::abs(a - b) <= 1e-12, name + ": PDS(" + std::to_string(k) + ") from cache off by " +
                                            num(std::abs(a - b)));
    }
  }
  if (o.ok) o.detail = "no new words from power " + std::to_string(plateau) + " through 7";
  return o;
}

Outcome threshold_accuracy() {
  Outcome o;
  const std::vector<double> eps_list{0.0, 1e-5, 1e-4, 1e-3, 1e-2};
  double worst = 0.0;
  for (const char* name : {"h2_sto3g_0.7414.fcidump", "h4_square_sto6g_2.0.fcidump"}) {
    const auto f = parse_fcidump(data_path(name));
    const PauliSum h = jordan_wigner(f);
    const auto powers = sum_power(h, 5);
    const Statevector s = prepare_basis_state(hf_bitstring(f));
    ExpectationCache cache;
    std::vector<MomentTable> tables;
    for (double eps : eps_list) tables.push_back(raw_moments(s, powers, cache, eps));
    AdaptOptions one;
    one.max_iterations = 1;
    const Statevector a1 =
        prepare_ansatz_state(adapt_run(h, build_pauli_pool(h.n_qubits()), hf_bitstring(f), one).program);
    ExpectationCache a1_cache;
    const MomentTable a1_exact = raw_moments(a1, powers, a1_cache, 0.0);
    const MomentTable a1_cut = raw_moments(a1, powers, a1_cache, 1e-5);
    for (int k = 1; k <= 3; ++k) {
      for (const auto& [label, exact, cut] : {std::tuple{"HF", &std::as_const(tables[0]), &std::as_const(tables[1])},
                                               std::tuple{"adapt1", &a1_exact, &a1_cut}}) {
        const double d = std::abs(pds_energy(cut->raw, k).ground_estimate -
                                  pds_energy(exact->raw, k).ground_estimate);
        worst = std::max(worst, d);
        o.check(d <= 1e-6, std::string(name) + " " + label + ": PDS(" + std::to_string(k) +
                               ") moved by " + num(d));
      }
    }
    for (std::size_t e = 0; e < tables.size(); ++e) {
      double prev_k = -1.0;
      for (int k = 1; k <= 3; ++k) {
        const double frac = measurement_report(tables[e], h, k).fraction_kept;
        if (frac < prev_k) {
          o.check(false, std::string(name) + " eps " + num(eps_list[e]) + ": fraction K=" +
                             std::to_string(k - 1) + " " + num(prev_k) + " > K=" +
                             std::to_string(k) + " " + num(frac));
        }
        prev_k = frac;
        if (e > 0) {
          const double before = measurement_report(tables[e - 1], h, k).fraction_kept;
          o.check(frac <= before, std::string(name) + ": fraction increases in epsilon at K=" +
                                      std::to_string(k));
        }
      }
    }
  }
  o.detail = "max |E(1e-5) - E(0)| = " + num(worst) + (o.ok ? "" : "; ") + o.detail;
  return o;
}

Outcome adapt_pipeline() {
  Outcome o;
  const auto f = parse_fcidump(data_path("h2_631g_2.0.fcidump"));
  const PauliSum h = jordan_wigner(f);
  const double fci = sector_spectrum(sum_to_matrix(h), f.n_alpha(), f.n_beta())(0);
  const auto pool = build_pauli_pool(h.n_qubits());
  const BasisState hf = hf_bitstring(f);

  AdaptOptions full;
  full.grad_stop = 1e-2;
  full.vqe.energy_tol = 1e-7;
  const AdaptResult ar = adapt_run(h, pool, hf, full);
  const double err_full = std::abs(ar.energy - fci);
  o.check(err_full <= 1e-4, "full ADAPT error " + num(err_full));

  auto pds2 = [&](const Statevector& s) {
    ExpectationCache cache;
    return pds_energy(raw_moments(s, h, 3, cache, 0.0).raw, 2).ground_estimate;
  };
  AdaptOptions one = full;
  one.max_iterations = 1;
  const AdaptResult a1 = adapt_run(h, pool, hf, one);
  const double err_a1_pds = std::abs(pds2(prepare_ansatz_state(a1.program)) - fci);
  const double err_hf_pds = std::abs(pds2(prepare_basis_state(hf)) - fci);
  const double err_a1 = std::abs(a1.energy - fci);
  o.check(err_a1_pds < err_hf_pds && err_a1_pds < err_a1,
          "one-iteration PDS(2) error " + num(err_a1_pds) + " vs HF-PDS(2) " + num(err_hf_pds) +
              " and one-iteration " + num(err_a1));

  // Shift rule against central differences on the converged and perturbed programs.
  std::mt19937_64 rng(808);
  std::uniform_real_distribution<double> jitter(-0.3, 0.3);
  double worst = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    AnsatzProgram p = ar.program;
    if (trial > 0) {
      auto th = p.thetas();
      for (auto& t : th) t += jitter(rng);
      p.set_thetas(th);
    }
    const auto g = parameter_shift_gradient(h, p);
    const auto th = p.thetas();
    const double step = 1e-5;
    for (std::size_t i = 0; i < th.size(); ++i) {
      auto plus = th, minus = th;
      plus[i] += step;
      minus[i] -= step;
      AnsatzProgram pp = p, pm = p;
      pp.set_thetas(plus);
      pm.set_thetas(minus);
      const double fd = (ansatz_energy(h, pp) - ansatz_energy(h, pm)) / (2 * step);
      worst = std::max(worst, std::abs(fd - g[i]));
    }
  }
  o.check(worst <= 1e-6, "shift rule vs finite differences " + num(worst));
  if (o.ok) {
    o.detail = "full error " + num(err_full) + " (" + std::to_string(ar.program.steps.size()) +
               " ops); PDS(2) errors adapt1 " + num(err_a1_pds) + ", HF " + num(err_hf_pds) +
               ", adapt1 alone " + num(err_a1) + "; gradient gap " + num(worst);
  }
  return o;
}

Outcome degenerate_guards() {
  Outcome o;
  const auto f = parse_fcidump(data_path("h2_sto3g_0.7414.fcidump"));
  const PauliSum h = jordan_wigner(f);
  const Spectrum levels = exact_spectrum(sum_to_matrix(h), true);
  const Statevector ground = to_state(levels.vectors.col(0));
  const double e0 = levels.values(0);

  ExpectationCache cache;
  const MomentTable t = raw_moments(ground, h, 5, cache, 0.0);
  for (int k = 2; k <= 3; ++k) {
    const CmxResult c = cmx_energy(t.connected, k);
    o.check(c.degenerate, "CMX(" + std::to_string(k) + ") not flagged");
    o.check(c.energy == t.connected[0] && std::abs(c.energy - e0) <= 1e-10,
            "CMX(" + std::to_string(k) + ") energy " + num(c.energy));
    const PdsResult p = pds_energy(t.raw, k);
    o.check(p.fell_back && p.order == 1, "PDS(" + std::to_string(k) + ") did not fall back to 1");
    o.check(std::abs(p.ground_estimate - e0) <= 1e-10,
            "PDS(" + std::to_string(k) + ") energy " + num(p.ground_estimate));
  }

  const fs::path dir = scratch("guards");
  {
    std::ofstream amp(dir / "ground.amp");
    write_amplitudes(amp, ground);
  }
  const int code = run_cli("energy --fcidump " + data_path("h2_sto3g_0.7414.fcidump") +
                               " --state file --state-file " + (dir / "ground.amp").string() +
                               " --order 2 --epsilon 0 --out " + (dir / "out").string(),
                           dir / "log.txt");
  o.check(code == 2, "CLI exit code " + std::to_string(code));
  if (o.ok) o.detail = "CMX degenerate, PDS fell back to K=1, CLI exit 2";
  return o;
}

Outcome determinism() {
  Outcome o;
  const fs::path dir = scratch("determinism");
  const std::string args = "energy --fcidump " + data_path("h2_sto3g_2.0.fcidump") +
                           " --state adapt1 --order 1,2,3 --out ";
  const int a = run_cli(args + (dir / "a").string(), dir / "a.log");
  const int b = run_cli(args + (dir / "b").string(), dir / "b.log");
  o.check(a == b && (a == 0 || a == 2), "exit codes " + std::to_string(a) + ", " + std::to_string(b));
  for (const char* name : {"energy.csv", "cache.json"}) {
    const std::string x = slurp(dir / "a" / name);
    o.check(!x.empty() && x == slurp(dir / "b" / name), std::string(name) + " differs");
  }
  if (o.ok) o.detail = "energy.csv and cache.json byte-identical";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "two-level exactness", 1.0, twolevel_exactness},
      {2, "PDS(1) equals <H>", 5.0, pds1_is_expectation},
      {3, "variational bounds", 60.0, variational_bounds},
      {4, "closed-form CMX(2)/CMX(3)", 5.0, closed_form_cmx},
      {5, "oracle moment equivalence", 60.0, oracle_equivalence},
      {6, "cache plateau and reuse", 60.0, cache_plateau},
      {7, "threshold accuracy and term census", 300.0, threshold_accuracy},
      {8, "ADAPT pipeline", 300.0, adapt_pipeline},
      {9, "degenerate-input guards", 1.0, degenerate_guards},
      {10, "determinism", 60.0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail += " (over the " + num(c.limit_s) + " s limit)";
    }
    if (!o.ok) ++failures;
    std::printf("criterion %2d: %s  %s [%.2f s] %s\n", c.id, o.ok ? "PASS" : "FAIL", c.name, secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
