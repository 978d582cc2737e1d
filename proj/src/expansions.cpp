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
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

#include <qcmx/moments.hpp>

namespace qcmx {

std::string to_string(CmxRecursion r) {
  return r == CmxRecursion::Cioslowski ? "cioslowski" : "as-printed";
}

CmxRecursion parse_cmx_recursion(const std::string& text) {
  if (text == "cioslowski") return CmxRecursion::Cioslowski;
  if (text == "as-printed") return CmxRecursion::AsPrinted;
  throw std::invalid_argument("unknown CMX recursion '" + text + "'");
}

CmxResult cmx_energy(const std::vector<double>& connected, int order, CmxRecursion recursion) {
  if (order < 1) throw std::invalid_argument("CMX order must be at least 1");
  const auto len = static_cast<std::size_t>(2 * order - 1);
  if (connected.size() < len) {
    throw std::invalid_argument("CMX(" + std::to_string(order) + ") needs " +
                                std::to_string(len) + " connected moments");
  }
  CmxResult r;
  r.order = order;
  r.energy = connected[0];
  r.s_table.emplace_back(connected.begin(), connected.begin() + static_cast<long>(len));
  while (r.s_table.back().size() > 2) {
    const auto& prev = r.s_table.back();
    const auto& first = r.s_table.front();
    std::vector<double> next(prev.size() - 2);
    for (std::size_t k = 0; k < next.size(); ++k) {
      const double lead = recursion == CmxRecursion::Cioslowski ? prev[k] : first[k];
      next[k] = lead * prev[k + 2] - prev[k + 1] * prev[k + 1];
    }
    r.s_table.push_back(std::move(next));
  }

  // S_{k,m} lives at s_table[m-1][k-1].
  auto s = [&](int k, int m) { return m == 0 ? 1.0 : r.s_table[m - 1][k - 1]; };
  const int depth = order - 1;
  for (int m = 1; m <= depth; ++m) {
    if (std::abs(s(3, m)) < kCmxDegenerateTol || std::abs(s(2, m - 1)) < kCmxDegenerateTol) {
      r.degenerate = true;
      return r;
    }
  }
  double nested = 0.0;
  for (int m = depth; m >= 1; --m) {
    const double sm = s(2, m);
    const double sp = s(2, m - 1);
    const double term = sm * sm / (sp * sp * s(3, m));
    nested = term * (1.0 + nested);
  }
  r.energy = connected[0] - nested;
  return r;
}

std::complex<double> pds_polynomial(const std::vector<double>& a, std::complex<double> x) {
  std::complex<double> p = 1.0;
  for (double c : a) p = p * x + c;
  return p;
}

namespace {

std::complex<double> pds_derivative(const std::vector<double>& a, std::complex<double> x) {
  const auto k = static_cast<double>(a.size());
  std::complex<double> d = k;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    d = d * x + (k - 1.0 - static_cast<double>(i)) * a[i];
  }
  return d;
}

}  // namespace

PdsResult pds_energy(const std::vector<double>& raw, int order) {
  if (order < 1) throw std::invalid_argument("PDS order must be at least 1");
  if (raw.size() < static_cast<std::size_t>(2 * order - 1)) {
    throw std::invalid_argument("PDS(" + std::to_string(order) + ") needs moments through H^" +
                                std::to_string(2 * order - 1));
  }
  const int k = order;
  auto moment = [&](int n) { return n == 0 ? 1.0 : raw[static_cast<std::size_t>(n - 1)]; };

  Eigen::MatrixXd m(k, k);
  Eigen::VectorXd b(k);
  for (int i = 1; i <= k; ++i) {
    b(i - 1) = moment(2 * k - i);
    for (int j = 1; j <= k; ++j) m(i - 1, j - 1) = moment(2 * k - (i + j));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smin = sv(k - 1);
  const double cond = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();

  if (k > 1 && !(cond <= kPdsConditionLimit)) {
    PdsResult lower = pds_energy(raw, k - 1);
    lower.requested_order = order;
    lower.fell_back = true;
    return lower;
  }

  PdsResult r;
  r.requested_order = order;
  r.order = k;
  r.condition = cond;
  r.matrix_m.assign(k, std::vector<double>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) r.matrix_m[i][j] = m(i, j);
  }
  r.vector_b.assign(b.data(), b.data() + k);
  const Eigen::VectorXd a = svd.solve(-b);
  r.coeffs_a.assign(a.data(), a.data() + k);

  if (k == 1) {
    r.roots.emplace_back(-a(0), 0.0);
  } else {
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(k, k);
    for (int j = 0; j < k; ++j) companion(0, j) = -a(j);
    for (int i = 1; i < k; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> es(companion, false);
    if (es.info() != Eigen::Success) throw std::runtime_error("PDS root solve failed");
    for (int i = 0; i < k; ++i) {
      std::complex<double> x = es.eigenvalues()(i);
      const std::complex<double> px = pds_polynomial(r.coeffs_a, x);
      const std::complex<double> dx = pds_derivative(r.coeffs_a, x);
      if (std::abs(dx) > 0.0) {
        const std::complex<double> polished = x - px / dx;
        if (std::abs(pds_polynomial(r.coeffs_a, polished)) < std::abs(px)) x = polished;
      }
      r.roots.push_back(x);
    }
  }
  std::sort(r.roots.begin(), r.roots.end(), [](auto lhs, auto rhs) {
    if (lhs.real() != rhs.real()) return lhs.real() < rhs.real();
    return lhs.imag() < rhs.imag();
  });
  for (const auto& x : r.roots) {
    if (std::abs(x.imag()) <= kPdsRealRootTol * (1.0 + std::abs(x.real()))) {
      r.real_roots.push_back(x.real());
    }
  }
  if (r.real_roots.empty()) {
    r.no_real_root = true;
    r.ground_estimate = std::numeric_limits<double>::quiet_NaN();
  } else {
    r.ground_estimate = r.real_roots.front();
    r.excited_estimates.assign(r.real_roots.begin() + 1, r.real_roots.end());
  }
  return r;
}

}  // namespace qcmx
