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

#include <gtest/gtest.h>

#include <qcmx/errors.hpp>
#include <qcmx/fermion.hpp>
#include <qcmx/oracle.hpp>

#include "test_support.hpp"

namespace qcmx {
namespace {

using testing::data_path;
using testing::dense_sum;
using testing::random_state;
using testing::random_sum;
using testing::to_eigen;

TEST(SumToMatrix, SingleQubitZ) {
  const DenseOperator m = sum_to_matrix(PauliSum::from_terms(1, {{"Z0", 1.0}}));
  DenseOperator want(2, 2);
  want << 1.0, 0.0, 0.0, -1.0;
  EXPECT_EQ(m, want);
}

TEST(SumToMatrix, XOnQubitZeroSwapsBitZero) {
  const DenseOperator m = sum_to_matrix(PauliSum::from_terms(2, {{"X0", 1.0}}));
  for (Eigen::Index r = 0; r < 4; ++r) {
    for (Eigen::Index c = 0; c < 4; ++c) {
      EXPECT_EQ(m(r, c), Complex((r ^ c) == 1 ? 1.0 : 0.0, 0.0)) << r << "," << c;
    }
  }
}

TEST(SumToMatrix, MatchesKroneckerAssembly) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 5;
    const auto a = random_sum(rng, n, 6, t % 2 == 0);
    EXPECT_LE((sum_to_matrix(a) - dense_sum(a)).norm(), 1e-12);
  }
}

TEST(SumToMatrix, QuadraticFormMatchesExpectSum) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + t % 7;
    const auto a = random_sum(rng, n, 8, true);
    const Statevector s = random_state(rng, n);
    const Eigen::VectorXcd v = to_eigen(s);
    const Complex q = v.dot(sum_to_matrix(a) * v);
    EXPECT_NEAR(q.real(), expect_sum(s, a), 1e-10);
    EXPECT_NEAR(q.imag(), 0.0, 1e-10);
  }
}

TEST(SumToMatrix, HermitianSumGivesHermitianMatrix) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const DenseOperator m = sum_to_matrix(random_sum(rng, 4, 12, true));
    EXPECT_LE((m - m.adjoint()).norm(), 1e-10);
  }
}

TEST(SumToMatrix, SizeLimit) {
  EXPECT_THROW(sum_to_matrix(PauliSum::from_terms(13, {{"Z12", 1.0}})), SizeLimitError);
  EXPECT_THROW(sum_to_matrix(PauliSum::from_terms(3, {{"Z0", 1.0}}), 2), SizeLimitError);
  EXPECT_NO_THROW(sum_to_matrix(PauliSum::from_terms(3, {{"Z0", 1.0}}), 3));
}

TEST(SumToMatrix, H2FixtureGroundState) {
  const auto f = parse_fcidump(data_path("h2_sto3g_0.7414.fcidump"));
  const DenseOperator m = sum_to_matrix(jordan_wigner(f));
  ASSERT_EQ(m.rows(), 16);
  EXPECT_LE((m - m.adjoint()).norm(), 1e-10);
  EXPECT_NEAR(exact_spectrum(m).values(0), -1.1373, 5e-5);
}

TEST(ExactSpectrum, Examples) {
  DenseOperator d(2, 2);
  d << 1.0, 0.0, 0.0, -1.0;
  const Spectrum s = exact_spectrum(d);
  EXPECT_EQ(s.values(0), -1.0);
  EXPECT_EQ(s.values(1), 1.0);
  EXPECT_EQ(s.vectors.size(), 0);

  const Spectrum zx = exact_spectrum(sum_to_matrix(PauliSum::from_terms(1, {{"Z0", 1.0}, {"X0", 1.0}})));
  EXPECT_NEAR(zx.values(0), -std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(zx.values(1), std::sqrt(2.0), 1e-14);
}

TEST(ExactSpectrum, ShiftInvariance) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    const DenseOperator m = sum_to_matrix(random_sum(rng, 3, 7, true));
    const double c = 0.5 * (t - 10);
    const DenseOperator shifted = m + Complex(c, 0.0) * DenseOperator::Identity(m.rows(), m.cols());
    const Eigen::VectorXd a = exact_spectrum(m).values;
    const Eigen::VectorXd b = exact_spectrum(shifted).values;
    for (Eigen::Index k = 0; k < a.size(); ++k) EXPECT_NEAR(b(k), a(k) + c, 1e-10);
  }
}

TEST(ExactSpectrum, AscendingAndResidualBound) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    const DenseOperator m = sum_to_matrix(random_sum(rng, 1 + t % 5, 9, true));
    const Spectrum s = exact_spectrum(m, true);
    const double norm = m.operatorNorm();
    for (Eigen::Index k = 0; k < s.values.size(); ++k) {
      if (k > 0) EXPECT_LE(s.values(k - 1), s.values(k));
      const Eigen::VectorXcd v = s.vectors.col(k);
      EXPECT_LE((m * v - s.values(k) * v).norm(), 1e-8 * std::max(norm, 1.0));
    }
  }
}

TEST(ExactSpectrum, RejectsNonHermitian) {
  const DenseOperator m = sum_to_matrix(PauliSum::from_terms(1, {{"Y0", Complex(0.0, 1.0)}}));
  EXPECT_THROW(exact_spectrum(m), NumericalError);
  EXPECT_THROW(exact_spectrum(DenseOperator::Zero(2, 3)), DimensionError);
}

TEST(Sector, IndicesSelectByParity) {
  const auto idx = sector_indices(4, 1, 1);
  // One even (alpha) and one odd (beta) qubit set.
  EXPECT_EQ(idx, (std::vector<std::size_t>{0b0011, 0b0110, 0b1001, 0b1100}));
  EXPECT_EQ(sector_indices(4, 2, 2), (std::vector<std::size_t>{0b1111}));
}

TEST(Sector, H2GroundLiesInNeutralSinglet) {
  const auto f = parse_fcidump(data_path("h2_sto3g_0.7414.fcidump"));
  const DenseOperator m = sum_to_matrix(jordan_wigner(f));
  const Eigen::VectorXd sec = sector_spectrum(m, 1, 1);
  EXPECT_EQ(sec.size(), 4);
  EXPECT_NEAR(sec(0), exact_spectrum(m).values(0), 1e-10);
}

TEST(OracleMoments, Examples) {
  const DenseOperator zx = sum_to_matrix(PauliSum::from_terms(1, {{"Z0", 1.0}, {"X0", 1.0}}));
  const Statevector zero = prepare_basis_state(BasisState(1, 0));
  const auto m = oracle_moments(zero, zx, 3);
  EXPECT_NEAR(m[0], 1.0, 1e-15);
  EXPECT_NEAR(m[1], 2.0, 1e-15);
  EXPECT_NEAR(m[2], 2.0, 1e-15);
}

TEST(OracleMoments, EigenstateGivesGeometricSequence) {
  std::mt19937_64 rng(11);
  const DenseOperator m = sum_to_matrix(random_sum(rng, 3, 6, true));
  const Spectrum s = exact_spectrum(m, true);
  const Eigen::VectorXcd v = s.vectors.col(3);
  const Statevector state(std::vector<Complex>(v.data(), v.data() + v.size()));
  const auto mom = oracle_moments(state, m, 6);
  for (int k = 1; k <= 6; ++k) {
    const double want = std::pow(s.values(3), k);
    EXPECT_NEAR(mom[k - 1], want, 1e-10 * std::max(1.0, std::abs(want)));
  }
}

TEST(OracleMoments, DimensionMismatch) {
  const DenseOperator m = DenseOperator::Identity(4, 4);
  EXPECT_THROW(oracle_moments(prepare_basis_state(BasisState(1, 0)), m, 2), DimensionError);
}

}  // namespace
}  // namespace qcmx
