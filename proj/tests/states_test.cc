// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qcorr/states.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qcorr/errors.h"
#include "qcorr/verify.h"

namespace qcorr {
namespace {

TEST(BellDiagonalTest, LambdasMatchMatrixSpectrum) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const BellDiagonalParams c = random_physical_params(rng);
    auto expected = c.lambdas();
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const auto got = eigenvalues_hermitian(bell_diagonal_to_matrix(c).matrix());
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(got[i], expected[i], 1e-14);
  }
}

TEST(BellDiagonalTest, LambdaOrdering) {
  const auto l = BellDiagonalParams{0.9, -0.36, 0.4}.lambdas();
  EXPECT_NEAR(l[0], (1 + 0.9 + 0.36 + 0.4) / 4, 1e-15);
  EXPECT_NEAR(l[1], (1 + 0.9 - 0.36 - 0.4) / 4, 1e-15);
  EXPECT_NEAR(l[2], (1 - 0.9 - 0.36 + 0.4) / 4, 1e-15);
  EXPECT_NEAR(l[3], (1 - 0.9 + 0.36 - 0.4) / 4, 1e-15);
}

TEST(BellDiagonalTest, SingletIsPure) {
  const TwoQubitState rho = bell_diagonal_to_matrix({-1, -1, -1});
  EXPECT_NEAR(((rho.matrix() * rho.matrix()).trace()).real(), 1.0, 1e-15);
  EXPECT_NEAR(rho.matrix()(1, 2).real(), -0.5, 1e-15);
}

TEST(BellDiagonalTest, RoundTrip) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const BellDiagonalParams c = random_physical_params(rng);
    const BellDiagonalParams back = matrix_to_bell_diagonal(bell_diagonal_to_matrix(c));
    EXPECT_NEAR(back.c1, c.c1, 1e-15);
    EXPECT_NEAR(back.c2, c.c2, 1e-15);
    EXPECT_NEAR(back.c3, c.c3, 1e-15);
  }
}

TEST(BellDiagonalTest, UnphysicalParamsNameTheNegativeWeight) {
  try {
    BellDiagonalParams{1, 1, 1}.validate();
    FAIL() << "expected ValidationError";
  } catch (const ValidationError &e) {
    EXPECT_NE(std::string(e.what()).find("lambda"), std::string::npos) << e.what();
  }
  EXPECT_THROW(bell_diagonal_to_matrix({0.9, 0.9, 0.9}), ValidationError);
  EXPECT_NO_THROW(bell_diagonal_to_matrix({1, -1, 1}));
}

TEST(BellDiagonalTest, NonBellDiagonalInputListsOffendingCorrelators) {
  const Mat4 rho = (kron(Mat2::identity(), Mat2::identity()) + kron(pauli(1), pauli(3))) / 4.0;
  try {
    matrix_to_bell_diagonal(TwoQubitState(rho));
    FAIL() << "expected StructureError";
  } catch (const StructureError &e) {
    ASSERT_EQ(e.offending().size(), 1u);
    EXPECT_EQ(e.offending()[0].substr(0, 3), "XZ=");
  }
}

TEST(OrderCorrelationsTest, LargerMagnitudeFirstAndTiesKeepC1) {
  const auto a = order_correlations({0.3, -0.8, 0.1});
  EXPECT_DOUBLE_EQ(a.c_plus, -0.8);
  EXPECT_DOUBLE_EQ(a.c_minus, 0.3);
  EXPECT_DOUBLE_EQ(a.c3, 0.1);
  const auto b = order_correlations({0.5, -0.5, 0.0});
  EXPECT_DOUBLE_EQ(b.c_plus, 0.5);
}

TEST(TwoQubitStateTest, Validation) {
  EXPECT_THROW(TwoQubitState(Mat4::identity()), ValidationError);
  Mat4 negative = Mat4::diagonal({0.6, 0.6, -0.1, -0.1});
  EXPECT_THROW(TwoQubitState{negative}, ValidationError);
  Mat4 nonhermitian = Mat4::identity() / 4.0;
  nonhermitian(0, 3) = Complex(0.0, 0.1);
  EXPECT_THROW(TwoQubitState{nonhermitian}, ValidationError);
}

TEST(PauliCorrelatorTest, LocalUnitaryRotatesCorrelators) {
  // Hadamard on both qubits swaps the XX and ZZ correlators.
  Mat2 h = (pauli(1) + pauli(3)) / std::sqrt(2.0);
  const TwoQubitState rho = bell_diagonal_to_matrix({0.7, -0.2, 0.1});
  const TwoQubitState rotated = conjugate(kron(h, h), rho);
  EXPECT_NEAR(pauli_correlator(rotated.matrix(), 1, 1), 0.1, 1e-15);
  EXPECT_NEAR(pauli_correlator(rotated.matrix(), 3, 3), 0.7, 1e-15);
  EXPECT_NEAR(pauli_correlator(rotated.matrix(), 2, 2), -0.2, 1e-15);
}

}  // namespace
}  // namespace qcorr
