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


#include "qcorr/linalg.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qcorr/errors.h"

namespace qcorr {
namespace {

Mat4 random_hermitian(std::mt19937_64 &rng, double scale = 1.0) {
  std::normal_distribution<double> g;
  Mat4 m;
  for (int i = 0; i < 4; ++i) {
    m(i, i) = scale * g(rng);
    for (int j = i + 1; j < 4; ++j) {
      m(i, j) = scale * Complex(g(rng), g(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

// Random density matrix A A^dagger / Tr.
Mat4 random_density(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  Mat4 a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = Complex(g(rng), g(rng));
  Mat4 rho = a * a.adjoint();
  return rho / rho.trace();
}

TEST(PauliTest, AlgebraRelations) {
  const Complex i(0.0, 1.0);
  EXPECT_LT((pauli(1) * pauli(2)).max_abs_diff(i * pauli(3)), 1e-15);
  EXPECT_LT((pauli(2) * pauli(3)).max_abs_diff(i * pauli(1)), 1e-15);
  for (int k = 1; k <= 3; ++k) {
    EXPECT_LT((pauli(k) * pauli(k)).max_abs_diff(Mat2::identity()), 1e-15);
    EXPECT_NEAR(std::abs(pauli(k).trace()), 0.0, 1e-15);
  }
}

TEST(KronTest, MixedProductProperty) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  auto random2 = [&] {
    Mat2 m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) m(r, c) = Complex(g(rng), g(rng));
    return m;
  };
  const Mat2 a = random2(), b = random2(), c = random2(), d = random2();
  EXPECT_LT((kron(a, b) * kron(c, d)).max_abs_diff(kron<2, 2>(a * c, b * d)), 1e-12);
}

TEST(KronTest, IndexConventionPutsFirstFactorOnHighBit) {
  Mat2 z = pauli(3);
  const Mat4 zi = kron(z, Mat2::identity());
  EXPECT_DOUBLE_EQ(zi(1, 1).real(), 1.0);
  EXPECT_DOUBLE_EQ(zi(2, 2).real(), -1.0);
}

TEST(PartialTraceTest, ProductStateFactors) {
  Mat2 a;
  a(0, 0) = 0.7;
  a(1, 1) = 0.3;
  a(0, 1) = Complex(0.1, 0.2);
  a(1, 0) = Complex(0.1, -0.2);
  Mat2 b;
  b(0, 0) = 0.4;
  b(1, 1) = 0.6;
  b(0, 1) = Complex(-0.2, 0.05);
  b(1, 0) = Complex(-0.2, -0.05);
  const Mat4 rho = kron(a, b);
  EXPECT_LT(partial_trace(rho, Subsystem::kB).max_abs_diff(a), 1e-15);
  EXPECT_LT(partial_trace(rho, Subsystem::kA).max_abs_diff(b), 1e-15);
}

TEST(PartialTraceTest, RejectsNonUnitTrace) {
  EXPECT_THROW(partial_trace(Mat4::identity(), Subsystem::kA), ValidationError);
}

TEST(PartialTraceTest, RejectsNonHermitian) {
  Mat4 m = Mat4::identity() / 4.0;
  m(0, 1) = 0.1;
  EXPECT_THROW(partial_trace(m, Subsystem::kB), ValidationError);
}

TEST(EigTest, TwoByTwoReconstructs) {
  Mat2 m;
  m(0, 0) = 0.3;
  m(1, 1) = -1.2;
  m(0, 1) = Complex(0.5, -0.25);
  m(1, 0) = std::conj(m(0, 1));
  const auto d = eig_hermitian(m);
  EXPECT_GE(d.values[0], d.values[1]);
  EXPECT_LT(d.reconstruct().max_abs_diff(m), 1e-14);
  // Trace and determinant.
  EXPECT_NEAR(d.values[0] + d.values[1], -0.9, 1e-15);
  EXPECT_NEAR(d.values[0] * d.values[1], (0.3 * -1.2) - std::norm(m(0, 1)), 1e-14);
}

TEST(EigTest, GeneralFourByFourReconstructsAndIsUnitary) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Mat4 m = random_hermitian(rng);
    const auto d = eig_hermitian(m);
    EXPECT_LT(d.reconstruct().max_abs_diff(m), 1e-12);
    EXPECT_LT((d.vectors.adjoint() * d.vectors).max_abs_diff(Mat4::identity()), 1e-12);
    for (int i = 0; i + 1 < 4; ++i) EXPECT_GE(d.values[i], d.values[i + 1]);
    // Power sums against traces of matrix powers.
    double s1 = 0.0, s2 = 0.0;
    for (double v : d.values) {
      s1 += v;
      s2 += v * v;
    }
    EXPECT_NEAR(s1, m.trace().real(), 1e-12);
    EXPECT_NEAR(s2, (m * m).trace().real(), 1e-11);
  }
}

TEST(EigTest, XSparseBlockPathMatchesJacobi) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Mat4 m = random_hermitian(rng);
    m(0, 1) = m(1, 0) = m(0, 2) = m(2, 0) = m(1, 3) = m(3, 1) = m(2, 3) = m(3, 2) = 0.0;
    const auto block = eig_hermitian(m);
    EXPECT_LT(block.reconstruct().max_abs_diff(m), 1e-13);
    // Break the sparsity by a tiny amount to force the Jacobi path.
    Mat4 perturbed = m;
    perturbed(0, 1) = 1e-300;
    perturbed(1, 0) = 1e-300;
    const auto jacobi = eig_hermitian(perturbed);
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(block.values[i], jacobi.values[i], 1e-12);
  }
}

TEST(EigTest, DegenerateSpectrum) {
  const Mat4 m = Mat4::identity() * 0.25;
  const auto d = eig_hermitian(m);
  for (double v : d.values) EXPECT_DOUBLE_EQ(v, 0.25);
}

TEST(EntropyTest, KnownValues) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_DOUBLE_EQ(binary_entropy(0.0), 0.0);
  EXPECT_DOUBLE_EQ(binary_entropy(1.0), 0.0);
  const double probs[] = {0.25, 0.25, 0.25, 0.25};
  EXPECT_NEAR(shannon_entropy(probs), 2.0, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(Mat4::identity() / 4.0), 2.0, 1e-14);
}

TEST(EntropyTest, ClampsRoundoffButRejectsNegativeProbabilities) {
  const double noisy[] = {1.0, -1e-13};
  EXPECT_NEAR(shannon_entropy(noisy), 0.0, 1e-15);
  const double bad[] = {1.1, -0.1};
  EXPECT_THROW(shannon_entropy(bad), ValidationError);
}

TEST(EntropyTest, PureStatesHaveZeroEntropyAndSubsystemBound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat4 rho = random_density(rng);
    const double s = von_neumann_entropy(rho);
    EXPECT_GE(s, -1e-12);
    EXPECT_LE(s, 2.0 + 1e-12);
    // Araki-Lieb: |S(A) - S(B)| <= S(AB).
    const double sa = von_neumann_entropy(partial_trace(rho, Subsystem::kB));
    const double sb = von_neumann_entropy(partial_trace(rho, Subsystem::kA));
    EXPECT_LE(std::abs(sa - sb), s + 1e-10);
    EXPECT_LE(s, sa + sb + 1e-10);
  }
}

TEST(TraceNormTest, SumOfAbsoluteEigenvalues) {
  Mat4 m = Mat4::diagonal({0.5, -0.25, 0.0, -1.0});
  EXPECT_NEAR(trace_norm(m), 1.75, 1e-15);
  std::mt19937_64 rng(9);
  const Mat4 a = random_density(rng), b = random_density(rng);
  // Distance between density matrices lies in [0, 2].
  const double d = trace_norm<4>(a - b);
  EXPECT_GE(d, 0.0);
  EXPECT_LE(d, 2.0 + 1e-12);
  EXPECT_NEAR(trace_norm<4>(a), 1.0, 1e-12);
}

}  // namespace
}  // namespace qcorr
