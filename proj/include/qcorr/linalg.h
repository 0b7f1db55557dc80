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

// Dense complex linear algebra for one and two qubits. Matrices are fixed-size
// value types; nothing here allocates.

#ifndef QCORR_LINALG_H_
#define QCORR_LINALG_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>

namespace qcorr {

using Complex = std::complex<double>;

/// Tolerance used for Hermiticity checks throughout the library.
inline constexpr double kHermitianTol = 1e-12;
/// Eigenvalues down to -kPsdTol are accepted as numerical noise and clamped.
inline constexpr double kPsdTol = 1e-10;

template <int N>
class ComplexMatrix {
 public:
  static constexpr int kDim = N;

  constexpr ComplexMatrix() : data_{} {}

  static ComplexMatrix identity() {
    ComplexMatrix m;
    for (int i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::array<double, N> &d) {
    ComplexMatrix m;
    for (int i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  Complex &operator()(int r, int c) { return data_[r * N + c]; }
  const Complex &operator()(int r, int c) const { return data_[r * N + c]; }

  ComplexMatrix adjoint() const {
    ComplexMatrix out;
    for (int r = 0; r < N; ++r)
      for (int c = 0; c < N; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (int i = 0; i < N; ++i) t += (*this)(i, i);
    return t;
  }

  /// Largest elementwise modulus of (*this - other).
  double max_abs_diff(const ComplexMatrix &other) const {
    double m = 0.0;
    for (int i = 0; i < N * N; ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
    return m;
  }

  bool is_hermitian(double tol = kHermitianTol) const {
    return max_abs_diff(adjoint()) <= tol;
  }

  ComplexMatrix &operator+=(const ComplexMatrix &o) {
    for (int i = 0; i < N * N; ++i) data_[i] += o.data_[i];
    return *this;
  }
  ComplexMatrix &operator-=(const ComplexMatrix &o) {
    for (int i = 0; i < N * N; ++i) data_[i] -= o.data_[i];
    return *this;
  }
  ComplexMatrix &operator*=(Complex s) {
    for (auto &x : data_) x *= s;
    return *this;
  }
  ComplexMatrix &operator/=(Complex s) {
    for (auto &x : data_) x /= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator/(ComplexMatrix a, Complex s) { return a /= s; }

  friend ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out;
    for (int r = 0; r < N; ++r)
      for (int k = 0; k < N; ++k) {
        const Complex ark = a(r, k);
        if (ark == 0.0) continue;
        for (int c = 0; c < N; ++c) out(r, c) += ark * b(k, c);
      }
    return out;
  }

 private:
  std::array<Complex, N * N> data_;
};

using Mat2 = ComplexMatrix<2>;
using Mat4 = ComplexMatrix<4>;

/// Eigenvalues sorted descending; eigenvector i is column i of `vectors`.
template <int N>
struct SpectralDecomp {
  std::array<double, N> values{};
  ComplexMatrix<N> vectors;

  ComplexMatrix<N> reconstruct() const {
    return vectors * ComplexMatrix<N>::diagonal(values) * vectors.adjoint();
  }
};

/// Pauli matrix by index: 0 = I, 1 = X, 2 = Y, 3 = Z.
Mat2 pauli(int index);

template <int N, int M>
ComplexMatrix<N * M> kron(const ComplexMatrix<N> &a, const ComplexMatrix<M> &b) {
  ComplexMatrix<N * M> out;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < M; ++k)
        for (int l = 0; l < M; ++l) out(i * M + k, j * M + l) = a(i, j) * b(k, l);
  return out;
}

enum class Subsystem { kA, kB };

/// Linear partial trace over `traced`; no validation, works on any 4x4
/// operator (unnormalized conditional states, differences, ...).
Mat2 trace_out(const Mat4 &m, Subsystem traced);

/// Reduced density matrix after tracing out `traced`. Requires a Hermitian,
/// unit-trace input.
Mat2 partial_trace(const Mat4 &rho, Subsystem traced);

/// Hermitian eigendecomposition. 2x2 inputs and 4x4 inputs with X sparsity
/// (nonzeros only on the diagonal and anti-diagonal) use closed-form 2x2
/// blocks; general 4x4 inputs use cyclic complex Jacobi rotations.
template <int N>
SpectralDecomp<N> eig_hermitian(const ComplexMatrix<N> &m);

/// Eigenvalues only; same solver path as eig_hermitian.
template <int N>
std::array<double, N> eigenvalues_hermitian(const ComplexMatrix<N> &m);

/// -sum x log2 x over a probability vector. Entries >= -kPsdTol are clamped
/// to zero, anything more negative is rejected.
double shannon_entropy(std::span<const double> probabilities);

/// H(x) = -x log2 x - (1-x) log2(1-x), with 0 log 0 = 0.
double binary_entropy(double x);

/// Von Neumann entropy in bits. Requires unit trace and PSD within kPsdTol.
template <int N>
double von_neumann_entropy(const ComplexMatrix<N> &rho);

/// Sum of absolute eigenvalues of a Hermitian matrix.
template <int N>
double trace_norm(const ComplexMatrix<N> &m);

}  // namespace qcorr

#endif  // QCORR_LINALG_H_
