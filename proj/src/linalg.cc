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

#include <numeric>
#include <sstream>

#include "qcorr/errors.h"

namespace qcorr {
namespace {

constexpr int kMaxJacobiSweeps = 64;
constexpr double kJacobiOffTol = 1e-14;
constexpr double kTraceTol = 1e-10;

// One eigenpair of a 2x2 Hermitian block [[a, b], [conj(b), d]].
struct Block2 {
  double hi, lo;
  Complex u0, u1;  // eigenvector of `hi`; the `lo` vector is (-conj(u1), conj(u0)).
};

Block2 solve_block(double a, Complex b, double d) {
  const double mean = 0.5 * (a + d);
  const double half = 0.5 * (a - d);
  const double r = std::hypot(half, std::abs(b));
  Block2 out{mean + r, mean - r, 1.0, 0.0};
  if (std::abs(b) == 0.0) {
    if (a < d) {
      out.u0 = 0.0;
      out.u1 = 1.0;
    }
    return out;
  }
  // Pick the row that keeps the vector away from cancellation.
  if (a >= d) {
    out.u0 = half + r;
    out.u1 = std::conj(b);
  } else {
    out.u0 = b;
    out.u1 = r - half;
  }
  const double n = std::sqrt(std::norm(out.u0) + std::norm(out.u1));
  out.u0 /= n;
  out.u1 /= n;
  return out;
}

template <int N>
void require_hermitian(const ComplexMatrix<N> &m) {
  const double dev = m.max_abs_diff(m.adjoint());
  if (dev > kHermitianTol) {
    std::ostringstream os;
    os << "matrix is not Hermitian (max |M - M^dagger| = " << dev << ")";
    throw ValidationError(os.str());
  }
}

template <int N>
void sort_descending(SpectralDecomp<N> &s) {
  std::array<int, N> idx;
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return s.values[i] > s.values[j]; });
  SpectralDecomp<N> out;
  for (int c = 0; c < N; ++c) {
    out.values[c] = s.values[idx[c]];
    for (int r = 0; r < N; ++r) out.vectors(r, c) = s.vectors(r, idx[c]);
  }
  s = out;
}

SpectralDecomp<2> eig2(const Mat2 &m) {
  const Block2 b = solve_block(m(0, 0).real(), m(0, 1), m(1, 1).real());
  SpectralDecomp<2> s;
  s.values = {b.hi, b.lo};
  s.vectors(0, 0) = b.u0;
  s.vectors(1, 0) = b.u1;
  s.vectors(0, 1) = -std::conj(b.u1);
  s.vectors(1, 1) = std::conj(b.u0);
  return s;
}

bool has_x_sparsity(const Mat4 &m) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c && r + c != 3 && m(r, c) != 0.0) return false;
  return true;
}

SpectralDecomp<4> eig4_x(const Mat4 &m) {
  SpectralDecomp<4> s;
  // Outer block on basis states {0, 3}, inner block on {1, 2}.
  constexpr int kBlocks[2][2] = {{0, 3}, {1, 2}};
  for (int blk = 0; blk < 2; ++blk) {
    const int i = kBlocks[blk][0], j = kBlocks[blk][1];
    const Block2 b = solve_block(m(i, i).real(), m(i, j), m(j, j).real());
    const int c0 = 2 * blk, c1 = 2 * blk + 1;
    s.values[c0] = b.hi;
    s.values[c1] = b.lo;
    s.vectors(i, c0) = b.u0;
    s.vectors(j, c0) = b.u1;
    s.vectors(i, c1) = -std::conj(b.u1);
    s.vectors(j, c1) = std::conj(b.u0);
  }
  sort_descending(s);
  return s;
}

double off_norm(const Mat4 &a) {
  double sum = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

// Cyclic Jacobi for complex Hermitian matrices. Each rotation first applies a
// diagonal phase that makes a(p,q) real and positive, then the real symmetric
// rotation that annihilates it.
SpectralDecomp<4> eig4_jacobi(const Mat4 &m) {
  Mat4 a = m;
  Mat4 v = Mat4::identity();
  double scale = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) scale += std::norm(m(r, c));
  const double tol = kJacobiOffTol * std::max(1.0, std::sqrt(scale));

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps && off_norm(a) >= tol; ++sweep) {
    for (int p = 0; p < 3; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        const double g = std::abs(a(p, q));
        if (g == 0.0) continue;
        const Complex u = a(p, q) / g;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        const Complex ub = std::conj(u);
        // Columns: A <- A U with U(p,p)=c, U(p,q)=s, U(q,p)=-s*ub, U(q,q)=c*ub.
        for (int i = 0; i < 4; ++i) {
          const Complex aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - s * ub * aiq;
          a(i, q) = s * aip + c * ub * aiq;
          const Complex vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - s * ub * viq;
          v(i, q) = s * vip + c * ub * viq;
        }
        // Rows: A <- U^dagger A.
        for (int j = 0; j < 4; ++j) {
          const Complex apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - s * u * aqj;
          a(q, j) = s * apj + c * u * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  if (off_norm(a) >= tol) {
    throw ConvergenceError("Jacobi eigensolver did not converge", off_norm(a));
  }
  SpectralDecomp<4> s;
  for (int i = 0; i < 4; ++i) s.values[i] = a(i, i).real();
  s.vectors = v;
  sort_descending(s);
  return s;
}

}  // namespace

Mat2 pauli(int index) {
  Mat2 m;
  switch (index) {
    case 0:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw RangeError("Pauli index must be in 0..3");
  }
  return m;
}

Mat2 trace_out(const Mat4 &m, Subsystem traced) {
  Mat2 out;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int k = 0; k < 2; ++k)
        out(x, y) += traced == Subsystem::kA ? m(2 * k + x, 2 * k + y) : m(2 * x + k, 2 * y + k);
  return out;
}

Mat2 partial_trace(const Mat4 &rho, Subsystem traced) {
  require_hermitian(rho);
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "partial_trace requires unit trace, got " << tr.real();
    throw ValidationError(os.str());
  }
  return trace_out(rho, traced);
}

template <>
SpectralDecomp<2> eig_hermitian(const Mat2 &m) {
  require_hermitian(m);
  return eig2(m);
}

template <>
SpectralDecomp<4> eig_hermitian(const Mat4 &m) {
  require_hermitian(m);
  return has_x_sparsity(m) ? eig4_x(m) : eig4_jacobi(m);
}

template <int N>
std::array<double, N> eigenvalues_hermitian(const ComplexMatrix<N> &m) {
  return eig_hermitian(m).values;
}

double shannon_entropy(std::span<const double> probabilities) {
  double s = 0.0;
  for (double x : probabilities) {
    if (x < -kPsdTol) {
      std::ostringstream os;
      os << "negative eigenvalue " << x << " below PSD tolerance";
      throw ValidationError(os.str());
    }
    if (x > 0.0) s -= x * std::log2(x);
  }
  return s;
}

double binary_entropy(double x) {
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

template <int N>
double von_neumann_entropy(const ComplexMatrix<N> &rho) {
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "entropy requires unit trace, got " << tr.real();
    throw ValidationError(os.str());
  }
  const auto values = eigenvalues_hermitian(rho);
  return shannon_entropy(values);
}

template <int N>
double trace_norm(const ComplexMatrix<N> &m) {
  double s = 0.0;
  for (double x : eigenvalues_hermitian(m)) s += std::abs(x);
  return s;
}

template std::array<double, 2> eigenvalues_hermitian<2>(const Mat2 &);
template std::array<double, 4> eigenvalues_hermitian<4>(const Mat4 &);
template double von_neumann_entropy(const Mat2 &);
template double von_neumann_entropy(const Mat4 &);
template double trace_norm(const Mat2 &);
template double trace_norm(const Mat4 &);

}  // namespace qcorr
