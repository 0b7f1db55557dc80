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

#include <sstream>
#include <string>
#include <vector>

#include "qcorr/errors.h"

namespace qcorr {
namespace {

constexpr double kStructureTol = 1e-10;
constexpr char kPauliNames[] = "IXYZ";

}  // namespace

std::array<double, 4> BellDiagonalParams::lambdas() const {
  return {
      0.25 * (1.0 + c1 - c2 + c3),
      0.25 * (1.0 + c1 + c2 - c3),
      0.25 * (1.0 - c1 + c2 + c3),
      0.25 * (1.0 - c1 - c2 - c3),
  };
}

bool BellDiagonalParams::is_physical(double tol) const {
  for (double l : lambdas())
    if (l < -tol) return false;
  return true;
}

void BellDiagonalParams::validate() const {
  const auto l = lambdas();
  for (int i = 0; i < 4; ++i) {
    if (l[i] < -1e-12) {
      std::ostringstream os;
      os << "unphysical Bell-diagonal parameters (" << c1 << ", " << c2 << ", " << c3
         << "): lambda_" << (i + 1) << " = " << l[i] << " < 0";
      throw ValidationError(os.str());
    }
  }
}

OrderedCorrelations order_correlations(const BellDiagonalParams &params) {
  if (std::abs(params.c2) > std::abs(params.c1)) return {params.c2, params.c1, params.c3};
  return {params.c1, params.c2, params.c3};
}

TwoQubitState::TwoQubitState(const Mat4 &matrix) : matrix_(matrix) {
  const double herm = matrix.max_abs_diff(matrix.adjoint());
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "state is not Hermitian (deviation " << herm << ")";
    throw ValidationError(os.str());
  }
  const double tr = matrix.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "state trace is " << tr << ", expected 1";
    throw ValidationError(os.str());
  }
  const auto values = eigenvalues_hermitian(matrix);
  if (values[3] < -kPsdTol) {
    std::ostringstream os;
    os << "state is not positive semidefinite (min eigenvalue " << values[3] << ")";
    throw ValidationError(os.str());
  }
}

TwoQubitState bell_diagonal_to_matrix(const BellDiagonalParams &params) {
  params.validate();
  Mat4 m = Mat4::identity();
  for (int i = 1; i <= 3; ++i) m += params[i - 1] * kron(pauli(i), pauli(i));
  return TwoQubitState(m * 0.25);
}

double pauli_correlator(const Mat4 &rho, int i, int j) {
  return (rho * kron(pauli(i), pauli(j))).trace().real();
}

BellDiagonalParams matrix_to_bell_diagonal(const TwoQubitState &state) {
  const Mat4 &rho = state.matrix();
  std::vector<std::string> offending;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i == j) continue;
      const double v = pauli_correlator(rho, i, j);
      if (std::abs(v) > kStructureTol) {
        std::ostringstream os;
        os << kPauliNames[i] << kPauliNames[j] << "=" << v;
        offending.push_back(os.str());
      }
    }
  }
  if (!offending.empty()) {
    std::string msg = "state is not Bell-diagonal; nonzero correlators:";
    for (const auto &s : offending) msg += " " + s;
    throw StructureError(msg, std::move(offending));
  }
  return {pauli_correlator(rho, 1, 1), pauli_correlator(rho, 2, 2), pauli_correlator(rho, 3, 3)};
}

TwoQubitState conjugate(const Mat4 &unitary, const TwoQubitState &state) {
  Mat4 out = unitary * state.matrix() * unitary.adjoint();
  // Restore exact Hermiticity lost to rounding.
  out = (out + out.adjoint()) * 0.5;
  return TwoQubitState(out);
}

}  // namespace qcorr
