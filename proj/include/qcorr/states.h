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

#ifndef QCORR_STATES_H_
#define QCORR_STATES_H_

#include <array>

#include "qcorr/linalg.h"

namespace qcorr {

/// Bell-diagonal state rho = (I⊗I + sum_i c_i σ_i⊗σ_i) / 4.
struct BellDiagonalParams {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  /// Bell-basis weights in the order (λ1, λ2, λ3, λ4) with
  /// λ1,3 = (1 ± c1 ∓ c2 + c3)/4 and λ2,4 = (1 ± c1 ± c2 − c3)/4.
  std::array<double, 4> lambdas() const;

  bool is_physical(double tol = 1e-12) const;

  /// Throws ValidationError naming the first negative λ if unphysical.
  void validate() const;

  double operator[](int i) const { return i == 0 ? c1 : i == 1 ? c2 : c3; }
};

/// c1(p), c2(p) relabelled so that |c_plus| >= |c_minus|. Ties keep c1 as c_plus.
struct OrderedCorrelations {
  double c_plus = 0.0;
  double c_minus = 0.0;
  double c3 = 0.0;
};

OrderedCorrelations order_correlations(const BellDiagonalParams &params);

/// A validated two-qubit density matrix: Hermitian, unit trace, PSD.
class TwoQubitState {
 public:
  /// Throws ValidationError if any invariant fails.
  explicit TwoQubitState(const Mat4 &matrix);

  const Mat4 &matrix() const { return matrix_; }

  static constexpr double kTraceTol = 1e-12;

 private:
  Mat4 matrix_;
};

TwoQubitState bell_diagonal_to_matrix(const BellDiagonalParams &params);

/// Inverse of bell_diagonal_to_matrix via c_i = Tr[rho σ_i⊗σ_i]. Throws
/// StructureError when any other Pauli correlator exceeds 1e-10.
BellDiagonalParams matrix_to_bell_diagonal(const TwoQubitState &state);

/// Tr[rho σ_i⊗σ_j], indices as in pauli().
double pauli_correlator(const Mat4 &rho, int i, int j);

/// U rho U^dagger, e.g. for local unitaries U = U_A ⊗ U_B.
TwoQubitState conjugate(const Mat4 &unitary, const TwoQubitState &state);

}  // namespace qcorr

#endif  // QCORR_STATES_H_
