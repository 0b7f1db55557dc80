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

// Single-sided local filter F = sqrt(1-k)|0><0| + sqrt(k)|1><1| on qubit A.
// The filtered state is always renormalized: (F⊗I) rho (F⊗I) has trace 1/2
// for Bell-diagonal inputs, and every correlation measure here is defined on
// the normalized state.

#ifndef QCORR_FILTERING_H_
#define QCORR_FILTERING_H_

#include <array>

#include "qcorr/linalg.h"
#include "qcorr/states.h"

namespace qcorr {

class FilterSetting {
 public:
  /// Throws RangeError unless 0 < k < 1.
  static FilterSetting from_k(double k);
  /// Picks the k <= 1/2 root of q = (1-2k)^2. Throws RangeError unless 0 <= q < 1.
  static FilterSetting from_q(double q);

  double k() const { return k_; }
  /// q = (1 - 2k)^2; q = 0 is the identity filter.
  double q() const { return q_; }

 private:
  FilterSetting(double k, double q) : k_(k), q_(q) {}
  double k_;
  double q_;
};

/// Quantities the closed-form measures need for the filtered state.
struct FilteredStateTerms {
  double alpha = 0.0;  // sqrt(q + (1-q) c_plus^2)
  double beta = 0.0;   // sqrt(q c3^2 + (1-q) theta^2)
  double theta = 0.0;  // max(|c_plus|, |c3|)
  double a1 = 0.0;     // (1-q) c_plus^2
  double a2 = 0.0;     // (1-q) c_minus^2 + q
  double a3 = 0.0;     // c3^2
  std::array<double, 4> lambdas{};  // spectrum of the normalized filtered state, descending
};

/// Filter operator along Bloch axis `axis` (0 = x, 1 = y, 2 = z):
/// sqrt(1-k) P+ + sqrt(k) P-, with P± the projectors onto the ±1 eigenstates
/// of that Pauli. axis = 2 is the standard computational-basis filter.
Mat2 filter_operator(const FilterSetting &setting, int axis = 2);

/// (F⊗I) rho (F⊗I) / Tr[...]. Throws DegenerateInputError if the
/// unnormalized trace vanishes.
TwoQubitState apply_filter(const FilterSetting &setting, const TwoQubitState &state, int axis = 2);

FilteredStateTerms filtered_terms(const FilterSetting &setting, const OrderedCorrelations &ordered);

}  // namespace qcorr

#endif  // QCORR_FILTERING_H_
