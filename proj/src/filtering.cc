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

#include "qcorr/filtering.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcorr/errors.h"

namespace qcorr {

FilterSetting FilterSetting::from_k(double k) {
  if (!(k > 0.0 && k < 1.0)) {
    std::ostringstream os;
    os << "filter strength k = " << k << " outside (0, 1)";
    throw RangeError(os.str());
  }
  const double d = 1.0 - 2.0 * k;
  return FilterSetting(k, d * d);
}

FilterSetting FilterSetting::from_q(double q) {
  if (!(q >= 0.0 && q < 1.0)) {
    std::ostringstream os;
    os << "filter parameter q = " << q << " outside [0, 1)";
    throw RangeError(os.str());
  }
  return FilterSetting(0.5 * (1.0 - std::sqrt(q)), q);
}

Mat2 filter_operator(const FilterSetting &setting, int axis) {
  if (axis < 0 || axis > 2) throw RangeError("filter axis must be 0, 1 or 2");
  const Mat2 sigma = pauli(axis + 1);
  const Mat2 plus = (Mat2::identity() + sigma) * 0.5;
  const Mat2 minus = (Mat2::identity() - sigma) * 0.5;
  return plus * std::sqrt(1.0 - setting.k()) + minus * std::sqrt(setting.k());
}

TwoQubitState apply_filter(const FilterSetting &setting, const TwoQubitState &state, int axis) {
  const Mat4 f = kron(filter_operator(setting, axis), Mat2::identity());
  Mat4 out = f * state.matrix() * f.adjoint();
  const double tr = out.trace().real();
  if (!(tr > 1e-15)) throw DegenerateInputError("filter annihilates the state (zero trace)");
  out /= tr;
  out = (out + out.adjoint()) * 0.5;
  return TwoQubitState(out);
}

FilteredStateTerms filtered_terms(const FilterSetting &setting, const OrderedCorrelations &ordered) {
  const double q = setting.q();
  const double cp2 = ordered.c_plus * ordered.c_plus;
  const double cm2 = ordered.c_minus * ordered.c_minus;
  const double c32 = ordered.c3 * ordered.c3;

  FilteredStateTerms t;
  t.theta = std::max(std::abs(ordered.c_plus), std::abs(ordered.c3));
  t.alpha = std::sqrt(q + (1.0 - q) * cp2);
  t.beta = std::sqrt(q * c32 + (1.0 - q) * t.theta * t.theta);
  t.a1 = (1.0 - q) * cp2;
  t.a2 = (1.0 - q) * cm2 + q;
  t.a3 = c32;

  const auto rho = bell_diagonal_to_matrix({ordered.c_plus, ordered.c_minus, ordered.c3});
  t.lambdas = eigenvalues_hermitian(apply_filter(setting, rho).matrix());
  return t;
}

}  // namespace qcorr
