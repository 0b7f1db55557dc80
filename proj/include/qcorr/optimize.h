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

#ifndef QCORR_OPTIMIZE_H_
#define QCORR_OPTIMIZE_H_

#include <functional>
#include <span>
#include <vector>

namespace qcorr {

using Objective = std::function<double(std::span<const double>)>;

struct NelderMeadOptions {
  /// Edge length of the initial axis-aligned simplex.
  double initial_step = 0.1;
  /// Converged once every vertex lies within this distance of the best one.
  double diameter_tol = 1e-9;
  int max_evaluations = 20000;
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  int evaluations = 0;
  bool converged = false;
};

/// Downhill simplex with the standard reflection/expansion/contraction/shrink
/// coefficients (1, 2, 1/2, 1/2).
NelderMeadResult nelder_mead(const Objective &f, std::vector<double> x0, const NelderMeadOptions &options = {});

}  // namespace qcorr

#endif  // QCORR_OPTIMIZE_H_
