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

// Closed-form quantum discord and one-norm geometric discord for
// Bell-diagonal states and their locally filtered (X-shaped) images. All
// entropies are in bits. Numeric oracles for the same quantities live in
// oracles.h.

#ifndef QCORR_MEASURES_H_
#define QCORR_MEASURES_H_

#include <string_view>

#include "qcorr/filtering.h"
#include "qcorr/states.h"

namespace qcorr {

struct DiscordBreakdown {
  double mutual_information = 0.0;
  double classical_correlation = 0.0;
  double discord = 0.0;
  /// max(|c1|, |c2|, |c3|) of the state the breakdown was computed for.
  double theta = 0.0;
};

/// Which correlator sets the one-norm geometric discord. For filtered states
/// kCPlus means sqrt(1-q)|c_plus|/2 and kF the interpolating f(k, p) branch.
enum class GqdBranch { kCPlus, kCMinus, kC3, kF };

std::string_view to_string(GqdBranch branch);

struct OneNormResult {
  double value = 0.0;
  GqdBranch branch = GqdBranch::kC3;
};

/// S(rho_A) + S(rho_B) - S(rho).
double mutual_information(const TwoQubitState &state);

/// 1 - H((1 + theta)/2) with theta the largest correlator magnitude.
double classical_correlation_bd(const BellDiagonalParams &params);

DiscordBreakdown discord_bd(const BellDiagonalParams &params);

/// Discord of the normalized filtered state. Mutual information uses the
/// numerically diagonalized filtered spectrum; the classical part uses
/// beta = sqrt(q c3^2 + (1-q) theta^2).
DiscordBreakdown discord_filtered(const FilterSetting &setting, const BellDiagonalParams &params);

/// Half the intermediate value of {|c1|, |c2|, |c3|}.
OneNormResult one_norm_gqd_bd(const BellDiagonalParams &params);

/// X-state formula in terms of a1 = (1-q)c_plus^2, a2 = (1-q)c_minus^2 + q,
/// a3 = c3^2. Within 1e-10 of a branch boundary the active branch is
/// evaluated in place of the raw quotient.
OneNormResult one_norm_gqd_filtered(const FilterSetting &setting, const OrderedCorrelations &ordered);

/// The raw quotient formula (factor 1/2 included), no boundary handling. NaN
/// if the denominator vanishes.
double one_norm_gqd_x_formula(double q, double a1, double a2, double a3);

/// f(k, p) = sqrt((a1 a2 - (a2 - q) a3) / (a1 - a3 + q)).
double gqd_interpolating_branch(double q, double a1, double a2, double a3);

}  // namespace qcorr

#endif  // QCORR_MEASURES_H_
