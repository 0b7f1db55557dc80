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

// Brute-force numeric counterparts of the closed forms in measures.h. They
// work on arbitrary two-qubit states and share no code with the closed forms
// beyond the linear-algebra layer.

#ifndef QCORR_ORACLES_H_
#define QCORR_ORACLES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "qcorr/linalg.h"
#include "qcorr/states.h"

namespace qcorr {

struct DiscordOracleOptions {
  int polar_points = 64;     // theta grid over [0, pi], poles included
  int azimuth_points = 128;  // phi grid over [0, 2 pi)
  int refine_starts = 4;     // lowest grid local minima handed to Nelder-Mead
  double diameter_tol = 1e-9;
  int max_restarts = 8;
  int max_evaluations = 4000;  // per Nelder-Mead run
};

struct DiscordOracleResult {
  double discord = 0.0;
  double classical_correlation = 0.0;
  double mutual_information = 0.0;
  /// Bloch angles of the optimal projective measurement on A.
  double polar = 0.0;
  double azimuth = 0.0;
  int evaluations = 0;
};

/// Conditional entropy sum_j p_j S(rho_{B|j}) after measuring A along the
/// Bloch direction (polar, azimuth).
double conditional_entropy(const TwoQubitState &state, double polar, double azimuth);

/// Discord by direct maximization of the classical correlation over rank-1
/// projective measurements on A. Throws ConvergenceError if no refinement
/// run meets the simplex-diameter criterion within max_restarts.
DiscordOracleResult discord_oracle(const TwoQubitState &state, const DiscordOracleOptions &options = {});

struct OneNormOracleOptions {
  int starts = 32;
  std::uint64_t seed = 0x5eed2026;
  double diameter_tol = 1e-9;
  int max_evaluations = 20000;  // per Nelder-Mead run
  /// Fresh-simplex restarts from each converged point, stopped early once a
  /// restart no longer improves the value.
  int polish_rounds = 6;
};

struct OneNormOracleResult {
  /// (1/2) min ||rho - chi||_1 over classical-quantum chi.
  double value = 0.0;
  std::vector<double> argmin;
  std::uint64_t seed = 0;
  int evaluations = 0;
};

inline constexpr int kClassicalQuantumParams = 9;

/// Classical-quantum state p|n+><n+|⊗rho(r1) + (1-p)|n-><n-|⊗rho(r2) from
/// (polar, azimuth, w, r1[3], r2[3]) with p = sin^2(w) and Bloch vectors
/// radially clamped to the unit ball.
Mat4 classical_quantum_state(std::span<const double> params);

/// One-norm geometric discord by multi-start simplex search over the
/// 9-parameter classical-quantum family. Restart seeds derive from
/// options.seed, so results are reproducible.
OneNormOracleResult one_norm_oracle(const TwoQubitState &state, const OneNormOracleOptions &options = {});

}  // namespace qcorr

#endif  // QCORR_ORACLES_H_
