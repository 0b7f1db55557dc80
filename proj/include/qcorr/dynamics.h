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

// Decay-curve analysis: state classification, analytic sudden-change points
// with and without filtering, uniform p sweeps, and empirical plateau/kink
// detection on sampled curves.
//
// All analytic formulas are written for the phase-flip frame, where c3 is the
// invariant correlator. Bit-flip and bit-phase-flip dynamics map onto it by
// exchanging c3 with c1 or c2 respectively (see to_phase_flip_frame).

#ifndef QCORR_DYNAMICS_H_
#define QCORR_DYNAMICS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/channels.h"
#include "qcorr/filtering.h"
#include "qcorr/states.h"

namespace qcorr {

enum class StateLabel { kType1, kType2, kFreezingQD, kOther };

std::string_view to_string(StateLabel label);

/// `label` is kFreezingQD whenever the discord-freezing condition holds, even
/// if the state is also Type 1; the flags report every class that applies.
struct StateClass {
  StateLabel label = StateLabel::kOther;
  bool type1 = false;        // |c+| > |c3| > |c-|
  bool type2 = false;        // |c-| > |c3|
  bool freezing_qd = false;  // |c+| >= |c3| and c- = -c+ c3 (within 1e-12)
};

StateClass classify(const BellDiagonalParams &params);

/// Which piecewise profile g1..g4 the filtered one-norm discord follows.
enum class GqdRegime { kG1, kG2, kG3, kG4 };

std::string_view to_string(GqdRegime regime);

struct QThresholds {
  std::optional<double> q1, q2, q3, q4, q5;
};

struct TransitionReport {
  StateClass state_class;
  /// Crossing |c+(p)| = |c3|: the discord kink, also the single one-norm kink
  /// of Type 1 states. Unchanged by filtering.
  std::optional<double> p_sc;
  /// Type 2 one-norm kinks |c-(p)| = |c3| and |c+(p)| = |c3|.
  std::optional<double> p_sc1, p_sc2;

  /// Filtered reports only.
  std::optional<double> q;
  std::optional<GqdRegime> regime;
  std::optional<double> pk_sc;           // single kink of g1 / g3
  std::optional<double> pk_sc1, pk_sc2;  // double kink of g2
  QThresholds q_thresholds;

  /// Interior kink positions (0 < p < 1), ascending.
  std::vector<double> discord_kinks;
  std::vector<double> gqd_kinks;
};

TransitionReport unfiltered_transitions(const BellDiagonalParams &params);

/// Uses the fourth-root crossings pk_sc1 = 1 - [(c3^2 - q)/((1-q)c-^2)]^(1/4)
/// and pk_sc2 = 1 - [c3^2/((1-q)c+^2)]^(1/4). Throws RangeError unless
/// 0 <= q < 1.
TransitionReport filtered_transitions(const BellDiagonalParams &params, const FilterSetting &setting);

/// Filtered one-norm discord under phase flip at time p evaluated from the
/// selected g_i profile of `report` (not from the X-state quotient).
double gqd_from_regime(const TransitionReport &report, const BellDiagonalParams &initial, const FilterSetting &setting,
                       double p);

/// Initial correlators relabelled so that the channel's invariant correlator
/// sits in c3.
BellDiagonalParams to_phase_flip_frame(ChannelKind kind, const BellDiagonalParams &params);

/// Local unitary U⊗U that maps a state of the `kind` frame onto the phase-flip
/// frame (identity for PF, Hadamard-like rotations otherwise).
Mat4 phase_flip_frame_rotation(ChannelKind kind);

class SweepSeries {
 public:
  std::vector<double> grid;

  void add(std::string name, std::vector<double> values);
  bool has(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  const std::vector<double> &at(std::string_view name) const;
  const std::vector<std::string> &names() const { return names_; }

  /// Largest deviation seen between the symmetric (phase-flip frame) route
  /// and direct evaluation in the channel's own frame.
  double cross_check_deviation = 0.0;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<double>> columns_;
};

/// Series names.
inline constexpr std::string_view kSeriesI = "I";
inline constexpr std::string_view kSeriesC = "C";
inline constexpr std::string_view kSeriesQ = "Q";
inline constexpr std::string_view kSeriesDG = "D_G";
inline constexpr std::string_view kSeriesIk = "I_k";
inline constexpr std::string_view kSeriesCk = "C_k";
inline constexpr std::string_view kSeriesQk = "Q_k";
inline constexpr std::string_view kSeriesDGk = "D_G_k";

/// Closed-form measures on a uniform grid of grid_size points over [0, 1].
/// With a filter, the filter acts on qubit A along the channel's invariant
/// axis (z for PF, x for BF, y for BPF). Throws ValidationError for
/// grid_size < 2 or unphysical params.
SweepSeries sweep(const BellDiagonalParams &initial, ChannelKind kind, const std::optional<FilterSetting> &filter,
                  int grid_size = 1001);

struct Plateau {
  double p_start = 0.0;
  double p_end = 0.0;
  double level = 0.0;
  double duration() const { return p_end - p_start; }
};

struct EventReport {
  std::vector<Plateau> plateaus;
  std::vector<double> kinks;
  bool monotone = true;
};

struct DetectorOptions {
  /// A step is flat if |v[i+1] - v[i]| < flat_tol * max|v|.
  double flat_tol = 1e-6;
  /// Shortest run of flat steps reported as a plateau.
  int min_plateau_steps = 2;
  /// |second difference| must exceed kink_factor * median |second difference|.
  double kink_factor = 10.0;
  /// ... and background_factor * the larger |second difference| found three
  /// steps away on either side.
  double background_factor = 3.0;
  /// Absolute floor, relative to max|v|, below which second differences are noise.
  double noise_floor = 1e-12;
};

/// Needs at least 51 samples on a strictly increasing grid.
EventReport detect_events(std::span<const double> grid, std::span<const double> values,
                          const DetectorOptions &options = {});
EventReport detect_events(const SweepSeries &series, std::string_view name, const DetectorOptions &options = {});

}  // namespace qcorr

#endif  // QCORR_DYNAMICS_H_
