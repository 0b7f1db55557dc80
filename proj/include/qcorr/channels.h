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

// Flip channels acting identically on both qubits. The noise strength p in
// [0, 1] plays the role of time: every channel contracts two of the three
// correlators by (1-p)^2 and leaves the third untouched.

#ifndef QCORR_CHANNELS_H_
#define QCORR_CHANNELS_H_

#include <string_view>
#include <vector>

#include "qcorr/linalg.h"
#include "qcorr/states.h"

namespace qcorr {

enum class ChannelKind { kPhaseFlip, kBitFlip, kBitPhaseFlip };

std::string_view to_string(ChannelKind kind);
/// Accepts "PF"/"BF"/"BPF" (case-insensitive) and the long names.
ChannelKind parse_channel_kind(std::string_view text);

/// Index (0-based) of the correlator a channel leaves invariant: 2 for PF,
/// 0 for BF, 1 for BPF.
int invariant_axis(ChannelKind kind);

class KrausChannel {
 public:
  /// E1 = sqrt(1 - p/2) I, E2 = sqrt(p/2) σ, with σ = Z, X, Y for PF, BF, BPF.
  /// Throws RangeError for p outside [0, 1].
  KrausChannel(ChannelKind kind, double p);

  ChannelKind kind() const { return kind_; }
  double p() const { return p_; }
  const std::vector<Mat2> &operators() const { return operators_; }

  /// Max elementwise deviation of sum_k E_k^dagger E_k from I.
  double completeness_error() const;

 private:
  ChannelKind kind_;
  double p_;
  std::vector<Mat2> operators_;
};

/// sum_{i,j} (E_i⊗E_j) rho (E_i⊗E_j)^dagger.
TwoQubitState apply_two_sided(const KrausChannel &channel, const TwoQubitState &state);

/// Closed-form correlator flow of the channel. Throws RangeError for p
/// outside [0, 1].
BellDiagonalParams evolve_params(ChannelKind kind, double p, const BellDiagonalParams &params);

}  // namespace qcorr

#endif  // QCORR_CHANNELS_H_
