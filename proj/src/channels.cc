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

#include "qcorr/channels.h"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string>

#include "qcorr/errors.h"

namespace qcorr {
namespace {

void require_unit_interval(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream os;
    os << "noise strength p = " << p << " outside [0, 1]";
    throw RangeError(os.str());
  }
}

int flip_pauli(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kPhaseFlip:
      return 3;
    case ChannelKind::kBitFlip:
      return 1;
    case ChannelKind::kBitPhaseFlip:
      return 2;
  }
  return 3;
}

}  // namespace

std::string_view to_string(ChannelKind kind) {
  switch (kind) {
    case ChannelKind::kPhaseFlip:
      return "PF";
    case ChannelKind::kBitFlip:
      return "BF";
    case ChannelKind::kBitPhaseFlip:
      return "BPF";
  }
  return "?";
}

ChannelKind parse_channel_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  std::erase_if(s, [](char c) { return c == '_' || c == '-' || c == ' '; });
  if (s == "PF" || s == "PHASEFLIP") return ChannelKind::kPhaseFlip;
  if (s == "BF" || s == "BITFLIP") return ChannelKind::kBitFlip;
  if (s == "BPF" || s == "BITPHASEFLIP") return ChannelKind::kBitPhaseFlip;
  throw ValidationError("unknown channel '" + std::string(text) + "' (expected PF, BF or BPF)");
}

int invariant_axis(ChannelKind kind) { return flip_pauli(kind) - 1; }

KrausChannel::KrausChannel(ChannelKind kind, double p) : kind_(kind), p_(p) {
  require_unit_interval(p);
  operators_.push_back(Mat2::identity() * std::sqrt(1.0 - 0.5 * p));
  operators_.push_back(pauli(flip_pauli(kind)) * std::sqrt(0.5 * p));
}

double KrausChannel::completeness_error() const {
  Mat2 sum;
  for (const auto &e : operators_) sum += e.adjoint() * e;
  return sum.max_abs_diff(Mat2::identity());
}

TwoQubitState apply_two_sided(const KrausChannel &channel, const TwoQubitState &state) {
  Mat4 out;
  for (const auto &ei : channel.operators()) {
    for (const auto &ej : channel.operators()) {
      const Mat4 k = kron(ei, ej);
      out += k * state.matrix() * k.adjoint();
    }
  }
  return TwoQubitState(out);
}

BellDiagonalParams evolve_params(ChannelKind kind, double p, const BellDiagonalParams &params) {
  require_unit_interval(p);
  const double decay = (1.0 - p) * (1.0 - p);
  BellDiagonalParams out = params;
  switch (kind) {
    case ChannelKind::kPhaseFlip:
      out.c1 *= decay;
      out.c2 *= decay;
      break;
    case ChannelKind::kBitFlip:
      out.c2 *= decay;
      out.c3 *= decay;
      break;
    case ChannelKind::kBitPhaseFlip:
      out.c1 *= decay;
      out.c3 *= decay;
      break;
  }
  return out;
}

}  // namespace qcorr
