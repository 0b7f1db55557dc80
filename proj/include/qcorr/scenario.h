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

// Scenario files and the sweep/transitions/measure front ends behind the
// command-line tool.
//
// A scenario is a JSON object:
//
//   {
//     "state":    {"c1": 0.9, "c2": -0.36, "c3": 0.4},
//     "channel":  "PF",                 // PF | BF | BPF
//     "filter":   {"k": 0.2},           // or {"q": 0.36}; omit for none
//     "grid":     1001,
//     "measures": ["QD", "GQD1"],
//     "seed":     2026
//   }
//
// Only "state" is required.

#ifndef QCORR_SCENARIO_H_
#define QCORR_SCENARIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcorr/channels.h"
#include "qcorr/dynamics.h"
#include "qcorr/errors.h"
#include "qcorr/filtering.h"
#include "qcorr/states.h"

namespace qcorr {

enum class Measure { kQD, kGQD1 };

std::string_view to_string(Measure m);

/// Raised for malformed scenario text. `what()` carries "line:column" when
/// the failure has a position.
class ScenarioError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

struct Scenario {
  BellDiagonalParams state;
  ChannelKind channel = ChannelKind::kPhaseFlip;
  std::optional<double> filter_k;
  int grid = 1001;
  std::vector<Measure> measures = {Measure::kQD, Measure::kGQD1};
  std::uint64_t seed = 2026;

  std::optional<FilterSetting> filter() const;
  /// Throws ValidationError / RangeError on unphysical state, grid < 2 or a
  /// filter strength outside (0, 1).
  void validate() const;
};

Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::string &path);

/// Analytic transitions in the phase-flip frame of the scenario's channel.
TransitionReport scenario_transitions(const Scenario &scenario);

struct SweepOutput {
  SweepSeries series;
  TransitionReport transitions;
  std::string csv;
  std::string report;
};

/// CSV columns: p, then Q / D_G for the requested measures, then Q_k / D_G_k
/// when a filter is set. Numbers carry 17 significant digits.
SweepOutput run_sweep(const Scenario &scenario);

std::string format_transitions(const TransitionReport &report);

/// Single-point evaluation at noise strength p (closed forms).
std::string run_measure(const Scenario &scenario, double p);

}  // namespace qcorr

#endif  // QCORR_SCENARIO_H_
