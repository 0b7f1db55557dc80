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

// Randomized cross-checks of every closed form against its independent route.

#ifndef QCORR_VERIFY_H_
#define QCORR_VERIFY_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qcorr/states.h"

namespace qcorr {

/// Uniform over the physical tetrahedron (rejection sampling on [-1, 1]^3).
BellDiagonalParams random_physical_params(std::mt19937_64 &rng);

/// Haar-random single-qubit unitary.
Mat2 random_unitary(std::mt19937_64 &rng);

struct VerifyCounts {
  int channel_states = 50;  // x 3 channels x 21 values of p
  int discord_bd = 100;
  int discord_filtered = 100;
  int one_norm_bd = 20;
  int one_norm_filtered = 20;
  int symmetry_states = 20;

  static VerifyCounts uniform(int n) { return {n, n, n, n, n, n}; }
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed() const { return max_deviation < tolerance; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;
  bool passed() const;
  std::string to_text() const;
};

/// Suites with a zero count are omitted.
VerifyReport run_verify(std::uint64_t seed, const VerifyCounts &counts = {});

}  // namespace qcorr

#endif  // QCORR_VERIFY_H_
