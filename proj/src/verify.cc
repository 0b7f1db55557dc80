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

#include "qcorr/verify.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcorr/channels.h"
#include "qcorr/dynamics.h"
#include "qcorr/filtering.h"
#include "qcorr/measures.h"
#include "qcorr/oracles.h"

namespace qcorr {
namespace {

struct FilteredCase {
  BellDiagonalParams at_p;
  FilterSetting setting;
};

FilteredCase random_filtered_case(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> k(0.02, 0.98), p(0.0, 1.0);
  const BellDiagonalParams initial = random_physical_params(rng);
  const FilterSetting setting = FilterSetting::from_k(k(rng));
  return {evolve_params(ChannelKind::kPhaseFlip, p(rng), initial), setting};
}

}  // namespace

BellDiagonalParams random_physical_params(std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  while (true) {
    const BellDiagonalParams c{u(rng), u(rng), u(rng)};
    if (c.is_physical(0.0)) return c;
  }
}

Mat2 random_unitary(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  // Unit quaternion -> SU(2).
  double a = g(rng), b = g(rng), c = g(rng), d = g(rng);
  const double n = std::sqrt(a * a + b * b + c * c + d * d);
  a /= n;
  b /= n;
  c /= n;
  d /= n;
  Mat2 u;
  u(0, 0) = Complex(a, b);
  u(0, 1) = Complex(c, d);
  u(1, 0) = Complex(-c, d);
  u(1, 1) = Complex(a, -b);
  return u;
}

bool VerifyReport::passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.passed(); });
}

std::string VerifyReport::to_text() const {
  std::string out = fmt::format("verify seed {}\n", seed);
  for (const auto &s : suites) {
    out += fmt::format("[{}] {:<28} cases {:>5}  max deviation {:.3e}  tolerance {:.1e}\n",
                       s.passed() ? "PASS" : "FAIL", s.name, s.cases, s.max_deviation, s.tolerance);
  }
  out += passed() ? "all suites passed\n" : "verification FAILED\n";
  return out;
}

VerifyReport run_verify(std::uint64_t seed, const VerifyCounts &counts) {
  VerifyReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);

  if (counts.channel_states > 0) {
    SuiteResult s{"channel_kraus_vs_flow", 0, 0.0, 1e-12};
    for (int i = 0; i < counts.channel_states; ++i) {
      const BellDiagonalParams c = random_physical_params(rng);
      const TwoQubitState rho = bell_diagonal_to_matrix(c);
      for (ChannelKind kind : {ChannelKind::kPhaseFlip, ChannelKind::kBitFlip, ChannelKind::kBitPhaseFlip}) {
        for (int j = 0; j <= 20; ++j) {
          const double p = j / 20.0;
          const BellDiagonalParams kraus = matrix_to_bell_diagonal(apply_two_sided(KrausChannel(kind, p), rho));
          const BellDiagonalParams flow = evolve_params(kind, p, c);
          for (int a = 0; a < 3; ++a) s.max_deviation = std::max(s.max_deviation, std::abs(kraus[a] - flow[a]));
          ++s.cases;
        }
      }
    }
    report.suites.push_back(s);
  }

  if (counts.discord_bd > 0) {
    SuiteResult s{"discord_oracle_vs_bell", 0, 0.0, 1e-6};
    for (int i = 0; i < counts.discord_bd; ++i) {
      const BellDiagonalParams c = random_physical_params(rng);
      const double oracle = discord_oracle(bell_diagonal_to_matrix(c)).discord;
      s.max_deviation = std::max(s.max_deviation, std::abs(oracle - discord_bd(c).discord));
      ++s.cases;
    }
    report.suites.push_back(s);
  }

  if (counts.discord_filtered > 0) {
    SuiteResult s{"discord_oracle_vs_filtered", 0, 0.0, 1e-5};
    for (int i = 0; i < counts.discord_filtered; ++i) {
      const FilteredCase fc = random_filtered_case(rng);
      const TwoQubitState rho = apply_filter(fc.setting, bell_diagonal_to_matrix(fc.at_p));
      const double oracle = discord_oracle(rho).discord;
      s.max_deviation = std::max(s.max_deviation, std::abs(oracle - discord_filtered(fc.setting, fc.at_p).discord));
      ++s.cases;
    }
    report.suites.push_back(s);
  }

  OneNormOracleOptions oracle_options;
  oracle_options.seed = seed;
  if (counts.one_norm_bd > 0) {
    SuiteResult s{"one_norm_oracle_vs_bell", 0, 0.0, 5e-4};
    for (int i = 0; i < counts.one_norm_bd; ++i) {
      const BellDiagonalParams c = random_physical_params(rng);
      const double oracle = one_norm_oracle(bell_diagonal_to_matrix(c), oracle_options).value;
      s.max_deviation = std::max(s.max_deviation, std::abs(oracle - one_norm_gqd_bd(c).value));
      ++s.cases;
    }
    report.suites.push_back(s);
  }

  if (counts.one_norm_filtered > 0) {
    SuiteResult s{"one_norm_oracle_vs_filtered", 0, 0.0, 5e-4};
    for (int i = 0; i < counts.one_norm_filtered; ++i) {
      const FilteredCase fc = random_filtered_case(rng);
      const TwoQubitState rho = apply_filter(fc.setting, bell_diagonal_to_matrix(fc.at_p));
      const double oracle = one_norm_oracle(rho, oracle_options).value;
      const double closed = one_norm_gqd_filtered(fc.setting, order_correlations(fc.at_p)).value;
      s.max_deviation = std::max(s.max_deviation, std::abs(oracle - closed));
      ++s.cases;
    }
    report.suites.push_back(s);
  }

  if (counts.symmetry_states > 0) {
    SuiteResult s{"bf_bpf_symmetry", 0, 0.0, 1e-12};
    std::uniform_real_distribution<double> k(0.02, 0.98);
    for (int i = 0; i < counts.symmetry_states; ++i) {
      const BellDiagonalParams c = random_physical_params(rng);
      const FilterSetting f = FilterSetting::from_k(k(rng));
      for (ChannelKind kind : {ChannelKind::kBitFlip, ChannelKind::kBitPhaseFlip}) {
        const SweepSeries direct = sweep(c, kind, f, 101);
        const SweepSeries mapped = sweep(to_phase_flip_frame(kind, c), ChannelKind::kPhaseFlip, f, 101);
        for (const auto &name : direct.names()) {
          const auto &a = direct.at(name);
          const auto &b = mapped.at(name);
          for (size_t j = 0; j < a.size(); ++j) s.max_deviation = std::max(s.max_deviation, std::abs(a[j] - b[j]));
        }
        // Direct matrix route: Kraus evolution in the channel frame, rotated
        // onto the phase-flip frame, must land on the exchanged correlators.
        const Mat4 rot = phase_flip_frame_rotation(kind);
        for (int j = 0; j <= 10; ++j) {
          const double p = j / 10.0;
          const TwoQubitState evolved = apply_two_sided(KrausChannel(kind, p), bell_diagonal_to_matrix(c));
          const BellDiagonalParams got = matrix_to_bell_diagonal(conjugate(rot, evolved));
          const BellDiagonalParams want = evolve_params(ChannelKind::kPhaseFlip, p, to_phase_flip_frame(kind, c));
          for (int a = 0; a < 3; ++a) s.max_deviation = std::max(s.max_deviation, std::abs(got[a] - want[a]));
        }
        s.max_deviation = std::max(s.max_deviation, direct.cross_check_deviation);
        ++s.cases;
      }
    }
    report.suites.push_back(s);
  }
  return report;
}

}  // namespace qcorr
