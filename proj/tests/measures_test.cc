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


#include "qcorr/measures.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qcorr/channels.h"
#include "qcorr/filtering.h"
#include "qcorr/oracles.h"
#include "qcorr/verify.h"

namespace qcorr {
namespace {

BellDiagonalParams pf(double p, const BellDiagonalParams &c) { return evolve_params(ChannelKind::kPhaseFlip, p, c); }

TEST(DiscordBdTest, TrivialStates) {
  EXPECT_NEAR(discord_bd({0, 0, 0}).discord, 0.0, 1e-15);
  const DiscordBreakdown bell = discord_bd({1, -1, 1});
  EXPECT_NEAR(bell.mutual_information, 2.0, 1e-14);
  EXPECT_NEAR(bell.classical_correlation, 1.0, 1e-14);
  EXPECT_NEAR(bell.discord, 1.0, 1e-14);
}

TEST(DiscordBdTest, MutualInformationMatchesMatrixRoute) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const BellDiagonalParams c = random_physical_params(rng);
    EXPECT_NEAR(discord_bd(c).mutual_information, mutual_information(bell_diagonal_to_matrix(c)), 1e-12);
  }
}

TEST(DiscordBdTest, FrozenPlateauOfFreezingState) {
  const BellDiagonalParams c{0.9, -0.36, 0.4};
  const double frozen = discord_bd(c).discord;
  EXPECT_NEAR(frozen, 0.118709, 1e-6);
  for (double p = 0.0; p <= 1.0 / 3.0; p += 0.01) EXPECT_NEAR(discord_bd(pf(p, c)).discord, frozen, 1e-12) << p;
  // Plateau value from the measurement oracle.
  EXPECT_NEAR(discord_oracle(bell_diagonal_to_matrix(pf(0.2, c))).discord, frozen, 1e-7);
  double previous = discord_bd(pf(0.34, c)).discord;
  for (double p = 0.35; p < 1.0; p += 0.01) {
    const double q = discord_bd(pf(p, c)).discord;
    EXPECT_LT(q, previous) << p;
    previous = q;
  }
}

TEST(DiscordBdTest, AgreesWithOracle) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const BellDiagonalParams c = random_physical_params(rng);
    EXPECT_NEAR(discord_oracle(bell_diagonal_to_matrix(c)).discord, discord_bd(c).discord, 1e-7);
  }
}

TEST(DiscordFilteredTest, HalfFilterIsIdentity) {
  std::mt19937_64 rng(43);
  const FilterSetting half = FilterSetting::from_k(0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const BellDiagonalParams c = random_physical_params(rng);
    const DiscordBreakdown a = discord_filtered(half, c), b = discord_bd(c);
    EXPECT_NEAR(a.discord, b.discord, 1e-9);
    EXPECT_NEAR(a.mutual_information, b.mutual_information, 1e-9);
  }
}

TEST(DiscordFilteredTest, MatchesMatrixRouteAndOracle) {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> uk(0.02, 0.98);
  for (int trial = 0; trial < 10; ++trial) {
    const BellDiagonalParams c = random_physical_params(rng);
    const FilterSetting f = FilterSetting::from_k(uk(rng));
    const TwoQubitState rho = apply_filter(f, bell_diagonal_to_matrix(c));
    const DiscordBreakdown closed = discord_filtered(f, c);
    EXPECT_NEAR(closed.mutual_information, mutual_information(rho), 1e-12);
    const DiscordOracleResult oracle = discord_oracle(rho);
    EXPECT_NEAR(closed.classical_correlation, oracle.classical_correlation, 1e-6);
    EXPECT_NEAR(closed.discord, oracle.discord, 1e-6);
  }
}

TEST(DiscordFilteredTest, FilteringRemovesFreezing) {
  const BellDiagonalParams c{0.9, -0.36, 0.4};
  const FilterSetting f = FilterSetting::from_q(0.36);
  double previous = discord_filtered(f, pf(0.0, c)).discord;
  // The filtered curve starts above the unfiltered plateau (brute-force value
  // 0.170219 at p = 0) and decays through it.
  EXPECT_NEAR(previous, 0.170219, 1e-6);
  for (double p = 0.01; p < 1.0 / 3.0; p += 0.01) {
    const double q = discord_filtered(f, pf(p, c)).discord;
    EXPECT_LT(q, previous) << p;
    previous = q;
  }
}

TEST(OneNormBdTest, IntermediateValue) {
  EXPECT_DOUBLE_EQ(one_norm_gqd_bd({0, 0, 0}).value, 0.0);
  const OneNormResult a = one_norm_gqd_bd({0.8, 0.3, -0.45});
  EXPECT_NEAR(a.value, 0.225, 1e-15);
  EXPECT_EQ(a.branch, GqdBranch::kC3);
  const OneNormResult b = one_norm_gqd_bd({0.8, -0.45, 0.3});
  EXPECT_NEAR(b.value, 0.225, 1e-15);
  EXPECT_EQ(b.branch, GqdBranch::kCMinus);
  EXPECT_NEAR(one_norm_gqd_bd({1, -1, 1}).value, 0.5, 1e-15);
}

TEST(OneNormBdTest, AgreesWithOracle) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 4; ++trial) {
    const BellDiagonalParams c = random_physical_params(rng);
    EXPECT_NEAR(one_norm_oracle(bell_diagonal_to_matrix(c)).value, one_norm_gqd_bd(c).value, 5e-4);
  }
}

TEST(OneNormFilteredTest, ZeroQReducesToBellDiagonal) {
  std::mt19937_64 rng(46);
  const FilterSetting half = FilterSetting::from_k(0.5);
  for (int trial = 0; trial < 100; ++trial) {
    const BellDiagonalParams c = random_physical_params(rng);
    EXPECT_NEAR(one_norm_gqd_filtered(half, order_correlations(c)).value, one_norm_gqd_bd(c).value, 1e-12);
  }
}

TEST(OneNormFilteredTest, TypeOneAfterSuddenChangeFollowsCPlus) {
  const BellDiagonalParams c{0.8, 0.3, -0.45};
  const FilterSetting f = FilterSetting::from_q(0.4);
  for (double p = 0.15; p <= 1.0; p += 0.05) {
    const BellDiagonalParams now = pf(p, c);
    const OneNormResult r = one_norm_gqd_filtered(f, order_correlations(now));
    EXPECT_NEAR(r.value, 0.5 * std::sqrt(0.6) * std::abs(now.c1), 1e-12) << p;
    EXPECT_EQ(r.branch, GqdBranch::kCPlus);
  }
}

TEST(OneNormFilteredTest, StrongFilterOnTypeTwoIsSmooth) {
  const BellDiagonalParams c{0.8, -0.45, 0.3};
  const FilterSetting f = FilterSetting::from_q(0.9);
  for (double p = 0.0; p <= 1.0; p += 0.02) {
    const BellDiagonalParams now = pf(p, c);
    EXPECT_NEAR(one_norm_gqd_filtered(f, order_correlations(now)).value, 0.5 * std::sqrt(0.1) * std::abs(now.c1),
                1e-12)
        << p;
  }
}

TEST(OneNormFilteredTest, RawFormulaMatchesSelectedBranchAwayFromBoundaries) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> uq(0.0, 0.999);
  int compared = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const OrderedCorrelations o = order_correlations(random_physical_params(rng));
    const double q = uq(rng);
    const double a1 = (1 - q) * o.c_plus * o.c_plus, a2 = (1 - q) * o.c_minus * o.c_minus + q, a3 = o.c3 * o.c3;
    if (std::abs(a1 - a3) < 1e-8 || std::abs(a2 - a3) < 1e-8) continue;
    const double raw = one_norm_gqd_x_formula(q, a1, a2, a3);
    if (!std::isfinite(raw)) continue;
    const FilterSetting f = FilterSetting::from_q(q);
    EXPECT_NEAR(raw, one_norm_gqd_filtered(f, o).value, 1e-10);
    ++compared;
  }
  EXPECT_GT(compared, 15000);
}

TEST(OneNormFilteredTest, AgreesWithOracle) {
  const struct {
    BellDiagonalParams c;
    double q, p;
  } cases[] = {
      {{0.8, 0.3, -0.45}, 0.16, 0.17},  // between the double kink
      {{0.8, 0.3, -0.45}, 0.4, 0.05},   // before the single kink
      {{0.8, -0.45, 0.3}, 0.06, 0.374},
      {{0.8, -0.45, 0.3}, 0.9, 0.3},
  };
  for (const auto &tc : cases) {
    const FilterSetting f = FilterSetting::from_q(tc.q);
    const BellDiagonalParams now = pf(tc.p, tc.c);
    const double closed = one_norm_gqd_filtered(f, order_correlations(now)).value;
    const double oracle = one_norm_oracle(apply_filter(f, bell_diagonal_to_matrix(now))).value;
    EXPECT_NEAR(oracle, closed, 5e-4) << tc.q << " " << tc.p;
  }
}

}  // namespace
}  // namespace qcorr
