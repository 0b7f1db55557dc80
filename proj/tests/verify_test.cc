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

#include <gtest/gtest.h>

#include <cmath>

namespace qcorr {
namespace {

TEST(RandomParamsTest, AlwaysPhysical) {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 1000; ++i) EXPECT_TRUE(random_physical_params(rng).is_physical());
}

TEST(RandomUnitaryTest, IsUnitary) {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 100; ++i) {
    const Mat2 u = random_unitary(rng);
    EXPECT_LT((u * u.adjoint()).max_abs_diff(Mat2::identity()), 1e-14);
  }
}

TEST(RunVerifyTest, ZeroCountsGiveEmptyPassingReport) {
  const VerifyReport r = run_verify(1, VerifyCounts::uniform(0));
  EXPECT_TRUE(r.suites.empty());
  EXPECT_TRUE(r.passed());
}

TEST(RunVerifyTest, SmallRunsPassAcrossSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const VerifyReport r = run_verify(seed, VerifyCounts::uniform(2));
    EXPECT_EQ(r.suites.size(), 6u);
    EXPECT_TRUE(r.passed()) << r.to_text();
  }
}

TEST(RunVerifyTest, ReportListsEverySuite) {
  VerifyCounts counts = VerifyCounts::uniform(0);
  counts.channel_states = 1;
  counts.symmetry_states = 1;
  const std::string text = run_verify(5, counts).to_text();
  EXPECT_NE(text.find("channel_kraus_vs_flow"), std::string::npos);
  EXPECT_NE(text.find("bf_bpf_symmetry"), std::string::npos);
  EXPECT_NE(text.find("all suites passed"), std::string::npos);
}

}  // namespace
}  // namespace qcorr
