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


#include "qcorr/optimize.h"

#include <gtest/gtest.h>

#include <cmath>

namespace qcorr {
namespace {

TEST(NelderMeadTest, Quadratic) {
  const auto f = [](std::span<const double> x) {
    return (x[0] - 1.0) * (x[0] - 1.0) + 3.0 * (x[1] + 2.0) * (x[1] + 2.0) + 0.5;
  };
  const NelderMeadResult r = nelder_mead(f, {0.0, 0.0});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-8);
  EXPECT_NEAR(r.x[1], -2.0, 1e-8);
  EXPECT_NEAR(r.value, 0.5, 1e-15);
}

TEST(NelderMeadTest, Rosenbrock) {
  const auto f = [](std::span<const double> x) {
    return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
  };
  NelderMeadOptions options;
  options.initial_step = 0.5;
  const NelderMeadResult r = nelder_mead(f, {-1.2, 1.0}, options);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-6);
  EXPECT_NEAR(r.x[1], 1.0, 1e-6);
}

TEST(NelderMeadTest, ReportsNonConvergence) {
  NelderMeadOptions options;
  options.max_evaluations = 10;
  const auto f = [](std::span<const double> x) { return std::cos(x[0]) + x[1] * x[1]; };
  const NelderMeadResult r = nelder_mead(f, {0.3, 1.0}, options);
  EXPECT_FALSE(r.converged);
  EXPECT_LE(r.evaluations, 12);
}

}  // namespace
}  // namespace qcorr
