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

#include <algorithm>
#include <cmath>
#include <limits>

namespace qcorr {
namespace {

constexpr double kBoundaryTol = 1e-10;

// sum_{i=1,2} (1 + (-1)^i x)/2 log2((1 + (-1)^i x)/2), i.e. -H((1+x)/2).
double signed_pair_term(double x) { return -binary_entropy(0.5 * (1.0 + x)); }

}  // namespace

std::string_view to_string(GqdBranch branch) {
  switch (branch) {
    case GqdBranch::kCPlus:
      return "c_plus";
    case GqdBranch::kCMinus:
      return "c_minus";
    case GqdBranch::kC3:
      return "c3";
    case GqdBranch::kF:
      return "f";
  }
  return "?";
}

double mutual_information(const TwoQubitState &state) {
  const Mat4 &rho = state.matrix();
  return von_neumann_entropy(trace_out(rho, Subsystem::kB)) +
         von_neumann_entropy(trace_out(rho, Subsystem::kA)) - von_neumann_entropy(rho);
}

double classical_correlation_bd(const BellDiagonalParams &params) {
  const double theta = std::max({std::abs(params.c1), std::abs(params.c2), std::abs(params.c3)});
  return 1.0 + signed_pair_term(theta);
}

DiscordBreakdown discord_bd(const BellDiagonalParams &params) {
  params.validate();
  DiscordBreakdown d;
  d.theta = std::max({std::abs(params.c1), std::abs(params.c2), std::abs(params.c3)});
  d.mutual_information = 2.0 - shannon_entropy(params.lambdas());
  d.classical_correlation = 1.0 + signed_pair_term(d.theta);
  d.discord = d.mutual_information - d.classical_correlation;
  return d;
}

DiscordBreakdown discord_filtered(const FilterSetting &setting, const BellDiagonalParams &params) {
  params.validate();
  const double k = setting.k();
  const FilteredStateTerms t = filtered_terms(setting, order_correlations(params));
  const double s_a = binary_entropy(k);
  const double s_b = binary_entropy(0.5 * (1.0 + (1.0 - 2.0 * k) * params.c3));

  DiscordBreakdown d;
  d.theta = std::max({std::abs(params.c1), std::abs(params.c2), std::abs(params.c3)});
  d.mutual_information = s_a + s_b - shannon_entropy(t.lambdas);
  d.classical_correlation = s_b + signed_pair_term(t.beta);
  d.discord = d.mutual_information - d.classical_correlation;
  return d;
}

OneNormResult one_norm_gqd_bd(const BellDiagonalParams &params) {
  const OrderedCorrelations o = order_correlations(params);
  const double hi = std::abs(o.c_plus), lo = std::abs(o.c_minus), z = std::abs(o.c3);
  if (z >= lo && z <= hi) return {0.5 * z, GqdBranch::kC3};
  if (z < lo) return {0.5 * lo, GqdBranch::kCMinus};
  return {0.5 * hi, GqdBranch::kCPlus};
}

double one_norm_gqd_x_formula(double q, double a1, double a2, double a3) {
  const double big = std::max(a3, a2);
  const double small = std::min(a3, a1);
  const double den = big - small + a1 - (a2 - q);
  if (den == 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double num = a1 * big - (a2 - q) * small;
  return 0.5 * std::sqrt(std::max(0.0, num / den));
}

double gqd_interpolating_branch(double q, double a1, double a2, double a3) {
  const double den = a1 - a3 + q;
  if (den <= 0.0) return std::sqrt(a3);  // a1 = a3, q = 0 limit
  return std::sqrt(std::max(0.0, (a1 * a2 - (a2 - q) * a3) / den));
}

OneNormResult one_norm_gqd_filtered(const FilterSetting &setting, const OrderedCorrelations &ordered) {
  const double q = setting.q();
  const double a1 = (1.0 - q) * ordered.c_plus * ordered.c_plus;
  const double a2 = (1.0 - q) * ordered.c_minus * ordered.c_minus + q;
  const double a3 = ordered.c3 * ordered.c3;

  OneNormResult r;
  double branch_value;
  if (a1 < a3) {
    r.branch = GqdBranch::kCPlus;
    branch_value = 0.5 * std::sqrt(a1);
  } else if (a2 > a3) {
    r.branch = q == 0.0 ? GqdBranch::kCMinus : GqdBranch::kF;
    branch_value = 0.5 * gqd_interpolating_branch(q, a1, a2, a3);
  } else {
    r.branch = GqdBranch::kC3;
    branch_value = 0.5 * std::sqrt(a3);
  }

  const double big = std::max(a3, a2);
  const double small = std::min(a3, a1);
  const double den = big - small + a1 - (a2 - q);
  const bool near_boundary = std::abs(a1 - a3) <= kBoundaryTol || std::abs(a2 - a3) <= kBoundaryTol ||
                             std::abs(den) <= kBoundaryTol;
  r.value = near_boundary ? branch_value : one_norm_gqd_x_formula(q, a1, a2, a3);
  return r;
}

}  // namespace qcorr
