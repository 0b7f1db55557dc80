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

#include "qcorr/dynamics.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qcorr/errors.h"
#include "qcorr/measures.h"

namespace qcorr {
namespace {

constexpr double kFreezingTol = 1e-12;

bool interior(double p) { return p > 0.0 && p < 1.0; }

void push_interior(std::vector<double> &out, const std::optional<double> &p) {
  if (p && interior(*p)) out.push_back(*p);
}

// 1 - ratio^(1/power) when the crossing exists inside [0, 1].
std::optional<double> crossing(double ratio, double power) {
  if (!(ratio >= 0.0) || !std::isfinite(ratio)) return std::nullopt;
  const double p = 1.0 - std::pow(ratio, 1.0 / power);
  if (p < 0.0 || p > 1.0) return std::nullopt;
  return p;
}

double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + mid, v.end());
  if (v.size() % 2 == 1) return v[mid];
  const double upper = v[mid];
  return 0.5 * (upper + *std::max_element(v.begin(), v.begin() + mid));
}

}  // namespace

std::string_view to_string(StateLabel label) {
  switch (label) {
    case StateLabel::kType1:
      return "Type1";
    case StateLabel::kType2:
      return "Type2";
    case StateLabel::kFreezingQD:
      return "FreezingQD";
    case StateLabel::kOther:
      return "Other";
  }
  return "?";
}

std::string_view to_string(GqdRegime regime) {
  switch (regime) {
    case GqdRegime::kG1:
      return "g1";
    case GqdRegime::kG2:
      return "g2";
    case GqdRegime::kG3:
      return "g3";
    case GqdRegime::kG4:
      return "g4";
  }
  return "?";
}

StateClass classify(const BellDiagonalParams &params) {
  const OrderedCorrelations o = order_correlations(params);
  const double hi = std::abs(o.c_plus), lo = std::abs(o.c_minus), z = std::abs(o.c3);
  StateClass c;
  c.type1 = hi > z && z > lo;
  c.type2 = lo > z;
  c.freezing_qd = hi >= z && std::abs(o.c_minus + o.c_plus * o.c3) <= kFreezingTol;
  if (c.freezing_qd) {
    c.label = StateLabel::kFreezingQD;
  } else if (c.type1) {
    c.label = StateLabel::kType1;
  } else if (c.type2) {
    c.label = StateLabel::kType2;
  }
  return c;
}

TransitionReport unfiltered_transitions(const BellDiagonalParams &params) {
  params.validate();
  const OrderedCorrelations o = order_correlations(params);
  const double hi = std::abs(o.c_plus), lo = std::abs(o.c_minus), z = std::abs(o.c3);

  TransitionReport r;
  r.state_class = classify(params);
  if (hi > 0.0 && z > 0.0 && hi >= z) r.p_sc = 1.0 - std::sqrt(z / hi);
  if (lo > z && z > 0.0) {
    r.p_sc1 = 1.0 - std::sqrt(z / lo);
    r.p_sc2 = r.p_sc;
  }
  push_interior(r.discord_kinks, r.p_sc);
  if (r.p_sc1) {
    push_interior(r.gqd_kinks, r.p_sc1);
    push_interior(r.gqd_kinks, r.p_sc2);
  } else if (hi > z && z > lo) {
    push_interior(r.gqd_kinks, r.p_sc);
  }
  return r;
}

TransitionReport filtered_transitions(const BellDiagonalParams &params, const FilterSetting &setting) {
  TransitionReport r = unfiltered_transitions(params);
  r.p_sc1.reset();
  r.p_sc2.reset();
  r.gqd_kinks.clear();

  const OrderedCorrelations o = order_correlations(params);
  const double cp2 = o.c_plus * o.c_plus, cm2 = o.c_minus * o.c_minus, c32 = o.c3 * o.c3;
  const double q = setting.q();
  r.q = q;

  QThresholds &t = r.q_thresholds;
  if (cp2 > 0.0) {
    t.q3 = (cp2 - c32) / cp2;
    t.q4 = c32 * (cp2 - cm2) / cp2;
    t.q5 = t.q3;
    t.q2 = std::min(*t.q4, *t.q3);
    if (cm2 < 1.0) t.q1 = std::min((c32 - cm2) / (1.0 - cm2), *t.q3);
  }

  // Crossings a2 = a3 (pk_sc1) and a1 = a3 (pk_sc2).
  const auto first = (1.0 - q) * cm2 > 0.0 ? crossing((c32 - q) / ((1.0 - q) * cm2), 4.0) : std::nullopt;
  const auto second = (1.0 - q) * cp2 > 0.0 ? crossing(c32 / ((1.0 - q) * cp2), 4.0) : std::nullopt;

  const double hi = std::abs(o.c_plus), lo = std::abs(o.c_minus), z = std::abs(o.c3);
  GqdRegime regime = GqdRegime::kG4;
  if (lo > z && t.q4) {
    regime = q <= *t.q4 ? GqdRegime::kG2 : q < *t.q5 ? GqdRegime::kG3 : GqdRegime::kG4;
  } else if (hi > z && t.q1) {
    regime = q <= *t.q1   ? GqdRegime::kG1
             : q <= *t.q2 ? GqdRegime::kG2
             : q < *t.q3  ? GqdRegime::kG3
                          : GqdRegime::kG4;
  }
  r.regime = regime;
  switch (regime) {
    case GqdRegime::kG1:
    case GqdRegime::kG3:
      r.pk_sc = second;
      push_interior(r.gqd_kinks, r.pk_sc);
      break;
    case GqdRegime::kG2:
      r.pk_sc1 = first;
      r.pk_sc2 = second;
      push_interior(r.gqd_kinks, r.pk_sc1);
      push_interior(r.gqd_kinks, r.pk_sc2);
      break;
    case GqdRegime::kG4:
      break;
  }
  std::sort(r.gqd_kinks.begin(), r.gqd_kinks.end());
  return r;
}

double gqd_from_regime(const TransitionReport &report, const BellDiagonalParams &initial, const FilterSetting &setting,
                       double p) {
  if (!report.regime) throw ValidationError("gqd_from_regime needs a filtered transition report");
  const BellDiagonalParams now = evolve_params(ChannelKind::kPhaseFlip, p, initial);
  const OrderedCorrelations o = order_correlations(now);
  const double q = setting.q();
  const double a1 = (1.0 - q) * o.c_plus * o.c_plus;
  const double a2 = (1.0 - q) * o.c_minus * o.c_minus + q;
  const double a3 = o.c3 * o.c3;
  const double frozen = 0.5 * std::abs(o.c3);
  const double decaying = 0.5 * std::sqrt(a1);
  const double interpolating = 0.5 * gqd_interpolating_branch(q, a1, a2, a3);

  switch (*report.regime) {
    case GqdRegime::kG1:
      return report.pk_sc && p <= *report.pk_sc ? frozen : decaying;
    case GqdRegime::kG2:
      if (report.pk_sc1 && p <= *report.pk_sc1) return interpolating;
      if (report.pk_sc2 && p <= *report.pk_sc2) return frozen;
      return decaying;
    case GqdRegime::kG3:
      return report.pk_sc && p <= *report.pk_sc ? interpolating : decaying;
    case GqdRegime::kG4:
      return decaying;
  }
  return decaying;
}

BellDiagonalParams to_phase_flip_frame(ChannelKind kind, const BellDiagonalParams &params) {
  switch (kind) {
    case ChannelKind::kPhaseFlip:
      return params;
    case ChannelKind::kBitFlip:
      return {params.c3, params.c2, params.c1};
    case ChannelKind::kBitPhaseFlip:
      return {params.c1, params.c3, params.c2};
  }
  return params;
}

Mat4 phase_flip_frame_rotation(ChannelKind kind) {
  if (kind == ChannelKind::kPhaseFlip) return Mat4::identity();
  // (σ_axis + Z)/sqrt(2) swaps σ_axis with Z and flips the remaining Pauli.
  const int axis = kind == ChannelKind::kBitFlip ? 1 : 2;
  const Mat2 u = (pauli(axis) + pauli(3)) * (1.0 / std::sqrt(2.0));
  return kron(u, u);
}

void SweepSeries::add(std::string name, std::vector<double> values) {
  if (values.size() != grid.size()) throw std::invalid_argument("series length must match the grid");
  names_.push_back(std::move(name));
  columns_.push_back(std::move(values));
}

bool SweepSeries::has(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

const std::vector<double> &SweepSeries::at(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("no series named '" + std::string(name) + "'");
  return columns_[static_cast<size_t>(it - names_.begin())];
}

SweepSeries sweep(const BellDiagonalParams &initial, ChannelKind kind, const std::optional<FilterSetting> &filter,
                  int grid_size) {
  if (grid_size < 2) throw ValidationError("sweep needs grid_size >= 2");
  initial.validate();
  const BellDiagonalParams frame = to_phase_flip_frame(kind, initial);
  const int axis = invariant_axis(kind);
  const size_t n = static_cast<size_t>(grid_size);

  SweepSeries s;
  s.grid.resize(n);
  std::vector<double> mi(n), cc(n), qd(n), dg(n), mik, cck, qdk, dgk;
  if (filter) {
    mik.resize(n);
    cck.resize(n);
    qdk.resize(n);
    dgk.resize(n);
  }
  double deviation = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(n - 1);
    s.grid[i] = p;
    const BellDiagonalParams pf = evolve_params(ChannelKind::kPhaseFlip, p, frame);
    const DiscordBreakdown d = discord_bd(pf);
    mi[i] = d.mutual_information;
    cc[i] = d.classical_correlation;
    qd[i] = d.discord;
    dg[i] = one_norm_gqd_bd(pf).value;

    const BellDiagonalParams direct = evolve_params(kind, p, initial);
    const DiscordBreakdown dd = discord_bd(direct);
    deviation = std::max({deviation, std::abs(dd.discord - qd[i]), std::abs(one_norm_gqd_bd(direct).value - dg[i])});

    if (filter) {
      const DiscordBreakdown dk = discord_filtered(*filter, pf);
      mik[i] = dk.mutual_information;
      cck[i] = dk.classical_correlation;
      qdk[i] = dk.discord;
      dgk[i] = one_norm_gqd_filtered(*filter, order_correlations(pf)).value;
      const TwoQubitState filtered = apply_filter(*filter, bell_diagonal_to_matrix(direct), axis);
      deviation = std::max(deviation, std::abs(mutual_information(filtered) - mik[i]));
    }
  }
  s.add(std::string(kSeriesI), std::move(mi));
  s.add(std::string(kSeriesC), std::move(cc));
  s.add(std::string(kSeriesQ), std::move(qd));
  s.add(std::string(kSeriesDG), std::move(dg));
  if (filter) {
    s.add(std::string(kSeriesIk), std::move(mik));
    s.add(std::string(kSeriesCk), std::move(cck));
    s.add(std::string(kSeriesQk), std::move(qdk));
    s.add(std::string(kSeriesDGk), std::move(dgk));
  }
  s.cross_check_deviation = deviation;
  return s;
}

EventReport detect_events(std::span<const double> grid, std::span<const double> values,
                          const DetectorOptions &options) {
  const size_t n = values.size();
  if (grid.size() != n) throw ValidationError("grid and values differ in length");
  if (n < 51) {
    std::ostringstream os;
    os << "event detection needs at least 51 samples, got " << n;
    throw ValidationError(os.str());
  }
  for (size_t i = 1; i < n; ++i)
    if (!(grid[i] > grid[i - 1])) throw ValidationError("grid must be strictly increasing");

  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));

  EventReport report;
  const double flat = options.flat_tol * scale;
  bool nonincreasing = true, nondecreasing = true;
  const double mono_tol = 1e-12 * scale;
  size_t run_start = 0, run_len = 0;
  auto close_run = [&](size_t end) {
    if (run_len >= static_cast<size_t>(std::max(1, options.min_plateau_steps))) {
      double sum = 0.0;
      for (size_t j = run_start; j <= end; ++j) sum += values[j];
      report.plateaus.push_back({grid[run_start], grid[end], sum / static_cast<double>(end - run_start + 1)});
    }
    run_len = 0;
  };
  for (size_t i = 0; i + 1 < n; ++i) {
    const double step = values[i + 1] - values[i];
    if (step > mono_tol) nonincreasing = false;
    if (step < -mono_tol) nondecreasing = false;
    if (std::abs(step) < flat || scale == 0.0) {
      if (run_len == 0) run_start = i;
      ++run_len;
    } else if (run_len > 0) {
      close_run(i);
    }
  }
  if (run_len > 0) close_run(n - 1);
  report.monotone = nonincreasing || nondecreasing;

  std::vector<double> curvature(n, 0.0);
  for (size_t i = 1; i + 1 < n; ++i) curvature[i] = std::abs(values[i + 1] - 2.0 * values[i] + values[i - 1]);
  const double global = options.kink_factor * median({curvature.begin() + 1, curvature.end() - 1});
  const double floor = options.noise_floor * scale;
  constexpr size_t kReach = 3;
  for (size_t i = 1; i + 1 < n; ++i) {
    const double c = curvature[i];
    if (c <= floor || c <= global) continue;
    if (i > 1 && curvature[i - 1] > c) continue;
    if (i + 2 < n && curvature[i + 1] >= c) continue;
    double background = 0.0;
    if (i >= kReach + 1) background = std::max(background, curvature[i - kReach]);
    if (i + kReach + 1 < n) background = std::max(background, curvature[i + kReach]);
    if (c <= options.background_factor * background) continue;

    // Intersect the secant lines on either side of the kink.
    double where = grid[i];
    if (i >= 2 && i + 2 < n) {
      const double sl = (values[i - 1] - values[i - 2]) / (grid[i - 1] - grid[i - 2]);
      const double sr = (values[i + 2] - values[i + 1]) / (grid[i + 2] - grid[i + 1]);
      if (sl != sr) {
        const double x = (values[i + 1] - sr * grid[i + 1] - values[i - 1] + sl * grid[i - 1]) / (sl - sr);
        if (x >= grid[i - 1] && x <= grid[i + 1]) where = x;
      }
    }
    report.kinks.push_back(where);
  }
  return report;
}

EventReport detect_events(const SweepSeries &series, std::string_view name, const DetectorOptions &options) {
  return detect_events(series.grid, series.at(name), options);
}

}  // namespace qcorr
