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

#include "qcorr/scenario.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "qcorr/measures.h"

namespace qcorr {
namespace {

using nlohmann::json;

std::string line_column(std::string_view text, size_t byte) {
  size_t line = 1, column = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return fmt::format("{}:{}", line, column);
}

double number_at(const json &obj, const char *key, const std::string &path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ScenarioError(fmt::format("scenario: missing key '{}{}'", path, key));
  if (!it->is_number()) throw ScenarioError(fmt::format("scenario: key '{}{}' must be a number", path, key));
  return it->get<double>();
}

void reject_unknown(const json &obj, std::initializer_list<std::string_view> allowed, const std::string &path) {
  for (const auto &[key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ScenarioError(fmt::format("scenario: unknown key '{}{}'", path, key));
  }
}

Measure parse_measure(const std::string &text) {
  std::string s = text;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::toupper(c); });
  if (s == "QD") return Measure::kQD;
  if (s == "GQD1" || s == "1-GQD") return Measure::kGQD1;
  throw ScenarioError("scenario: unknown measure '" + text + "' (expected QD or GQD1)");
}

std::string fmt_opt(const std::optional<double> &v) { return v ? fmt::format("{:.6f}", *v) : "none"; }

std::string fmt_list(const std::vector<double> &v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) out += fmt::format("{}{:.6f}", i ? ", " : "", v[i]);
  return out + "]";
}

// Detected kinks vs analytic ones for one series.
void describe_series(std::string &out, const SweepSeries &series, std::string_view name,
                     const std::vector<double> &analytic) {
  const EventReport ev = detect_events(series, name);
  out += fmt::format("  {}: kinks {} monotone={}", name, fmt_list(ev.kinks), ev.monotone ? "true" : "false");
  out += " plateaus [";
  for (size_t i = 0; i < ev.plateaus.size(); ++i) {
    const auto &pl = ev.plateaus[i];
    out += fmt::format("{}{:.4f}..{:.4f} @ {:.9f}", i ? ", " : "", pl.p_start, pl.p_end, pl.level);
  }
  out += "]\n";
  for (double a : analytic) {
    if (ev.kinks.empty()) {
      out += fmt::format("    analytic {:.6f}: not detected\n", a);
      continue;
    }
    const double nearest = *std::min_element(ev.kinks.begin(), ev.kinks.end(),
                                             [&](double x, double y) { return std::abs(x - a) < std::abs(y - a); });
    out += fmt::format("    analytic {:.6f}: detected {:.6f} (delta {:+.2e})\n", a, nearest, nearest - a);
  }
}

}  // namespace

std::string_view to_string(Measure m) { return m == Measure::kQD ? "QD" : "GQD1"; }

std::optional<FilterSetting> Scenario::filter() const {
  if (!filter_k) return std::nullopt;
  return FilterSetting::from_k(*filter_k);
}

void Scenario::validate() const {
  state.validate();
  if (grid < 2) throw ValidationError(fmt::format("grid must be >= 2, got {}", grid));
  if (filter_k) FilterSetting::from_k(*filter_k);
  if (measures.empty()) throw ValidationError("at least one measure is required");
}

Scenario parse_scenario(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error &e) {
    const size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw ScenarioError(fmt::format("scenario:{}: parse error: {}", line_column(json_text, byte), e.what()));
  }
  if (!doc.is_object()) throw ScenarioError("scenario: top level must be an object");
  reject_unknown(doc, {"state", "channel", "filter", "grid", "measures", "seed"}, "");

  Scenario s;
  const auto state = doc.find("state");
  if (state == doc.end() || !state->is_object()) throw ScenarioError("scenario: missing object 'state'");
  reject_unknown(*state, {"c1", "c2", "c3"}, "state.");
  s.state = {number_at(*state, "c1", "state."), number_at(*state, "c2", "state."), number_at(*state, "c3", "state.")};

  if (const auto it = doc.find("channel"); it != doc.end()) {
    if (!it->is_string()) throw ScenarioError("scenario: key 'channel' must be a string");
    try {
      s.channel = parse_channel_kind(it->get<std::string>());
    } catch (const ValidationError &e) {
      throw ScenarioError(std::string("scenario: ") + e.what());
    }
  }
  if (const auto it = doc.find("filter"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) throw ScenarioError("scenario: key 'filter' must be an object");
    reject_unknown(*it, {"k", "q"}, "filter.");
    const bool has_k = it->contains("k"), has_q = it->contains("q");
    if (has_k == has_q) throw ScenarioError("scenario: 'filter' needs exactly one of 'k' or 'q'");
    s.filter_k = has_k ? number_at(*it, "k", "filter.") : FilterSetting::from_q(number_at(*it, "q", "filter.")).k();
  }
  if (const auto it = doc.find("grid"); it != doc.end()) {
    if (!it->is_number_integer()) throw ScenarioError("scenario: key 'grid' must be an integer");
    s.grid = it->get<int>();
  }
  if (const auto it = doc.find("measures"); it != doc.end()) {
    if (!it->is_array()) throw ScenarioError("scenario: key 'measures' must be an array");
    s.measures.clear();
    for (const auto &m : *it) {
      if (!m.is_string()) throw ScenarioError("scenario: 'measures' entries must be strings");
      const Measure parsed = parse_measure(m.get<std::string>());
      if (std::find(s.measures.begin(), s.measures.end(), parsed) == s.measures.end()) s.measures.push_back(parsed);
    }
  }
  if (const auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_unsigned()) throw ScenarioError("scenario: key 'seed' must be a non-negative integer");
    s.seed = it->get<std::uint64_t>();
  }
  return s;
}

Scenario load_scenario(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("scenario: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

TransitionReport scenario_transitions(const Scenario &scenario) {
  const BellDiagonalParams frame = to_phase_flip_frame(scenario.channel, scenario.state);
  if (const auto f = scenario.filter()) return filtered_transitions(frame, *f);
  return unfiltered_transitions(frame);
}

std::string format_transitions(const TransitionReport &r) {
  const StateClass &c = r.state_class;
  std::string out = fmt::format("class: {} (type1={} type2={} freezing_qd={})\n", to_string(c.label),
                                c.type1 ? "yes" : "no", c.type2 ? "yes" : "no", c.freezing_qd ? "yes" : "no");
  out += fmt::format("p_sc = {}\n", fmt_opt(r.p_sc));
  if (!r.regime) {
    out += fmt::format("p_sc1 = {}, p_sc2 = {}\n", fmt_opt(r.p_sc1), fmt_opt(r.p_sc2));
  } else {
    const QThresholds &t = r.q_thresholds;
    out += fmt::format("q = {:.6f}; thresholds q1 = {}, q2 = {}, q3 = {}, q4 = {}, q5 = {}\n", *r.q, fmt_opt(t.q1),
                       fmt_opt(t.q2), fmt_opt(t.q3), fmt_opt(t.q4), fmt_opt(t.q5));
    out += fmt::format("regime {}", to_string(*r.regime));
    if (r.gqd_kinks.empty()) {
      out += ", no transitions\n";
    } else {
      if (r.pk_sc) out += fmt::format(", pk_sc = {:.6f}", *r.pk_sc);
      if (r.pk_sc1) out += fmt::format(", pk_sc1 = {:.6f}", *r.pk_sc1);
      if (r.pk_sc2) out += fmt::format(", pk_sc2 = {:.6f}", *r.pk_sc2);
      out += "\n";
    }
  }
  out += fmt::format("discord kinks {}\n", fmt_list(r.discord_kinks));
  out += fmt::format("one-norm kinks {}\n", fmt_list(r.gqd_kinks));
  return out;
}

SweepOutput run_sweep(const Scenario &scenario) {
  scenario.validate();
  const auto filter = scenario.filter();
  SweepOutput out;
  out.series = sweep(scenario.state, scenario.channel, filter, scenario.grid);
  out.transitions = scenario_transitions(scenario);
  const TransitionReport plain = unfiltered_transitions(to_phase_flip_frame(scenario.channel, scenario.state));

  std::vector<std::string_view> columns;
  const bool qd = std::find(scenario.measures.begin(), scenario.measures.end(), Measure::kQD) != scenario.measures.end();
  const bool gqd =
      std::find(scenario.measures.begin(), scenario.measures.end(), Measure::kGQD1) != scenario.measures.end();
  if (qd) columns.push_back(kSeriesQ);
  if (gqd) columns.push_back(kSeriesDG);
  if (filter && qd) columns.push_back(kSeriesQk);
  if (filter && gqd) columns.push_back(kSeriesDGk);

  std::string csv = "p";
  for (auto c : columns) csv += fmt::format(",{}", c);
  csv += "\n";
  for (size_t i = 0; i < out.series.grid.size(); ++i) {
    csv += fmt::format("{:.17g}", out.series.grid[i]);
    for (auto c : columns) csv += fmt::format(",{:.17g}", out.series.at(c)[i]);
    csv += "\n";
  }
  out.csv = std::move(csv);

  std::string rep = fmt::format("state (c1, c2, c3) = ({}, {}, {}), channel {}", scenario.state.c1, scenario.state.c2,
                                scenario.state.c3, to_string(scenario.channel));
  if (filter) rep += fmt::format(", filter k = {} (q = {:.6f})", filter->k(), filter->q());
  rep += fmt::format(", grid {}, seed {}\n", scenario.grid, scenario.seed);
  rep += "analytic transitions:\n" + format_transitions(out.transitions);
  if (scenario.grid < 51) {
    rep += "detected events: skipped (grid < 51)\n";
  } else {
    rep += "detected events:\n";
    for (auto c : columns) {
      const bool discord = c == kSeriesQ || c == kSeriesQk;
      const bool filtered = c == kSeriesQk || c == kSeriesDGk;
      const TransitionReport &ref = filtered ? out.transitions : plain;
      describe_series(rep, out.series, c, discord ? ref.discord_kinks : ref.gqd_kinks);
    }
  }
  rep += fmt::format("direct-evaluation cross-check: max deviation {:.3e}\n", out.series.cross_check_deviation);
  out.report = std::move(rep);
  return out;
}

std::string run_measure(const Scenario &scenario, double p) {
  scenario.validate();
  const BellDiagonalParams now = evolve_params(scenario.channel, p, scenario.state);
  const BellDiagonalParams frame = evolve_params(ChannelKind::kPhaseFlip, p, to_phase_flip_frame(scenario.channel, scenario.state));
  const DiscordBreakdown d = discord_bd(now);
  const OneNormResult g = one_norm_gqd_bd(now);
  std::string out = fmt::format("p = {:.17g}\nc(p) = ({:.17g}, {:.17g}, {:.17g})\n", p, now.c1, now.c2, now.c3);
  out += fmt::format("I = {:.17g}\nC = {:.17g}\nQ = {:.17g}\ntheta = {:.17g}\n", d.mutual_information,
                     d.classical_correlation, d.discord, d.theta);
  out += fmt::format("D_G = {:.17g} (branch {})\n", g.value, to_string(g.branch));
  if (const auto f = scenario.filter()) {
    const DiscordBreakdown dk = discord_filtered(*f, frame);
    const OneNormResult gk = one_norm_gqd_filtered(*f, order_correlations(frame));
    out += fmt::format("k = {:.17g}, q = {:.17g}\n", f->k(), f->q());
    out += fmt::format("I_k = {:.17g}\nC_k = {:.17g}\nQ_k = {:.17g}\n", dk.mutual_information, dk.classical_correlation,
                       dk.discord);
    out += fmt::format("D_G_k = {:.17g} (branch {})\n", gk.value, to_string(gk.branch));
  }
  return out;
}

}  // namespace qcorr
