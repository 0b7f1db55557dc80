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


// Command-line front end: qcorr {sweep,transitions,measure,verify}.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qcorr/errors.h"
#include "qcorr/scenario.h"
#include "qcorr/verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

struct CommonFlags {
  std::string config;
  std::string out;
  std::optional<int> grid;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App *cmd, CommonFlags &flags, bool needs_config) {
  auto *config = cmd->add_option("--config", flags.config, "Scenario file (JSON)");
  if (needs_config) config->required()->check(CLI::ExistingFile);
  cmd->add_option("--out", flags.out, "Write output here instead of standard output");
  cmd->add_option("--grid", flags.grid, "Override the number of grid points");
  cmd->add_option("--seed", flags.seed, "Override the random seed");
}

qcorr::Scenario load(const CommonFlags &flags) {
  qcorr::Scenario s = qcorr::load_scenario(flags.config);
  if (flags.grid) s.grid = *flags.grid;
  if (flags.seed) s.seed = *flags.seed;
  s.validate();
  return s;
}

void emit(const CommonFlags &flags, const std::string &text) {
  if (flags.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(flags.out, std::ios::binary);
  if (!file) throw qcorr::ValidationError("cannot open output file: " + flags.out);
  file << text;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Two-qubit correlation dynamics under flip channels and local filtering"};
  app.require_subcommand(1);

  CommonFlags sweep_flags, transitions_flags, measure_flags, verify_flags;
  double p = 0.0;
  std::optional<int> count;

  auto *sweep = app.add_subcommand("sweep", "Sweep p over [0, 1]; CSV out, report on stderr");
  add_common(sweep, sweep_flags, true);
  auto *transitions = app.add_subcommand("transitions", "Analytic transition report");
  add_common(transitions, transitions_flags, true);
  auto *measure = app.add_subcommand("measure", "Evaluate every measure at a single p");
  add_common(measure, measure_flags, true);
  measure->add_option("--p", p, "Channel strength")->required()->check(CLI::Range(0.0, 1.0));
  auto *verify = app.add_subcommand("verify", "Run the oracle cross-check suites");
  add_common(verify, verify_flags, false);
  verify->add_option("--count", count, "Cases per suite (default: built-in counts)")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*sweep) {
      const qcorr::SweepOutput result = qcorr::run_sweep(load(sweep_flags));
      emit(sweep_flags, result.csv);
      std::cerr << result.report;
    } else if (*transitions) {
      emit(transitions_flags, qcorr::format_transitions(qcorr::scenario_transitions(load(transitions_flags))));
    } else if (*measure) {
      emit(measure_flags, qcorr::run_measure(load(measure_flags), p));
    } else if (*verify) {
      std::uint64_t seed = verify_flags.seed.value_or(2026);
      if (!verify_flags.config.empty() && !verify_flags.seed) seed = load(verify_flags).seed;
      const qcorr::VerifyCounts counts = count ? qcorr::VerifyCounts::uniform(*count) : qcorr::VerifyCounts{};
      const qcorr::VerifyReport report = qcorr::run_verify(seed, counts);
      emit(verify_flags, report.to_text());
      return report.passed() ? kExitOk : kExitVerification;
    }
  } catch (const qcorr::ConvergenceError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
