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


// Python bindings for the qcorr library.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "qcorr/channels.h"
#include "qcorr/dynamics.h"
#include "qcorr/errors.h"
#include "qcorr/filtering.h"
#include "qcorr/measures.h"
#include "qcorr/oracles.h"
#include "qcorr/scenario.h"
#include "qcorr/states.h"
#include "qcorr/verify.h"

namespace py = pybind11;

namespace {

py::array_t<qcorr::Complex> to_numpy(const qcorr::Mat4 &m) {
  py::array_t<qcorr::Complex> out({4, 4});
  auto view = out.mutable_unchecked<2>();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) view(i, j) = m(i, j);
  return out;
}

qcorr::TwoQubitState from_numpy(const py::array_t<qcorr::Complex, py::array::c_style | py::array::forcecast> &a) {
  if (a.ndim() != 2 || a.shape(0) != 4 || a.shape(1) != 4) throw qcorr::ValidationError("expected a 4x4 matrix");
  auto view = a.unchecked<2>();
  qcorr::Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = view(i, j);
  return qcorr::TwoQubitState(m);
}

qcorr::BellDiagonalParams params(double c1, double c2, double c3) {
  qcorr::BellDiagonalParams c{c1, c2, c3};
  c.validate();
  return c;
}

std::optional<qcorr::FilterSetting> filter_from(std::optional<double> k) {
  if (!k) return std::nullopt;
  return qcorr::FilterSetting::from_k(*k);
}

py::dict discord_dict(const qcorr::DiscordBreakdown &d) {
  py::dict out;
  out["mutual_information"] = d.mutual_information;
  out["classical_correlation"] = d.classical_correlation;
  out["discord"] = d.discord;
  return out;
}

py::dict transitions_dict(const qcorr::TransitionReport &r) {
  py::dict out;
  out["label"] = std::string(qcorr::to_string(r.state_class.label));
  out["p_sc"] = r.p_sc;
  out["p_sc1"] = r.p_sc1;
  out["p_sc2"] = r.p_sc2;
  out["q"] = r.q;
  if (r.regime) out["regime"] = std::string(qcorr::to_string(*r.regime));
  else out["regime"] = py::none();
  out["pk_sc"] = r.pk_sc;
  out["pk_sc1"] = r.pk_sc1;
  out["pk_sc2"] = r.pk_sc2;
  out["discord_kinks"] = r.discord_kinks;
  out["gqd_kinks"] = r.gqd_kinks;
  return out;
}

}  // namespace

PYBIND11_MODULE(qcorr, m) {
  m.doc() = "Quantum discord and one-norm geometric discord of two-qubit Bell-diagonal states under flip channels";

  py::register_exception<qcorr::ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<qcorr::RangeError>(m, "RangeError", PyExc_ValueError);
  py::register_exception<qcorr::DegenerateInputError>(m, "DegenerateInputError", PyExc_ValueError);
  py::register_exception<qcorr::ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def(
      "bell_diagonal_matrix",
      [](double c1, double c2, double c3) { return to_numpy(qcorr::bell_diagonal_to_matrix(params(c1, c2, c3)).matrix()); },
      py::arg("c1"), py::arg("c2"), py::arg("c3"));

  m.def(
      "evolve",
      [](const std::string &channel, double p, double c1, double c2, double c3) {
        const auto c = qcorr::evolve_params(qcorr::parse_channel_kind(channel), p, params(c1, c2, c3));
        return py::make_tuple(c.c1, c.c2, c.c3);
      },
      py::arg("channel"), py::arg("p"), py::arg("c1"), py::arg("c2"), py::arg("c3"));

  m.def(
      "apply_channel",
      [](const std::string &channel, double p, const py::array_t<qcorr::Complex> &rho) {
        const qcorr::KrausChannel kraus(qcorr::parse_channel_kind(channel), p);
        return to_numpy(qcorr::apply_two_sided(kraus, from_numpy(rho)).matrix());
      },
      py::arg("channel"), py::arg("p"), py::arg("rho"));

  m.def(
      "apply_filter",
      [](double k, const py::array_t<qcorr::Complex> &rho) {
        return to_numpy(qcorr::apply_filter(qcorr::FilterSetting::from_k(k), from_numpy(rho)).matrix());
      },
      py::arg("k"), py::arg("rho"));

  m.def(
      "discord",
      [](double c1, double c2, double c3, std::optional<double> k) {
        const auto c = params(c1, c2, c3);
        return discord_dict(k ? qcorr::discord_filtered(qcorr::FilterSetting::from_k(*k), c) : qcorr::discord_bd(c));
      },
      py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("k") = py::none(),
      "Closed-form discord of the (optionally filtered) Bell-diagonal state.");

  m.def(
      "one_norm_gqd",
      [](double c1, double c2, double c3, std::optional<double> k) {
        const auto c = params(c1, c2, c3);
        const qcorr::OneNormResult r = k ? qcorr::one_norm_gqd_filtered(qcorr::FilterSetting::from_k(*k),
                                                                         qcorr::order_correlations(c))
                                         : qcorr::one_norm_gqd_bd(c);
        return py::make_tuple(r.value, std::string(qcorr::to_string(r.branch)));
      },
      py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("k") = py::none(),
      "Closed-form one-norm geometric discord; returns (value, branch).");

  m.def(
      "discord_oracle", [](const py::array_t<qcorr::Complex> &rho) { return qcorr::discord_oracle(from_numpy(rho)).discord; },
      py::arg("rho"), "Discord by numerical optimization over projective measurements.");

  m.def(
      "one_norm_oracle",
      [](const py::array_t<qcorr::Complex> &rho, std::uint64_t seed) {
        qcorr::OneNormOracleOptions options;
        options.seed = seed;
        return qcorr::one_norm_oracle(from_numpy(rho), options).value;
      },
      py::arg("rho"), py::arg("seed") = qcorr::OneNormOracleOptions{}.seed,
      "One-norm geometric discord by minimization over classical-quantum states.");

  m.def(
      "transitions",
      [](double c1, double c2, double c3, std::optional<double> k) {
        const auto c = params(c1, c2, c3);
        return transitions_dict(k ? qcorr::filtered_transitions(c, qcorr::FilterSetting::from_k(*k))
                                  : qcorr::unfiltered_transitions(c));
      },
      py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("k") = py::none());

  m.def(
      "sweep",
      [](double c1, double c2, double c3, const std::string &channel, std::optional<double> k, int grid) {
        const qcorr::SweepSeries s =
            qcorr::sweep(params(c1, c2, c3), qcorr::parse_channel_kind(channel), filter_from(k), grid);
        py::dict out;
        out["p"] = s.grid;
        for (const auto &name : s.names()) out[py::str(name)] = s.at(name);
        return out;
      },
      py::arg("c1"), py::arg("c2"), py::arg("c3"), py::arg("channel") = "PF", py::arg("k") = py::none(),
      py::arg("grid") = 1001, "Sampled measures over p in [0, 1] as a dict of lists.");

  m.def(
      "detect_events",
      [](const std::vector<double> &grid, const std::vector<double> &values) {
        const qcorr::EventReport r = qcorr::detect_events(grid, values);
        py::list plateaus;
        for (const auto &p : r.plateaus) plateaus.append(py::make_tuple(p.p_start, p.p_end, p.level));
        py::dict out;
        out["plateaus"] = plateaus;
        out["kinks"] = r.kinks;
        out["monotone"] = r.monotone;
        return out;
      },
      py::arg("grid"), py::arg("values"));

  m.def(
      "verify",
      [](std::uint64_t seed, std::optional<int> count) {
        const auto counts = count ? qcorr::VerifyCounts::uniform(*count) : qcorr::VerifyCounts{};
        const qcorr::VerifyReport r = qcorr::run_verify(seed, counts);
        return py::make_tuple(r.passed(), r.to_text());
      },
      py::arg("seed") = 2026, py::arg("count") = py::none());

  m.def(
      "run_sweep_csv", [](const std::string &scenario_json) { return qcorr::run_sweep(qcorr::parse_scenario(scenario_json)).csv; },
      py::arg("scenario_json"));
}
