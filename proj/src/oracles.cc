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

#include "qcorr/oracles.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qcorr/errors.h"
#include "qcorr/optimize.h"

namespace qcorr {
namespace {

using std::numbers::pi;

// Pieces of rho_B conditioned on a measurement along n:
// Tr_A[(P±⊗I) rho] = (base ± sum_i n_i parts[i]) / 2.
struct ConditionalPieces {
  Mat2 base;
  Mat2 parts[3];

  explicit ConditionalPieces(const Mat4 &rho) : base(trace_out(rho, Subsystem::kA)) {
    for (int i = 0; i < 3; ++i) parts[i] = trace_out(kron(pauli(i + 1), Mat2::identity()) * rho, Subsystem::kA);
  }

  double entropy_along(double polar, double azimuth) const {
    const double n[3] = {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
    Mat2 dir;
    for (int i = 0; i < 3; ++i) dir += parts[i] * n[i];
    double total = 0.0;
    for (double sign : {1.0, -1.0}) {
      const Mat2 m = (base + dir * sign) * 0.5;
      const double a = m(0, 0).real(), d = m(1, 1).real();
      const double prob = a + d;
      if (prob <= 0.0) continue;
      const double r = std::hypot(a - d, 2.0 * std::abs(m(0, 1)));
      // p S(m/p) = -sum mu log2 mu + p log2 p for the unnormalized eigenvalues mu.
      for (double mu : {0.5 * (prob + r), 0.5 * (prob - r)})
        if (mu > 0.0) total -= mu * std::log2(mu);
      total += prob * std::log2(prob);
    }
    return total;
  }
};

Mat2 bloch_state(double x, double y, double z) {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (r > 1.0) {
    x /= r;
    y /= r;
    z /= r;
  }
  Mat2 m;
  m(0, 0) = 0.5 * (1.0 + z);
  m(1, 1) = 0.5 * (1.0 - z);
  m(0, 1) = Complex(0.5 * x, -0.5 * y);
  m(1, 0) = Complex(0.5 * x, 0.5 * y);
  return m;
}

}  // namespace

double conditional_entropy(const TwoQubitState &state, double polar, double azimuth) {
  return ConditionalPieces(state.matrix()).entropy_along(polar, azimuth);
}

DiscordOracleResult discord_oracle(const TwoQubitState &state, const DiscordOracleOptions &options) {
  const ConditionalPieces pieces(state.matrix());
  const int np = options.polar_points, na = options.azimuth_points;

  DiscordOracleResult result;
  std::vector<double> grid(static_cast<size_t>(np) * na);
  auto polar_at = [&](int i) { return np > 1 ? pi * i / (np - 1) : 0.0; };
  auto azimuth_at = [&](int j) { return 2.0 * pi * j / na; };
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < na; ++j) grid[i * na + j] = pieces.entropy_along(polar_at(i), azimuth_at(j));
  result.evaluations = np * na;

  // Grid local minima (azimuth wraps), lowest first.
  std::vector<std::pair<double, int>> minima;
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < na; ++j) {
      const double v = grid[i * na + j];
      bool is_min = true;
      for (int di = -1; di <= 1 && is_min; ++di) {
        const int ii = i + di;
        if (ii < 0 || ii >= np) continue;
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          if (grid[ii * na + (j + dj + na) % na] < v) {
            is_min = false;
            break;
          }
        }
      }
      if (is_min) minima.emplace_back(v, i * na + j);
    }
  }
  std::sort(minima.begin(), minima.end());
  if (minima.size() > static_cast<size_t>(options.refine_starts)) minima.resize(options.refine_starts);

  const Objective objective = [&](std::span<const double> x) { return pieces.entropy_along(x[0], x[1]); };
  NelderMeadOptions nm;
  nm.initial_step = pi / (np > 1 ? np - 1 : 1);
  nm.diameter_tol = options.diameter_tol;
  nm.max_evaluations = options.max_evaluations;

  double best = std::numeric_limits<double>::infinity();
  bool any_converged = false;
  for (const auto &[value, index] : minima) {
    if (value < best) {
      best = value;
      result.polar = polar_at(index / na);
      result.azimuth = azimuth_at(index % na);
    }
    std::vector<double> x = {polar_at(index / na), azimuth_at(index % na)};
    for (int attempt = 0; attempt < options.max_restarts; ++attempt) {
      const NelderMeadResult r = nelder_mead(objective, x, nm);
      result.evaluations += r.evaluations;
      x = r.x;
      if (r.value < best) {
        best = r.value;
        result.polar = r.x[0];
        result.azimuth = r.x[1];
      }
      if (r.converged) {
        any_converged = true;
        break;
      }
    }
  }

  const double s_b = von_neumann_entropy(pieces.base);
  result.mutual_information = von_neumann_entropy(trace_out(state.matrix(), Subsystem::kB)) + s_b -
                              von_neumann_entropy(state.matrix());
  result.classical_correlation = s_b - best;
  result.discord = result.mutual_information - result.classical_correlation;
  if (!any_converged) {
    throw ConvergenceError("discord oracle: no refinement run converged", result.discord);
  }
  return result;
}

Mat4 classical_quantum_state(std::span<const double> params) {
  const double polar = params[0], azimuth = params[1];
  const double weight = std::sin(params[2]) * std::sin(params[2]);
  const double n[3] = {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
  const Mat2 plus = bloch_state(n[0], n[1], n[2]);
  const Mat2 minus = Mat2::identity() - plus;
  return kron(plus, bloch_state(params[3], params[4], params[5])) * weight +
         kron(minus, bloch_state(params[6], params[7], params[8])) * (1.0 - weight);
}

OneNormOracleResult one_norm_oracle(const TwoQubitState &state, const OneNormOracleOptions &options) {
  const Mat4 &rho = state.matrix();
  const Objective objective = [&](std::span<const double> x) {
    Mat4 diff = rho - classical_quantum_state(x);
    // Keep the difference exactly Hermitian for the eigensolver.
    diff = (diff + diff.adjoint()) * 0.5;
    return 0.5 * trace_norm(diff);
  };

  OneNormOracleResult result;
  result.seed = options.seed;
  result.value = std::numeric_limits<double>::infinity();
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  bool any_converged = false;

  for (int start = 0; start < options.starts; ++start) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(start)};
    std::mt19937_64 rng(seq);
    std::vector<double> x(kClassicalQuantumParams);
    x[0] = std::acos(2.0 * unit(rng) - 1.0);
    x[1] = 2.0 * pi * unit(rng);
    x[2] = std::asin(std::sqrt(unit(rng)));
    for (int b = 0; b < 2; ++b) {
      // Uniform in the unit ball.
      const double r = std::cbrt(unit(rng));
      const double cz = 2.0 * unit(rng) - 1.0, az = 2.0 * pi * unit(rng);
      const double s = std::sqrt(1.0 - cz * cz);
      x[3 + 3 * b] = r * s * std::cos(az);
      x[4 + 3 * b] = r * s * std::sin(az);
      x[5 + 3 * b] = r * cz;
    }

    NelderMeadOptions nm;
    nm.initial_step = 0.25;
    nm.diameter_tol = options.diameter_tol;
    nm.max_evaluations = options.max_evaluations;
    NelderMeadResult r = nelder_mead(objective, x, nm);
    result.evaluations += r.evaluations;
    bool converged = r.converged;
    nm.initial_step = 0.05;
    for (int round = 0; round < options.polish_rounds; ++round) {
      const NelderMeadResult again = nelder_mead(objective, r.x, nm);
      result.evaluations += again.evaluations;
      converged = converged || again.converged;
      const bool improved = again.value < r.value - 1e-13;
      if (again.value < r.value) r = again;
      if (!improved) break;
    }
    any_converged = any_converged || converged;
    if (r.value < result.value) {
      result.value = r.value;
      result.argmin = r.x;
    }
  }
  if (!any_converged && options.starts > 0) {
    throw ConvergenceError("one-norm oracle: no start converged", result.value);
  }
  return result;
}

}  // namespace qcorr
