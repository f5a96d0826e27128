// Copyright 2026 The esising Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <vector>

#include "esising/error.hpp"
#include "esising/rng.hpp"
#include "esising/solvers.hpp"

namespace esising {
namespace {

void check_range(double v, int range_w, const char* what) {
  if (std::abs(v) > range_w) {
    std::ostringstream os;
    os << "oscillator surrogate: " << what << " coefficient " << v << " is outside [-" << range_w
       << ", " << range_w << "]";
    throw InvalidArgument(os.str());
  }
}

}  // namespace

Spins solve_oscillator(const QuantizedIsing& form, const OscillatorParams& params,
                       std::uint64_t seed) {
  const int n = form.size();
  if (form.range_w < 1) throw InvalidArgument("oscillator surrogate: range_w must be >= 1");
  for (int v : form.h) check_range(v, form.range_w, "field");
  for (int v : form.j.values()) check_range(v, form.range_w, "coupling");
  if (params.steps < 1 || !(params.dt > 0.0)) {
    throw InvalidArgument("oscillator surrogate: steps and dt must be positive");
  }
  if (n == 0) return {};

  // Node n is the ancilla. W is the per-ordered-pair weight, so that
  // sum_{a != b} W_ab cos(phi_a - phi_b) equals the Ising energy at
  // binarized phases with the ancilla as phase reference.
  const int nodes = n + 1;
  const auto un = static_cast<std::size_t>(nodes);
  std::vector<double> w(un * un, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (int j = i + 1; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      const double v = form.j.at(ui, uj);
      w[ui * un + uj] = v;
      w[uj * un + ui] = v;
    }
    w[ui * un + static_cast<std::size_t>(n)] = 0.5 * form.h[ui];
    w[static_cast<std::size_t>(n) * un + ui] = 0.5 * form.h[ui];
  }

  const double k = params.coupling > 0.0 ? params.coupling : 1.0 / form.range_w;
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  constexpr double kTwoPi = 2.0 * std::numbers::pi;

  std::vector<double> phi(un);
  for (auto& p : phi) p = kTwoPi * uniform01(rng);

  std::vector<double> c(un), s(un), drift(un);
  const double sqrt_dt = std::sqrt(params.dt);
  for (int step = 0; step < params.steps; ++step) {
    const double progress = static_cast<double>(step) / params.steps;
    const double shil = params.shil_max * progress;
    const double sigma = params.noise * (1.0 - progress);
    for (std::size_t a = 0; a < un; ++a) {
      c[a] = std::cos(phi[a]);
      s[a] = std::sin(phi[a]);
    }
    for (std::size_t a = 0; a < un; ++a) {
      double wc = 0.0;
      double ws = 0.0;
      const double* row = &w[a * un];
      for (std::size_t b = 0; b < un; ++b) {
        wc += row[b] * c[b];
        ws += row[b] * s[b];
      }
      // sum_b W_ab sin(phi_a - phi_b) = sin(phi_a) sum W cos - cos(phi_a) sum W sin
      const double pair_term = s[a] * wc - c[a] * ws;
      drift[a] = k * pair_term - shil * 2.0 * s[a] * c[a];
    }
    for (std::size_t a = 0; a < un; ++a) {
      phi[a] += params.dt * drift[a];
      if (sigma > 0.0) phi[a] += sigma * sqrt_dt * gauss(rng);
    }
  }

  Spins spins(static_cast<std::size_t>(n));
  const double ref = phi[static_cast<std::size_t>(n)];
  for (int i = 0; i < n; ++i) {
    spins[static_cast<std::size_t>(i)] = std::cos(phi[static_cast<std::size_t>(i)] - ref) >= 0.0 ? 1 : -1;
  }
  return spins;
}

Spins solve_oscillator(const IsingForm& form, int range_w, const OscillatorParams& params,
                       std::uint64_t seed) {
  if (range_w < 1) throw InvalidArgument("oscillator surrogate: range_w must be >= 1");
  QuantizedIsing q;
  q.range_w = range_w;
  q.h.reserve(form.h.size());
  auto to_int = [range_w](double v, const char* what) {
    if (!std::isfinite(v) || v != std::round(v)) {
      std::ostringstream os;
      os << "oscillator surrogate: " << what << " coefficient " << v
         << " is not an integer (hardware accepts integer couplings only)";
      throw InvalidArgument(os.str());
    }
    check_range(v, range_w, what);
    return static_cast<int>(v);
  };
  for (double v : form.h) q.h.push_back(to_int(v, "field"));
  std::vector<int> packed;
  for (double v : form.j.values()) packed.push_back(to_int(v, "coupling"));
  q.j = UpperTriangular<int>(form.h.size(), std::move(packed));
  return solve_oscillator(q, params, seed);
}

}  // namespace esising
