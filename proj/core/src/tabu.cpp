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

#include <algorithm>
#include <limits>
#include <vector>

#include "esising/rng.hpp"
#include "esising/solvers.hpp"

namespace esising {
namespace {

// Dense symmetric coupling matrix; J(i, j) is the per-ordered-pair value.
struct DenseIsing {
  int n = 0;
  std::vector<double> h;
  std::vector<double> coupling;
  double offset = 0.0;

  double J(int i, int j) const {
    return coupling[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                    static_cast<std::size_t>(j)];
  }
};

template <typename Form>
DenseIsing densify(const Form& form, double offset) {
  DenseIsing d;
  d.n = form.size();
  d.h.assign(form.h.begin(), form.h.end());
  const auto n = static_cast<std::size_t>(d.n);
  d.coupling.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = form.j.at(i, j);
      d.coupling[i * n + j] = v;
      d.coupling[j * n + i] = v;
    }
  }
  d.offset = offset;
  return d;
}

TabuResult run_tabu(const DenseIsing& d, const TabuParams& params, std::uint64_t seed) {
  const int n = d.n;
  TabuResult result;
  if (n == 0) return result;

  Rng rng(seed);
  Spins s(static_cast<std::size_t>(n));
  for (auto& v : s) v = params.random_start && (rng() >> 63) ? 1 : -1;

  // field[i] = h_i + 2 sum_j J_ij s_j; flipping i changes E by -2 s_i field[i].
  std::vector<double> field(static_cast<std::size_t>(n));
  double energy = d.offset;
  for (int i = 0; i < n; ++i) {
    double f = d.h[static_cast<std::size_t>(i)];
    for (int j = 0; j < n; ++j) {
      if (j != i) f += 2.0 * d.J(i, j) * s[static_cast<std::size_t>(j)];
    }
    field[static_cast<std::size_t>(i)] = f;
    energy += s[static_cast<std::size_t>(i)] *
              (d.h[static_cast<std::size_t>(i)] + 0.5 * (f - d.h[static_cast<std::size_t>(i)]));
  }

  constexpr double kEps = 1e-9;
  // Tenure is drawn per flip from [t, 1.5 t]; capping t at (n - 1) / 2 keeps
  // at least one move admissible.
  const int tenure = std::clamp(params.tenure, 0, (n - 1) / 2);
  const long long total_steps = static_cast<long long>(std::max(params.max_sweeps, 0)) * n;
  const long long stall_steps = static_cast<long long>(std::max(params.stall_limit, 1)) * n;

  std::vector<long long> tabu_until(static_cast<std::size_t>(n), 0);
  double best = energy;
  Spins best_s = s;
  long long last_improve = 0;

  for (long long step = 1; step <= total_steps; ++step) {
    int pick = -1;
    int ties = 0;
    double pick_delta = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const double delta = -2.0 * s[ui] * field[ui];
      const bool is_tabu = step < tabu_until[ui];
      if (is_tabu && !(energy + delta < best - kEps)) continue;
      if (delta < pick_delta - kEps) {
        pick_delta = delta;
        pick = i;
        ties = 1;
      } else if (delta <= pick_delta + kEps && rng() % static_cast<unsigned>(++ties) == 0) {
        pick_delta = delta;
        pick = i;
      }
    }
    if (pick < 0) break;

    const auto up = static_cast<std::size_t>(pick);
    s[up] = static_cast<std::int8_t>(-s[up]);
    energy += pick_delta;
    for (int j = 0; j < n; ++j) {
      if (j != pick) field[static_cast<std::size_t>(j)] += 4.0 * d.J(pick, j) * s[up];
    }
    const long long extra = tenure > 0 ? static_cast<long long>(rng() % (tenure / 2 + 1)) : 0;
    tabu_until[up] = step + tenure + extra + 1;

    if (energy < best - kEps) {
      best = energy;
      best_s = s;
      last_improve = step;
    }
    if (step % n == 0) result.best_trace.push_back(best);
    if (step - last_improve >= stall_steps) break;
  }
  if (result.best_trace.empty() || result.best_trace.back() != best) {
    result.best_trace.push_back(best);
  }

  result.spins = std::move(best_s);
  result.energy = best;
  return result;
}

}  // namespace

TabuResult tabu_search(const IsingForm& form, const TabuParams& params, std::uint64_t seed) {
  return run_tabu(densify(form, form.offset), params, seed);
}

TabuResult tabu_search(const QuantizedIsing& form, const TabuParams& params,
                       std::uint64_t seed) {
  return run_tabu(densify(form, 0.0), params, seed);
}

Spins solve_tabu(const IsingForm& form, const TabuParams& params, std::uint64_t seed) {
  return tabu_search(form, params, seed).spins;
}

Spins solve_tabu(const QuantizedIsing& form, const TabuParams& params, std::uint64_t seed) {
  return tabu_search(form, params, seed).spins;
}

}  // namespace esising
