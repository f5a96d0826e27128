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

#include "esising/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstring>
#include <sstream>

#include "esising/error.hpp"
#include "esising/rng.hpp"

namespace esising {
namespace {

std::uint64_t digest_real(const IsingForm& f) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&hash](double v) {
    std::uint64_t u = 0;
    std::memcpy(&u, &v, sizeof u);
    for (int b = 0; b < 8; ++b) {
      hash ^= (u >> (8 * b)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  for (double v : f.h) feed(v);
  for (double v : f.j.values()) feed(v);
  return hash;
}

}  // namespace

double normalized_objective(double obj, const OracleBounds& bounds) {
  const double span = bounds.obj_max - bounds.obj_min;
  if (!(span > 0.0)) {
    throw InvalidArgument("degenerate oracle bounds (obj_max == obj_min); normalized objective undefined");
  }
  return (obj - bounds.obj_min) / span;
}

IterateResult iterate_solve(const EsInstance& instance, const IterateConfig& config,
                            std::uint64_t seed) {
  if (config.iterations < 1) throw InvalidArgument("iterations must be >= 1");
  const Backend backend = config.solver.backend;
  if (backend == Backend::oscillator && config.precision.full) {
    throw InvalidArgument(
        "the oscillator backend accepts integer programs only; choose a range or bit width");
  }

  IterateResult result;
  result.compiled = compile(instance, config.formulation, config.gamma, config.mu_b);
  const IsingForm& ising = result.compiled.ising;
  const int m = instance.summary_length();

  std::optional<OracleBounds> oracle;
  if (backend == Backend::exhaustive) oracle = solve_exhaustive(instance, config.solver.oracle_cap);

  std::optional<ScaledForm> scaled;
  if (!config.precision.full) scaled = scale_to_range(ising, config.precision.range_w);

  std::optional<QuantizedIsing> fixed_program;  // deterministic rounding is pure
  result.records.reserve(static_cast<std::size_t>(config.iterations));

  for (int k = 0; k < config.iterations; ++k) {
    const auto start = std::chrono::steady_clock::now();
    const std::uint64_t child = derive_seed(seed, {static_cast<std::uint64_t>(k)});
    const std::uint64_t quant_seed = derive_seed(child, {0});
    const std::uint64_t solver_seed = derive_seed(child, {1});

    const QuantizedIsing* program = nullptr;
    QuantizedIsing local_program;
    if (scaled) {
      if (config.scheme == RoundingScheme::deterministic) {
        if (!fixed_program) fixed_program = round_deterministic(*scaled);
        program = &*fixed_program;
      } else {
        local_program = round_with(*scaled, config.scheme, quant_seed);
        program = &local_program;
      }
    }

    Spins spins;
    switch (backend) {
      case Backend::exhaustive:
        spins = oracle->argmax.spins();
        break;
      case Backend::tabu:
        spins = program ? solve_tabu(*program, config.solver.tabu, solver_seed)
                        : solve_tabu(ising, config.solver.tabu, solver_seed);
        break;
      case Backend::oscillator:
        spins = solve_oscillator(*program, config.solver.oscillator, solver_seed);
        break;
      case Backend::random:
        spins = random_selection(instance.size(), m, solver_seed).spins();
        break;
    }

    SolveOutcome outcome;
    outcome.raw_energy = program ? ising_energy(*program, spins) : ising_energy(ising, spins);
    const Selection raw = Selection::from_spins(spins);
    outcome.feasible_before_repair = raw.feasible(m);
    outcome.selection = outcome.feasible_before_repair ? raw : repair(instance, raw);
    outcome.repaired = !outcome.feasible_before_repair;
    outcome.fp_objective = fp_objective(instance, outcome.selection);
    outcome.solver = backend;
    outcome.seed = child;
    outcome.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);

    if (k == 0 || outcome.fp_objective > result.best.fp_objective) result.best = outcome;

    IterationRecord rec;
    rec.iteration = k + 1;
    rec.digest = program ? digest(*program) : digest_real(ising);
    rec.outcome = std::move(outcome);
    rec.best_so_far = result.best.fp_objective;
    result.records.push_back(std::move(rec));
  }
  return result;
}

int DecompositionPlan::solves() const { return static_cast<int>(trace.size()); }

int decomposition_solves(int n, int m, int p, int q) {
  if (!(m <= q && q < p && p <= n)) {
    throw InvalidArgument("decomposition requires M <= Q < P <= N");
  }
  int survivors = n;
  int solves = 0;
  do {
    survivors -= p - q;
    ++solves;
  } while (survivors > p);
  if (survivors > m) ++solves;
  return solves;
}

DecomposeResult decompose_summarize(const EsInstance& instance, int p, int q,
                                    const IterateConfig& stage_config, std::uint64_t seed) {
  const int n = instance.size();
  const int m = instance.summary_length();
  if (!(m <= q && q < p && p <= n)) {
    std::ostringstream os;
    os << "decomposition requires M <= Q < P <= N (M = " << m << ", Q = " << q << ", P = " << p
       << ", N = " << n << ")";
    throw InvalidArgument(os.str());
  }

  DecomposeResult result;
  result.plan.p = p;
  result.plan.q = q;
  result.plan.m = m;

  std::vector<int> survivors(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) survivors[static_cast<std::size_t>(i)] = i;
  int cursor = 0;
  int stage = 0;

  do {
    const int count = static_cast<int>(survivors.size());
    StageTrace trace;
    trace.stage = stage;
    trace.cursor = cursor;
    trace.target = q;
    for (int t = 0; t < p; ++t) {
      trace.window.push_back(survivors[static_cast<std::size_t>((cursor + t) % count)]);
    }
    // First survivor after the window, in circular order; the next window
    // starts there.
    const std::optional<int> anchor =
        p < count ? std::optional<int>(survivors[static_cast<std::size_t>((cursor + p) % count)])
                  : std::nullopt;

    std::vector<int> members = trace.window;
    std::sort(members.begin(), members.end());
    const EsInstance sub = instance.restrict_to(members, q);
    const IterateResult solved =
        iterate_solve(sub, stage_config, derive_seed(seed, {static_cast<std::uint64_t>(stage)}));
    for (int local : solved.best.selection.indices()) {
      trace.selected.push_back(members[static_cast<std::size_t>(local)]);
    }
    trace.outcome = solved.best;

    std::vector<int> next;
    next.reserve(survivors.size());
    for (int idx : survivors) {
      const bool in_window = std::binary_search(members.begin(), members.end(), idx);
      const bool kept = std::find(trace.selected.begin(), trace.selected.end(), idx) !=
                        trace.selected.end();
      if (!in_window || kept) next.push_back(idx);
    }
    survivors = std::move(next);
    cursor = 0;
    if (anchor) {
      cursor = static_cast<int>(std::find(survivors.begin(), survivors.end(), *anchor) -
                                survivors.begin());
    }
    result.plan.trace.push_back(std::move(trace));
    ++stage;
  } while (static_cast<int>(survivors.size()) > p);

  std::vector<int> chosen;
  if (static_cast<int>(survivors.size()) > m) {
    StageTrace trace;
    trace.stage = stage;
    trace.cursor = 0;
    trace.target = m;
    trace.final_stage = true;
    trace.window = survivors;
    const EsInstance sub = instance.restrict_to(survivors, m);
    const IterateResult solved =
        iterate_solve(sub, stage_config, derive_seed(seed, {static_cast<std::uint64_t>(stage)}));
    for (int local : solved.best.selection.indices()) {
      trace.selected.push_back(survivors[static_cast<std::size_t>(local)]);
    }
    trace.outcome = solved.best;
    chosen = trace.selected;
    result.plan.trace.push_back(std::move(trace));
  } else {
    chosen = survivors;
  }

  result.selection = Selection::from_indices(n, chosen);
  result.fp_objective = fp_objective(instance, result.selection);
  return result;
}

}  // namespace esising
