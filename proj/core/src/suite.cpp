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

#include "esising/suite.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>

#include "esising/error.hpp"
#include "esising/rng.hpp"

namespace esising {
namespace {

struct RunSlot {
  // normalized best-so-far value per iteration count of the variant
  std::vector<double> values;
  // dense best-so-far normalized curve (direct variants only)
  std::vector<double> curve;
  double seconds = 0.0;
  long long iterations = 0;
};

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

}  // namespace

Stats summarize(std::span<const double> values) {
  if (values.empty()) return {};
  Stats s;
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  s.median = median(values);
  s.min = *std::min_element(values.begin(), values.end());
  s.max = *std::max_element(values.begin(), values.end());
  return s;
}

int iterations_per_stage(int total, int solves) {
  if (total < 1 || solves < 1) throw InvalidArgument("iteration counts must be >= 1");
  return std::max(1, total / solves);
}

SuiteResult run_variant_suite(std::span<const EsInstance> instances, const SuiteConfig& config) {
  if (config.repeats < 1) throw InvalidArgument("repeats must be >= 1");
  for (const Variant& v : config.variants) {
    if (v.iteration_counts.empty()) throw InvalidArgument("variant '" + v.name + "' has no iteration counts");
    for (int c : v.iteration_counts) {
      if (c < 1) throw InvalidArgument("variant '" + v.name + "' has an iteration count < 1");
    }
  }

  SuiteResult result;
  std::vector<std::size_t> kept;
  std::vector<OracleBounds> bounds;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    try {
      OracleBounds b = solve_exhaustive(instances[i], config.oracle_cap);
      if (!(b.obj_max > b.obj_min)) throw InvalidArgument("degenerate oracle bounds");
      bounds.push_back(std::move(b));
      kept.push_back(i);
      result.instances.push_back(instances[i].name());
    } catch (const Error& e) {
      result.skipped.push_back({instances[i].name(), e.what()});
    }
  }

  const std::size_t n_inst = kept.size();
  const auto repeats = static_cast<std::size_t>(config.repeats);

  for (const Variant& variant : config.variants) {
    std::vector<int> counts = variant.iteration_counts;
    std::sort(counts.begin(), counts.end());
    counts.erase(std::unique(counts.begin(), counts.end()), counts.end());

    IterateConfig base;
    base.formulation = variant.formulation;
    base.scheme = variant.scheme;
    base.precision = variant.precision;
    base.solver.backend = variant.backend;
    base.solver.tabu = config.tabu;
    base.solver.oscillator = config.oscillator;
    base.solver.oracle_cap = config.oracle_cap;

    std::vector<RunSlot> slots(n_inst * repeats);
    parallel_for(slots.size(), config.threads, [&](std::size_t task) {
      const std::size_t k = task / repeats;
      const std::size_t r = task % repeats;
      const EsInstance& inst = instances[kept[k]];
      const OracleBounds& ob = bounds[k];
      const std::uint64_t run_seed = derive_seed(config.seed, {kept[k], r});
      RunSlot& slot = slots[task];

      if (!variant.decompose) {
        IterateConfig cfg = base;
        cfg.iterations = counts.back();
        const IterateResult res = iterate_solve(inst, cfg, run_seed);
        slot.curve.reserve(res.records.size());
        for (const IterationRecord& rec : res.records) {
          slot.curve.push_back(normalized_objective(rec.best_so_far, ob));
          slot.seconds += std::chrono::duration<double>(rec.outcome.wall_time).count();
        }
        slot.iterations = static_cast<long long>(res.records.size());
        for (int c : counts) slot.values.push_back(slot.curve[static_cast<std::size_t>(c - 1)]);
      } else {
        const int solves = decomposition_solves(inst.size(), inst.summary_length(),
                                                variant.decompose->p, variant.decompose->q);
        for (int c : counts) {
          IterateConfig cfg = base;
          cfg.iterations = iterations_per_stage(c, solves);
          const auto start = std::chrono::steady_clock::now();
          const DecomposeResult res = decompose_summarize(inst, variant.decompose->p,
                                                          variant.decompose->q, cfg, run_seed);
          slot.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          slot.iterations += static_cast<long long>(cfg.iterations) * res.plan.solves();
          slot.values.push_back(normalized_objective(res.fp_objective, ob));
        }
      }
    });

    VariantResult vr;
    vr.variant = variant;
    vr.variant.iteration_counts = counts;
    double seconds = 0.0;
    long long iters = 0;
    for (const RunSlot& s : slots) {
      seconds += s.seconds;
      iters += s.iterations;
    }
    vr.mean_seconds_per_iter = iters > 0 ? seconds / static_cast<double>(iters) : 0.0;

    for (std::size_t ci = 0; ci < counts.size(); ++ci) {
      CountResult cr;
      cr.iterations = counts[ci];
      for (std::size_t k = 0; k < n_inst; ++k) {
        double sum = 0.0;
        for (std::size_t r = 0; r < repeats; ++r) sum += slots[k * repeats + r].values[ci];
        cr.instance_means.push_back(sum / static_cast<double>(repeats));
      }
      cr.stats = summarize(cr.instance_means);
      vr.by_count.push_back(std::move(cr));
    }

    for (std::size_t k = 0; k < n_inst; ++k) {
      Curve curve;
      if (!variant.decompose) {
        std::vector<double> mean(static_cast<std::size_t>(counts.back()), 0.0);
        for (std::size_t r = 0; r < repeats; ++r) {
          const auto& c = slots[k * repeats + r].curve;
          for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += c[i];
        }
        for (double& v : mean) v /= static_cast<double>(repeats);
        curve = Curve::dense(std::move(mean));
      } else {
        curve.iterations = counts;
        for (const CountResult& cr : vr.by_count) curve.values.push_back(cr.instance_means[k]);
      }
      vr.curves.push_back(std::move(curve));
    }
    result.variants.push_back(std::move(vr));
  }
  return result;
}

}  // namespace esising
