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
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "esising/error.hpp"
#include "esising/pipeline.hpp"
#include "esising/synthetic.hpp"
#include "support/oracles.hpp"

namespace esising {
namespace {

IterateConfig config(Backend backend, RoundingScheme scheme, Precision precision, int iterations) {
  IterateConfig c;
  c.solver.backend = backend;
  c.scheme = scheme;
  c.precision = precision;
  c.iterations = iterations;
  return c;
}

TEST(NormalizedObjective, Examples) {
  OracleBounds b;
  b.obj_min = 0.0;
  b.obj_max = 10.0;
  EXPECT_EQ(normalized_objective(10.0, b), 1.0);
  EXPECT_EQ(normalized_objective(0.0, b), 0.0);
  EXPECT_EQ(normalized_objective(5.0, b), 0.5);
  b.obj_max = 0.0;
  EXPECT_THROW(normalized_objective(0.0, b), InvalidArgument);
}

TEST(IterateSolve, DeterministicRoundingGivesOneProgram) {
  const auto inst = synthetic_instance("s", 12, 4, 3);
  const auto r = iterate_solve(inst, config(Backend::tabu, RoundingScheme::deterministic, Precision::range(14), 5), 9);
  ASSERT_EQ(r.records.size(), 5u);
  for (const auto& rec : r.records) EXPECT_EQ(rec.digest, r.records[0].digest);
}

TEST(IterateSolve, StochasticRoundingVariesPrograms) {
  const auto inst = synthetic_instance("s", 12, 4, 3);
  const auto r = iterate_solve(inst, config(Backend::tabu, RoundingScheme::stochastic, Precision::bits(4), 8), 9);
  std::set<std::uint64_t> digests;
  for (const auto& rec : r.records) digests.insert(rec.digest);
  EXPECT_GT(digests.size(), 1u);
}

TEST(IterateSolve, BestSoFarMonotoneAndBestIsEarliestMax) {
  const auto inst = synthetic_instance("s", 14, 5, 4);
  for (auto backend : {Backend::tabu, Backend::oscillator, Backend::random}) {
    for (auto scheme : {RoundingScheme::deterministic, RoundingScheme::half, RoundingScheme::stochastic}) {
      const auto r = iterate_solve(inst, config(backend, scheme, Precision::bits(4), 12), 2);
      double best = -INFINITY;
      int first_best = 0;
      for (const auto& rec : r.records) {
        EXPECT_TRUE(rec.outcome.selection.feasible(5));
        EXPECT_EQ(rec.outcome.repaired, !rec.outcome.feasible_before_repair);
        if (rec.outcome.fp_objective > best) {
          best = rec.outcome.fp_objective;
          first_best = rec.iteration;
        }
        EXPECT_EQ(rec.best_so_far, best);
      }
      EXPECT_EQ(r.best.fp_objective, best);
      EXPECT_EQ(r.best.seed, r.records[first_best - 1].outcome.seed);
    }
  }
}

TEST(IterateSolve, SeedReproducible) {
  const auto inst = synthetic_instance("s", 12, 4, 5);
  const auto c = config(Backend::oscillator, RoundingScheme::stochastic, Precision::range(14), 4);
  const auto a = iterate_solve(inst, c, 3);
  const auto b = iterate_solve(inst, c, 3);
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_EQ(a.records[k].digest, b.records[k].digest);
    EXPECT_EQ(a.records[k].outcome.selection, b.records[k].outcome.selection);
  }
}

TEST(IterateSolve, ExhaustiveIsIndependentOfIterations) {
  const auto inst = synthetic_instance("s", 12, 4, 6);
  const auto bounds = solve_exhaustive(inst);
  for (int iters : {1, 3, 7}) {
    const auto r = iterate_solve(inst, config(Backend::exhaustive, RoundingScheme::deterministic, Precision::range(14), iters), 1);
    EXPECT_EQ(r.best.selection, bounds.argmax);
    EXPECT_EQ(normalized_objective(r.best.fp_objective, bounds), 1.0);
  }
}

TEST(IterateSolve, FullPrecisionBiasSweepKeepsArgmax) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = oracle::random_instance(10, 4, seed);
    const auto bounds = solve_exhaustive(inst);
    const double gamma = default_gamma(inst);
    const double bias = default_bias(inst, gamma);
    for (double mu_b : {0.0, bias, 10.0 * bias}) {
      auto c = config(Backend::exhaustive, RoundingScheme::deterministic, Precision::full_precision(), 1);
      c.mu_b = mu_b;
      const auto r = iterate_solve(inst, c, 1);
      EXPECT_EQ(r.best.selection, bounds.argmax);
      EXPECT_EQ(r.compiled.mu_b, mu_b);
    }
  }
}

TEST(IterateSolve, RejectsBadConfigurations) {
  const auto inst = synthetic_instance("s", 8, 3, 1);
  EXPECT_THROW(iterate_solve(inst, config(Backend::tabu, RoundingScheme::stochastic, Precision::range(14), 0), 1),
               InvalidArgument);
  EXPECT_THROW(iterate_solve(inst, config(Backend::oscillator, RoundingScheme::stochastic, Precision::full_precision(), 1), 1),
               InvalidArgument);
  auto c = config(Backend::exhaustive, RoundingScheme::stochastic, Precision::range(14), 1);
  c.solver.oracle_cap = 3;
  EXPECT_THROW(iterate_solve(inst, c, 1), OracleTooLarge);
}

TEST(Decomposition, SolveCounts) {
  EXPECT_EQ(decomposition_solves(20, 6, 20, 10), 2);
  EXPECT_EQ(decomposition_solves(50, 6, 20, 10), 4);
  EXPECT_EQ(decomposition_solves(100, 6, 20, 10), 9);
  EXPECT_EQ(decomposition_solves(20, 10, 20, 10), 1);
  EXPECT_THROW(decomposition_solves(20, 6, 10, 10), InvalidArgument);
  EXPECT_THROW(decomposition_solves(20, 11, 20, 10), InvalidArgument);
  EXPECT_THROW(decomposition_solves(19, 6, 20, 10), InvalidArgument);
}

TEST(Decomposition, TwentySentencesTakeTwoStages) {
  const auto inst = synthetic_instance("s", 20, 6, 2);
  const auto r = decompose_summarize(inst, 20, 10, config(Backend::tabu, RoundingScheme::stochastic, Precision::range(14), 1), 4);
  ASSERT_EQ(r.plan.solves(), 2);
  EXPECT_EQ(r.plan.trace[0].window.size(), 20u);
  EXPECT_EQ(r.plan.trace[0].selected.size(), 10u);
  EXPECT_TRUE(r.plan.trace[1].final_stage);
  EXPECT_EQ(r.plan.trace[1].window, r.plan.trace[0].selected);
  EXPECT_EQ(r.selection.count(), 6);
}

TEST(Decomposition, FiftySentenceTrace) {
  const auto inst = synthetic_instance("s", 50, 6, 3);
  const auto r = decompose_summarize(inst, 20, 10, config(Backend::tabu, RoundingScheme::stochastic, Precision::range(14), 1), 5);
  ASSERT_EQ(r.plan.solves(), 4);
  std::vector<int> survivors(50);
  for (int i = 0; i < 50; ++i) survivors[i] = i;
  const std::vector<int> expect_counts{50, 40, 30, 20};
  for (int s = 0; s < 3; ++s) {
    const auto& t = r.plan.trace[s];
    EXPECT_EQ(static_cast<int>(survivors.size()), expect_counts[s]);
    // The window is P consecutive survivors from the cursor, wrapping around.
    for (int k = 0; k < 20; ++k) {
      EXPECT_EQ(t.window[k], survivors[(t.cursor + k) % survivors.size()]);
    }
    for (int idx : t.selected) {
      EXPECT_NE(std::find(t.window.begin(), t.window.end(), idx), t.window.end());
    }
    std::vector<int> next;
    for (int idx : survivors) {
      const bool in_window = std::find(t.window.begin(), t.window.end(), idx) != t.window.end();
      const bool kept = std::find(t.selected.begin(), t.selected.end(), idx) != t.selected.end();
      if (!in_window || kept) next.push_back(idx);
    }
    survivors = next;
  }
  EXPECT_EQ(r.plan.trace[0].cursor, 0);
  // Stage 2 resumes at the sentence after the first window.
  EXPECT_EQ(r.plan.trace[1].window.front(), 20);
  EXPECT_EQ(r.plan.trace[3].window, survivors);
  EXPECT_TRUE(r.plan.trace[3].final_stage);
  EXPECT_EQ(static_cast<int>(survivors.size()), 20);
}

TEST(Decomposition, OutputProvenance) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 25 + static_cast<int>(seed) * 7;
    const auto inst = synthetic_instance("s", n, 6, seed);
    const auto r = decompose_summarize(inst, 12, 7, config(Backend::random, RoundingScheme::stochastic, Precision::range(14), 2), seed);
    const auto idx = r.selection.indices();
    EXPECT_EQ(idx.size(), 6u);
    EXPECT_EQ(std::set<int>(idx.begin(), idx.end()).size(), 6u);
    const auto& last = r.plan.trace.back().selected;
    EXPECT_EQ(std::set<int>(last.begin(), last.end()), std::set<int>(idx.begin(), idx.end()));
    EXPECT_NEAR(r.fp_objective, fp_objective(inst, r.selection), 1e-12);
    EXPECT_EQ(r.plan.solves(), decomposition_solves(n, 6, 12, 7));
  }
}

TEST(Decomposition, RejectsBadParameters) {
  const auto inst = synthetic_instance("s", 20, 6, 1);
  const auto c = config(Backend::tabu, RoundingScheme::stochastic, Precision::range(14), 1);
  EXPECT_THROW(decompose_summarize(inst, 21, 10, c, 1), InvalidArgument);
  EXPECT_THROW(decompose_summarize(inst, 10, 10, c, 1), InvalidArgument);
  EXPECT_THROW(decompose_summarize(inst, 10, 5, c, 1), InvalidArgument);
}

}  // namespace
}  // namespace esising
