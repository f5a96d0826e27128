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
#include <chrono>
#include <vector>

#include <gtest/gtest.h>

#include "esising/error.hpp"
#include "esising/solvers.hpp"
#include "esising/synthetic.hpp"
#include "support/oracles.hpp"

namespace esising {
namespace {

using oracle::Matrix;

QuantizedIsing program(std::vector<int> h, std::vector<int> j, int w = 14) {
  QuantizedIsing q;
  q.range_w = w;
  const auto n = h.size();
  q.h = std::move(h);
  q.j = UpperTriangular<int>(n, std::move(j));
  return q;
}

TEST(Binomial, Values) {
  EXPECT_EQ(binomial(20, 6), 38760u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(5, 6), 0u);
  EXPECT_EQ(binomial(200, 100), UINT64_MAX);
}

TEST(Oracle, FourSentenceExample) {
  const EsInstance inst("four", {0.9, 0.8, 0.1, 0.2}, Matrix(4, std::vector<double>(4, 0.0)), 1.0, 2);
  const auto b = solve_exhaustive(inst);
  EXPECT_NEAR(b.obj_max, 1.7, 1e-12);
  EXPECT_EQ(b.argmax.indices(), (std::vector<int>{0, 1}));
  EXPECT_NEAR(b.obj_min, 0.3, 1e-12);
  EXPECT_EQ(b.argmin.indices(), (std::vector<int>{2, 3}));
  EXPECT_EQ(b.evaluated, 6u);
}

TEST(Oracle, TiesPickLexicographicallySmallest) {
  const EsInstance inst("flat", {1, 1, 1, 1}, Matrix(4, std::vector<double>(4, 0.0)), 1.0, 2);
  const auto b = solve_exhaustive(inst);
  EXPECT_EQ(b.argmax.indices(), (std::vector<int>{0, 1}));
  EXPECT_EQ(b.argmin.indices(), (std::vector<int>{0, 1}));
}

TEST(Oracle, TwentyChooseSixIsFast) {
  const auto inst = synthetic_instance("s", 20, 6, 1);
  const auto t0 = std::chrono::steady_clock::now();
  const auto b = solve_exhaustive(inst);
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0);
  EXPECT_EQ(b.evaluated, 38760u);
}

TEST(Oracle, RefusesOversizedInstances) {
  const auto inst = oracle::random_instance(12, 6, 1);
  EXPECT_THROW(solve_exhaustive(inst, 100), OracleTooLarge);
  EXPECT_NO_THROW(solve_exhaustive(inst, binomial(12, 6)));
}

TEST(Oracle, MatchesFullEnumeration) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const int n = 4 + static_cast<int>(seed % 9);
    const auto inst = oracle::random_instance(n, 1 + static_cast<int>(seed % (n - 1)), seed);
    const auto b = solve_exhaustive(inst);
    const auto ref = oracle::feasible_argmax(inst);
    ASSERT_EQ(ref.masks.size(), 1u);
    EXPECT_EQ(oracle::mask_of(b.argmax), ref.masks[0]);
    EXPECT_NEAR(b.obj_max, -ref.value, 1e-12);
  }
}

TEST(Tabu, Examples) {
  const auto ferro = program({0, 0}, {-1});
  const auto r = tabu_search(ferro, TabuParams{}, 1);
  EXPECT_EQ(r.spins[0], r.spins[1]);
  EXPECT_EQ(r.energy, -2.0);

  const auto fields = program({-3, 2}, {0});
  EXPECT_EQ(solve_tabu(fields, TabuParams{}, 5), (Spins{1, -1}));
}

TEST(Tabu, RealFormEnergyIncludesOffset) {
  IsingForm f;
  f.h = {0.5, -0.25};
  f.j = UpperTriangular<double>(2, std::vector<double>{0.75});
  f.offset = 10.0;
  const auto r = tabu_search(f, TabuParams{}, 2);
  EXPECT_DOUBLE_EQ(r.energy, ising_energy(f, r.spins));
  EXPECT_DOUBLE_EQ(r.energy, 10.0 - 0.5 - 0.25 - 1.5);
  EXPECT_EQ(r.spins, (Spins{-1, 1}));
}

TEST(Tabu, FindsGroundStateOnTenSpins) {
  int found = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const auto q = oracle::random_program(10, 7, derive_seed(40, {t}));
    const auto r = tabu_search(q, TabuParams{}, derive_seed(41, {t}));
    EXPECT_EQ(r.energy, ising_energy(q, r.spins));
    found += r.energy == oracle::ground_energy(q);
  }
  EXPECT_GE(found, 95);
}

TEST(Tabu, TraceNonincreasingAndSeedDeterministic) {
  const auto q = oracle::random_program(16, 14, 3);
  const auto a = tabu_search(q, TabuParams{}, 8);
  const auto b = tabu_search(q, TabuParams{}, 8);
  EXPECT_EQ(a.spins, b.spins);
  EXPECT_EQ(a.best_trace, b.best_trace);
  ASSERT_FALSE(a.best_trace.empty());
  EXPECT_TRUE(std::is_sorted(a.best_trace.rbegin(), a.best_trace.rend()));
  EXPECT_EQ(a.best_trace.back(), a.energy);
}

TEST(Tabu, TinyAndDegenerateInputs) {
  EXPECT_TRUE(solve_tabu(program({}, {}), TabuParams{}, 1).empty());
  EXPECT_EQ(solve_tabu(program({4}, {}), TabuParams{}, 1), (Spins{-1}));
  TabuParams zero;
  zero.max_sweeps = 0;
  EXPECT_EQ(tabu_search(program({1, 1}, {0}), zero, 1).spins.size(), 2u);
}

TEST(Oscillator, AlignsStrongFerromagneticPair) {
  int aligned = 0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const auto spins = solve_oscillator(program({0, 0}, {-14}), OscillatorParams{}, s);
    aligned += spins[0] == spins[1];
  }
  EXPECT_GE(aligned, 99);
}

TEST(Oscillator, SingleSpinFollowsField) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    EXPECT_EQ(solve_oscillator(program({-14}, {}), OscillatorParams{}, s), (Spins{1}));
    EXPECT_EQ(solve_oscillator(program({14}, {}), OscillatorParams{}, s), (Spins{-1}));
  }
}

TEST(Oscillator, EnforcesHardwareContract) {
  EXPECT_THROW(solve_oscillator(program({15, 0}, {0}), OscillatorParams{}, 1), InvalidArgument);
  EXPECT_THROW(solve_oscillator(program({0, 0}, {-15}), OscillatorParams{}, 1), InvalidArgument);
  IsingForm f;
  f.h = {1.5, 0};
  f.j = UpperTriangular<double>(2, std::vector<double>{1.0});
  EXPECT_THROW(solve_oscillator(f, 14, OscillatorParams{}, 1), InvalidArgument);
  f.h = {1.0, 0};
  EXPECT_NO_THROW(solve_oscillator(f, 14, OscillatorParams{}, 1));
  f.h = {20.0, 0};
  EXPECT_THROW(solve_oscillator(f, 14, OscillatorParams{}, 1), InvalidArgument);
}

TEST(Oscillator, SeedDeterministic) {
  const auto q = oracle::random_program(12, 14, 9);
  EXPECT_EQ(solve_oscillator(q, OscillatorParams{}, 4), solve_oscillator(q, OscillatorParams{}, 4));
}

TEST(RandomSelection, Examples) {
  EXPECT_EQ(random_selection(3, 3, 7).indices(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(random_selection(20, 6, 11), random_selection(20, 6, 11));
  EXPECT_THROW(random_selection(3, 4, 1), InvalidArgument);
  EXPECT_THROW(random_selection(3, 0, 1), InvalidArgument);
}

TEST(RandomSelection, UniformMarginals) {
  std::vector<int> hits(20, 0);
  constexpr int kDraws = 100000;
  for (int d = 0; d < kDraws; ++d) {
    const auto sel = random_selection(20, 6, derive_seed(12, {static_cast<std::uint64_t>(d)}));
    ASSERT_EQ(sel.count(), 6);
    for (int i : sel.indices()) ++hits[i];
  }
  for (int h : hits) EXPECT_NEAR(static_cast<double>(h) / kDraws, 0.3, 0.01);
}

TEST(Repair, Examples) {
  const Matrix z(3, std::vector<double>(3, 0.0));
  const EsInstance drop("d", {1, 0.5, 0.4}, z, 1.0, 2);
  EXPECT_EQ(repair(drop, Selection::from_indices(3, std::vector<int>{0, 1, 2})).indices(),
            (std::vector<int>{0, 1}));
  const EsInstance add("a", {1, 0, 0.9}, z, 1.0, 2);
  EXPECT_EQ(repair(add, Selection::from_indices(3, std::vector<int>{0})).indices(),
            (std::vector<int>{0, 2}));
  const auto ok = Selection::from_indices(3, std::vector<int>{1, 2});
  EXPECT_EQ(repair(add, ok), ok);
}

TEST(Repair, UsesRedundancyAndLowestIndexTies) {
  Matrix b(3, std::vector<double>(3, 0.0));
  b[0][1] = b[1][0] = 0.5;
  const EsInstance inst("r", {1, 1, 0.5}, b, 1.0, 2);
  // Adding to {0}: gains are 1 - 2*0.5 = 0 for 1 and 0.5 for 2.
  EXPECT_EQ(repair(inst, Selection::from_indices(3, std::vector<int>{0})).indices(),
            (std::vector<int>{0, 2}));
  const EsInstance flat("f", {1, 1, 1}, Matrix(3, std::vector<double>(3, 0.0)), 1.0, 1);
  EXPECT_EQ(repair(flat, Selection(Bits{0, 0, 0})).indices(), (std::vector<int>{0}));
  EXPECT_EQ(repair(flat, Selection(Bits{1, 1, 1})).indices(), (std::vector<int>{2}));
}

TEST(Backend, Names) {
  for (auto b : {Backend::exhaustive, Backend::tabu, Backend::oscillator, Backend::random}) {
    EXPECT_EQ(backend_from_string(to_string(b)), b);
  }
  EXPECT_THROW(backend_from_string("qaoa"), InvalidArgument);
}

}  // namespace
}  // namespace esising
