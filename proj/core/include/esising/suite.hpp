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

#pragma once

// Campaign runner: every (variant, instance, repeat) combination, scored by
// normalized objective against exact oracle bounds.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esising/bench.hpp"
#include "esising/pipeline.hpp"

namespace esising {

struct DecomposeSpec {
  int p = 20;
  int q = 10;
};

struct Variant {
  std::string name;
  Formulation formulation = Formulation::improved;
  RoundingScheme scheme = RoundingScheme::stochastic;
  Precision precision;
  Backend backend = Backend::tabu;
  // Total Ising solves per run. For decomposition the total is split evenly
  // over the stages (at least one iteration each).
  std::vector<int> iteration_counts{1};
  std::optional<DecomposeSpec> decompose;
  // CPU seconds per iteration for TTS projection of software backends.
  // Measured wall time is used when absent.
  std::optional<double> cpu_seconds_per_iter;
};

struct SuiteConfig {
  std::vector<Variant> variants;
  int repeats = 10;
  std::uint64_t seed = 0;
  TabuParams tabu;
  OscillatorParams oscillator;
  std::uint64_t oracle_cap = kDefaultOracleCap;
  int threads = 1;
};

struct Stats {
  double mean = 0.0;
  double median = 0.0;
  double min = 0.0;
  double max = 0.0;
};

Stats summarize(std::span<const double> values);

struct CountResult {
  int iterations = 0;
  Stats stats;                          // over per-instance means
  std::vector<double> instance_means;   // mean over repeats, per instance
};

struct VariantResult {
  Variant variant;
  std::vector<CountResult> by_count;
  // Per instance: mean over repeats of the best-so-far normalized objective.
  std::vector<Curve> curves;
  double mean_seconds_per_iter = 0.0;   // measured
};

struct SkippedInstance {
  std::string name;
  std::string reason;
};

struct SuiteResult {
  std::vector<std::string> instances;   // evaluated, in input order
  std::vector<SkippedInstance> skipped;
  std::vector<VariantResult> variants;
};

// Seeds depend on (config.seed, instance, repeat) only, so every variant sees
// the same random streams and results do not depend on thread scheduling.
SuiteResult run_variant_suite(std::span<const EsInstance> instances, const SuiteConfig& config);

// Number of iterations per stage for a decomposition run with `total`
// Ising solves.
int iterations_per_stage(int total, int solves);

}  // namespace esising
