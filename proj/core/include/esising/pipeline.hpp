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

// Quality-recovery workflows on top of the solvers: iterative refinement
// with per-iteration re-quantization, and windowed decomposition.

#include <cstdint>
#include <optional>
#include <vector>

#include "esising/model.hpp"
#include "esising/quantizer.hpp"
#include "esising/solvers.hpp"

namespace esising {

// (obj - obj_min) / (obj_max - obj_min). Throws on degenerate bounds.
double normalized_objective(double obj, const OracleBounds& bounds);

struct SolverConfig {
  Backend backend = Backend::tabu;
  TabuParams tabu;
  OscillatorParams oscillator;
  std::uint64_t oracle_cap = kDefaultOracleCap;
};

struct IterateConfig {
  Formulation formulation = Formulation::improved;
  RoundingScheme scheme = RoundingScheme::stochastic;
  Precision precision;
  int iterations = 1;
  SolverConfig solver;
  std::optional<double> gamma;  // default_gamma when absent
  std::optional<double> mu_b;   // formulation default when absent
};

struct IterationRecord {
  int iteration = 0;            // 1-based
  std::uint64_t digest = 0;     // of the program that was solved
  SolveOutcome outcome;
  double best_so_far = 0.0;     // best fp_objective over iterations 1..iteration
};

struct IterateResult {
  SolveOutcome best;
  CompiledForm compiled;
  std::vector<IterationRecord> records;
};

// Per iteration k: derive a child seed from (seed, k), quantize the compiled
// form with the configured scheme, solve, repair, and score under full
// precision. The best outcome wins; ties keep the earlier iteration.
//
// The exhaustive backend returns the oracle argmax of the instance itself
// (it is the ground-truth reference), independent of quantization.
IterateResult iterate_solve(const EsInstance& instance, const IterateConfig& config,
                            std::uint64_t seed);

struct StageTrace {
  int stage = 0;
  int cursor = 0;             // position in the survivor list where the window began
  std::vector<int> window;    // original indices, window order
  std::vector<int> selected;  // original indices kept, document order
  int target = 0;
  bool final_stage = false;
  SolveOutcome outcome;       // best outcome of the stage's sub-solve
};

struct DecompositionPlan {
  int p = 0;
  int q = 0;
  int m = 0;
  std::vector<StageTrace> trace;

  int solves() const;
};

struct DecomposeResult {
  Selection selection;
  DecompositionPlan plan;
  double fp_objective = 0.0;
};

// Number of Ising solves decomposition performs for (N, M, P, Q).
int decomposition_solves(int n, int m, int p, int q);

// Summarizes P-sentence windows of the surviving sentences down to Q until at
// most P survive, then solves the remainder down to M. `stage_config` is used
// for every sub-solve (its iterations are per stage). Requires
// M <= Q < P <= N.
DecomposeResult decompose_summarize(const EsInstance& instance, int p, int q,
                                    const IterateConfig& stage_config, std::uint64_t seed);

}  // namespace esising
