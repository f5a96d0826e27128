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

// Selection and Ising backends: the exhaustive oracle, Tabu search, the
// coupled-oscillator hardware surrogate, the random baseline, and greedy
// feasibility repair.

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "esising/model.hpp"
#include "esising/quantizer.hpp"

namespace esising {

enum class Backend { exhaustive, tabu, oscillator, random };

const char* to_string(Backend b);
Backend backend_from_string(const std::string& s);

// ---- Exhaustive oracle -----------------------------------------------------

struct OracleBounds {
  double obj_max = 0.0;
  double obj_min = 0.0;
  Selection argmax;  // lexicographically smallest index set among ties
  Selection argmin;
  std::uint64_t evaluated = 0;
};

inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

// Enumerates every feasible M-subset. Throws OracleTooLarge when C(N, M)
// exceeds `cap`; never samples.
OracleBounds solve_exhaustive(const EsInstance& instance,
                              std::uint64_t cap = kDefaultOracleCap);

// ---- Tabu search -----------------------------------------------------------

struct TabuParams {
  int tenure = 10;
  int max_sweeps = 500;   // one sweep = N single-spin flips
  int stall_limit = 100;  // sweeps without a new best before stopping
  bool random_start = true;  // false: start from all spins -1
};

struct TabuResult {
  Spins spins;
  double energy = 0.0;             // as ising_energy() of the input type
  std::vector<double> best_trace;  // best energy after each sweep
};

// Single-spin-flip Tabu search from a seeded random start. Each step takes
// the steepest admissible flip, breaking ties at random; a tabu flip is
// admissible when it reaches a new best energy. A flipped spin stays tabu
// for t to 1.5 t steps, t = min(tenure, (N - 1) / 2).
TabuResult tabu_search(const IsingForm& form, const TabuParams& params, std::uint64_t seed);
TabuResult tabu_search(const QuantizedIsing& form, const TabuParams& params,
                       std::uint64_t seed);

Spins solve_tabu(const IsingForm& form, const TabuParams& params, std::uint64_t seed);
Spins solve_tabu(const QuantizedIsing& form, const TabuParams& params, std::uint64_t seed);

// ---- Coupled-oscillator surrogate -----------------------------------------

struct OscillatorParams {
  int steps = 2000;
  double dt = 0.05;
  double coupling = 0.0;       // K; <= 0 selects 1 / range_w
  double shil_max = 2.0;       // final second-harmonic injection strength
  double noise = 0.5;          // initial phase-noise amplitude, decays to 0
};

// Phase dynamics of N ring oscillators plus one ancilla carrying the local
// fields. Integrates
//   dphi_i/dt = K sum_j W_ij sin(phi_i - phi_j) - Ks(t) sin(2 phi_i) + noise
// with explicit Euler, which descends the Ising energy at binarized phases.
// Ks ramps linearly from 0 to shil_max. Spins are read as
// sign(cos(phi_i - phi_ancilla)).
Spins solve_oscillator(const QuantizedIsing& form, const OscillatorParams& params,
                       std::uint64_t seed);

// Hardware-contract entry point for real-valued input: every coefficient
// must be an integer within +/-range_w, otherwise InvalidArgument.
Spins solve_oscillator(const IsingForm& form, int range_w, const OscillatorParams& params,
                       std::uint64_t seed);

// ---- Baseline and repair ---------------------------------------------------

// Uniform random m-subset of n. Requires 1 <= m <= n.
Selection random_selection(int n, int m, std::uint64_t seed);

// Greedy repair to exactly M members. Removes the member with the smallest
// marginal contribution mu_i - 2 lambda sum_{j in sel, j != i} beta_ij while
// too large; adds the non-member with the largest marginal gain while too
// small. Ties go to the lowest index. Feasible input is returned unchanged.
Selection repair(const EsInstance& instance, const Selection& sel);

// ---- Outcome ---------------------------------------------------------------

struct SolveOutcome {
  Selection selection;        // always feasible
  double raw_energy = 0.0;    // solver spins on the form that was solved
  double fp_objective = 0.0;  // full-precision objective of `selection`
  bool feasible_before_repair = false;
  bool repaired = false;
  Backend solver = Backend::tabu;
  std::uint64_t seed = 0;
  std::chrono::nanoseconds wall_time{0};
};

}  // namespace esising
