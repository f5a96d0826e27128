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

// Success-probability estimation and time/energy-to-solution projections
// under a geometric (independent Bernoulli trial per iteration) model.

#include <span>
#include <string>
#include <vector>

namespace esising {

struct BenchConfig {
  double p_target = 0.95;
  double success_threshold = 0.9;     // normalized objective
  double hw_time_per_iter = 200e-6;   // seconds per hardware anneal
  double eval_time_per_iter = 18.9e-6;  // seconds of CPU objective evaluation
  double p_hw = 0.025;                // watts
  double p_cpu = 20.0;                // watts

  void validate() const;
};

// Objective-vs-iteration series. iterations[i] is the iteration count at
// which values[i] was observed; dense() numbers them 1, 2, 3, ...
struct Curve {
  std::vector<int> iterations;
  std::vector<double> values;

  static Curve dense(std::vector<double> values);
};

struct FirstSuccess {
  std::vector<int> k;            // one per curve that reached the threshold
  std::vector<int> excluded;     // indices of curves that never did
  std::vector<std::string> warnings;
};

// k_i = first iteration whose value is >= threshold. Curves that never get
// there are excluded and reported with a warning.
FirstSuccess first_success_iterations(std::span<const Curve> curves, double threshold);

struct SuccessEstimate {
  double k_hat = 0.0;
  double p_success = 0.0;
};

// Maximum-likelihood estimate: k_hat = mean(k), p = 1 / k_hat.
SuccessEstimate estimate_p(std::span<const int> k_list);

// ln(1 - p_target) / ln(1 - p_success), and exactly 1 when p_success == 1.
double tts_multiplier(double p_success, double p_target);

// multiplier * mean(runtimes), seconds.
double compute_tts(double p_success, double p_target, std::span<const double> runtimes);

// tts_hw * p_hw + tts_sw * p_cpu, joules.
double compute_ets(double tts_hw, double tts_sw, const BenchConfig& config);

// Per-iteration cost split between hardware and CPU time.
struct IterationCost {
  double hw_seconds = 0.0;
  double sw_seconds = 0.0;
};

// Hardware anneal plus CPU objective evaluation.
IterationCost hardware_cost(const BenchConfig& config);
// CPU-only solver.
IterationCost software_cost(double seconds_per_iter);

struct TtsEtsReport {
  std::string solver;
  std::vector<int> k_list;
  std::vector<int> excluded;
  std::vector<std::string> warnings;
  double k_hat = 0.0;
  double p_success = 0.0;
  double tts_hw = 0.0;
  double tts_sw = 0.0;
  double tts = 0.0;  // seconds
  double ets = 0.0;  // joules
};

// Full report from best-so-far normalized-objective curves (one per
// benchmark). Throws when no curve reaches the threshold.
TtsEtsReport tts_ets_report(std::string solver, std::span<const Curve> curves,
                            const IterationCost& cost, const BenchConfig& config);

}  // namespace esising
