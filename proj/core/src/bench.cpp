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

#include "esising/bench.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "esising/error.hpp"

namespace esising {

void BenchConfig::validate() const {
  if (!(p_target > 0.0 && p_target < 1.0)) throw InvalidArgument("p_target must lie in (0, 1)");
  if (!(hw_time_per_iter > 0.0) || !(eval_time_per_iter > 0.0)) {
    throw InvalidArgument("per-iteration times must be positive");
  }
  if (!(p_hw > 0.0) || !(p_cpu > 0.0)) throw InvalidArgument("power figures must be positive");
}

Curve Curve::dense(std::vector<double> values) {
  Curve c;
  c.iterations.resize(values.size());
  std::iota(c.iterations.begin(), c.iterations.end(), 1);
  c.values = std::move(values);
  return c;
}

FirstSuccess first_success_iterations(std::span<const Curve> curves, double threshold) {
  FirstSuccess out;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const Curve& curve = curves[c];
    if (curve.iterations.size() != curve.values.size()) {
      throw InvalidArgument("curve iteration and value lists differ in length");
    }
    int hit = 0;
    for (std::size_t i = 0; i < curve.values.size(); ++i) {
      if (curve.values[i] >= threshold) {
        hit = curve.iterations[i];
        break;
      }
    }
    if (hit > 0) {
      out.k.push_back(hit);
    } else {
      out.excluded.push_back(static_cast<int>(c));
      std::ostringstream os;
      os << "benchmark " << c << " never reached normalized objective " << threshold
         << "; excluded from the estimate";
      out.warnings.push_back(os.str());
    }
  }
  return out;
}

SuccessEstimate estimate_p(std::span<const int> k_list) {
  if (k_list.empty()) throw InvalidArgument("cannot estimate success probability from no benchmarks");
  double sum = 0.0;
  for (int k : k_list) {
    if (k < 1) throw InvalidArgument("first-success iterations must be >= 1");
    sum += k;
  }
  SuccessEstimate e;
  e.k_hat = sum / static_cast<double>(k_list.size());
  e.p_success = 1.0 / e.k_hat;
  return e;
}

double tts_multiplier(double p_success, double p_target) {
  if (!(p_success > 0.0) || p_success > 1.0) {
    throw InvalidArgument("p_success must lie in (0, 1]");
  }
  if (!(p_target > 0.0 && p_target < 1.0)) throw InvalidArgument("p_target must lie in (0, 1)");
  if (p_success == 1.0) return 1.0;
  return std::log(1.0 - p_target) / std::log(1.0 - p_success);
}

double compute_tts(double p_success, double p_target, std::span<const double> runtimes) {
  if (runtimes.empty()) throw InvalidArgument("compute_tts needs at least one runtime");
  const double mean =
      std::accumulate(runtimes.begin(), runtimes.end(), 0.0) / static_cast<double>(runtimes.size());
  return tts_multiplier(p_success, p_target) * mean;
}

double compute_ets(double tts_hw, double tts_sw, const BenchConfig& config) {
  return tts_hw * config.p_hw + tts_sw * config.p_cpu;
}

IterationCost hardware_cost(const BenchConfig& config) {
  return {config.hw_time_per_iter, config.eval_time_per_iter};
}

IterationCost software_cost(double seconds_per_iter) { return {0.0, seconds_per_iter}; }

TtsEtsReport tts_ets_report(std::string solver, std::span<const Curve> curves,
                            const IterationCost& cost, const BenchConfig& config) {
  config.validate();
  TtsEtsReport r;
  r.solver = std::move(solver);
  FirstSuccess fs = first_success_iterations(curves, config.success_threshold);
  r.k_list = std::move(fs.k);
  r.excluded = std::move(fs.excluded);
  r.warnings = std::move(fs.warnings);
  const SuccessEstimate e = estimate_p(r.k_list);
  r.k_hat = e.k_hat;
  r.p_success = e.p_success;
  const double hw = cost.hw_seconds;
  const double sw = cost.sw_seconds;
  r.tts_hw = hw > 0.0 ? compute_tts(e.p_success, config.p_target, std::span<const double>(&hw, 1)) : 0.0;
  r.tts_sw = sw > 0.0 ? compute_tts(e.p_success, config.p_target, std::span<const double>(&sw, 1)) : 0.0;
  r.tts = r.tts_hw + r.tts_sw;
  r.ets = compute_ets(r.tts_hw, r.tts_sw, config);
  return r;
}

}  // namespace esising
