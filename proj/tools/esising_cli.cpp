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


// esising: compile, quantize, solve and benchmark extractive-summarization
// Ising instances.

#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "esising/esising.hpp"

namespace {

using nlohmann::json;

struct Common {
  std::string instance;
  bool improved = false;
  std::optional<double> gamma;
  std::optional<double> mu_b;
};

struct PrecisionOpts {
  std::optional<int> range;
  std::optional<int> bits;
  bool fp = false;

  esising::Precision resolve(esising::Precision fallback) const {
    if (fp) return esising::Precision::full_precision();
    if (bits) return esising::Precision::bits(*bits);
    if (range) return esising::Precision::range(*range);
    return fallback;
  }
};

struct SolveOpts {
  std::string backend = "tabu";
  std::string scheme = "stochastic";
  int iters = 1;
  std::uint64_t seed = 0;
  bool timing = false;
  std::uint64_t oracle_cap = esising::kDefaultOracleCap;
  esising::TabuParams tabu;
  esising::OscillatorParams oscillator;
};

void emit(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    esising::write_text_file(out_path, text);
  }
}

void add_instance(CLI::App* cmd, Common& c) {
  cmd->add_option("instance", c.instance, "Instance file (JSON)")->required();
}

void add_formulation(CLI::App* cmd, Common& c) {
  cmd->add_flag("--improved", c.improved, "Use the bias-balanced formulation");
  cmd->add_option("--gamma", c.gamma, "Penalty weight (default: automatic)");
  cmd->add_option("--mu-b", c.mu_b, "Relevance bias (default: 0, or automatic with --improved)");
}

void add_precision(CLI::App* cmd, PrecisionOpts& p) {
  auto* r = cmd->add_option("--range", p.range, "Integer coefficient range +/-W")
                ->check(CLI::Range(1, 1 << 20));
  auto* b = cmd->add_option("--bits", p.bits, "Signed bit width")->check(CLI::Range(3, 16));
  auto* f = cmd->add_flag("--fp", p.fp, "Solve at full floating-point precision");
  r->excludes(b)->excludes(f);
  b->excludes(f);
}

void add_solver(CLI::App* cmd, SolveOpts& s) {
  cmd->add_option("--backend", s.backend, "exhaustive | tabu | oscillator | random")
      ->capture_default_str();
  cmd->add_option("--scheme", s.scheme, "deterministic | half | stochastic")->capture_default_str();
  cmd->add_option("--seed", s.seed, "Root seed")->capture_default_str();
  cmd->add_flag("--timing", s.timing, "Include wall-clock times in the output");
  cmd->add_option("--oracle-cap", s.oracle_cap, "Largest C(N, M) the oracle will enumerate")
      ->capture_default_str();
  cmd->add_option("--tenure", s.tabu.tenure, "Tabu tenure")->capture_default_str();
  cmd->add_option("--sweeps", s.tabu.max_sweeps, "Tabu sweep limit")->capture_default_str();
  cmd->add_option("--osc-steps", s.oscillator.steps, "Oscillator integration steps")
      ->capture_default_str();
}

esising::IterateConfig iterate_config(const Common& c, const PrecisionOpts& p, const SolveOpts& s,
                                      int iterations) {
  esising::IterateConfig cfg;
  cfg.formulation = c.improved ? esising::Formulation::improved : esising::Formulation::original;
  cfg.scheme = esising::scheme_from_string(s.scheme);
  cfg.precision = p.resolve(esising::Precision::range(esising::kNativeRange));
  cfg.iterations = iterations;
  cfg.solver.backend = esising::backend_from_string(s.backend);
  cfg.solver.tabu = s.tabu;
  cfg.solver.oscillator = s.oscillator;
  cfg.solver.oracle_cap = s.oracle_cap;
  cfg.gamma = c.gamma;
  cfg.mu_b = c.mu_b;
  return cfg;
}

json summary_json(const esising::EsInstance& inst, const esising::Selection& sel,
                  const esising::OracleBounds& bounds, double objective) {
  json j{{"instance", inst.name()},
         {"n", inst.size()},
         {"m", inst.summary_length()},
         {"selection", esising::to_json(sel)},
         {"fp_objective", objective},
         {"oracle", esising::to_json(bounds)},
         {"normalized_objective", esising::normalized_objective(objective, bounds)}};
  if (inst.has_sentences()) {
    json texts = json::array();
    for (int i : sel.indices()) texts.push_back(inst.sentences()[static_cast<std::size_t>(i)]);
    j["sentences"] = std::move(texts);
  }
  return j;
}

int run_formulate(const Common& c, const std::string& out) {
  const auto inst = esising::load_instance(c.instance);
  const auto form = esising::Formulation{c.improved ? esising::Formulation::improved
                                                    : esising::Formulation::original};
  const auto compiled = esising::compile(inst, form, c.gamma, c.mu_b);
  json doc = esising::to_json(compiled);
  doc["instance"] = inst.name();
  emit(doc, out);
  return 0;
}

int run_quantize(const Common& c, const PrecisionOpts& p, const std::string& scheme,
                 std::uint64_t seed, const std::string& out) {
  if (p.fp) throw esising::InvalidArgument("quantize needs --range or --bits, not --fp");
  const auto inst = esising::load_instance(c.instance);
  const auto form = c.improved ? esising::Formulation::improved : esising::Formulation::original;
  const auto compiled = esising::compile(inst, form, c.gamma, c.mu_b);
  const auto precision = p.resolve(esising::Precision::range(esising::kNativeRange));
  const auto program = esising::quantize(compiled.ising, precision.range_w,
                                         esising::scheme_from_string(scheme), seed);
  const std::string text = esising::format_program(program);
  if (out.empty()) {
    std::cout << text;
  } else {
    esising::write_text_file(out, text);
  }
  return 0;
}

int run_oracle(const std::string& path, std::uint64_t cap, const std::string& out) {
  const auto inst = esising::load_instance(path);
  json doc = esising::to_json(esising::solve_exhaustive(inst, cap));
  doc["instance"] = inst.name();
  emit(doc, out);
  return 0;
}

int run_solve(const Common& c, const PrecisionOpts& p, const SolveOpts& s, const std::string& out) {
  const auto inst = esising::load_instance(c.instance);
  const auto bounds = esising::solve_exhaustive(inst, s.oracle_cap);
  const auto cfg = iterate_config(c, p, s, s.iters);
  const auto result = esising::iterate_solve(inst, cfg, s.seed);
  json doc = summary_json(inst, result.best.selection, bounds, result.best.fp_objective);
  doc["formulation"] = esising::to_string(cfg.formulation);
  doc["precision"] = esising::to_string(cfg.precision);
  doc["scheme"] = esising::to_string(cfg.scheme);
  doc["result"] = esising::to_json(result, s.timing);
  emit(doc, out);
  return 0;
}

int run_decompose(const Common& c, const PrecisionOpts& pr, const SolveOpts& s, int p, int q,
                  int iters_per_stage, const std::string& out) {
  const auto inst = esising::load_instance(c.instance);
  const auto bounds = esising::solve_exhaustive(inst, s.oracle_cap);
  const auto cfg = iterate_config(c, pr, s, iters_per_stage);
  const auto result = esising::decompose_summarize(inst, p, q, cfg, s.seed);
  json doc = summary_json(inst, result.selection, bounds, result.fp_objective);
  doc["plan"] = esising::to_json(result.plan, s.timing);
  emit(doc, out);
  return 0;
}

std::optional<esising::IterationCost> variant_cost(const esising::VariantResult& vr,
                                                   const esising::BenchConfig& bench, bool timing,
                                                   std::string& why) {
  if (vr.variant.backend == esising::Backend::oscillator) return esising::hardware_cost(bench);
  if (vr.variant.cpu_seconds_per_iter) {
    return esising::software_cost(*vr.variant.cpu_seconds_per_iter);
  }
  if (timing) return esising::software_cost(vr.mean_seconds_per_iter);
  why = "software variant needs cpu_seconds_per_iter or --timing";
  return std::nullopt;
}

int run_bench(std::string config_path, const std::string& curves_path, std::optional<int> threads,
              bool timing, const std::string& out) {
  if (config_path.empty()) {
    if (const char* env = std::getenv("ESISING_CAMPAIGN")) config_path = env;
  }
  if (config_path.empty()) {
    throw esising::InvalidArgument("no campaign file given and ESISING_CAMPAIGN is not set");
  }
  auto campaign = esising::load_campaign(config_path);
  if (threads) campaign.suite.threads = *threads;
  const auto result = esising::run_variant_suite(campaign.instances, campaign.suite);

  json variants = json::array();
  for (const auto& vr : result.variants) {
    json counts = json::array();
    for (const auto& cr : vr.by_count) {
      counts.push_back({{"iterations", cr.iterations},
                        {"mean", cr.stats.mean},
                        {"median", cr.stats.median},
                        {"min", cr.stats.min},
                        {"max", cr.stats.max},
                        {"instance_means", cr.instance_means}});
    }
    json entry = esising::to_json(vr.variant);
    entry["results"] = std::move(counts);
    if (timing) entry["seconds_per_iter"] = vr.mean_seconds_per_iter;

    std::string why;
    if (auto cost = variant_cost(vr, campaign.bench, timing, why)) {
      try {
        entry["tts_ets"] =
            esising::to_json(esising::tts_ets_report(vr.variant.name, vr.curves, *cost, campaign.bench));
      } catch (const esising::Error& e) {
        why = e.what();
      }
    }
    if (!why.empty()) {
      entry["tts_ets"] = nullptr;
      entry["tts_ets_note"] = why;
      std::cerr << "esising: warning: " << vr.variant.name << ": " << why << "\n";
    }
    variants.push_back(std::move(entry));
  }

  json skipped = json::array();
  for (const auto& s : result.skipped) skipped.push_back({{"name", s.name}, {"reason", s.reason}});

  json doc{{"instances", result.instances},
           {"skipped", std::move(skipped)},
           {"repeats", campaign.suite.repeats},
           {"seed", campaign.suite.seed},
           {"variants", std::move(variants)}};
  if (!curves_path.empty()) esising::write_text_file(curves_path, esising::curves_csv(result));
  emit(doc, out);
  return 0;
}

const char* error_kind(const std::exception& e) {
  if (dynamic_cast<const esising::InvalidInstance*>(&e)) return "invalid instance";
  if (dynamic_cast<const esising::OracleTooLarge*>(&e)) return "oracle too large";
  if (dynamic_cast<const esising::ParseError*>(&e)) return "parse error";
  if (dynamic_cast<const esising::InvalidArgument*>(&e)) return "invalid argument";
  if (dynamic_cast<const esising::Error*>(&e)) return "error";
  return "internal error";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive summarization on integer Ising hardware"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("esising ") + ESISING_VERSION);

  std::string out;
  Common common;
  PrecisionOpts precision;
  SolveOpts solve;

  auto* formulate = app.add_subcommand("formulate", "Print the QUBO and Ising forms");
  add_instance(formulate, common);
  add_formulation(formulate, common);
  formulate->add_option("-o,--output", out, "Write JSON here instead of stdout");

  std::string q_scheme = "deterministic";
  std::uint64_t q_seed = 0;
  auto* quantize = app.add_subcommand("quantize", "Write an integer program file");
  add_instance(quantize, common);
  add_formulation(quantize, common);
  add_precision(quantize, precision);
  quantize->add_option("--scheme", q_scheme, "deterministic | half | stochastic")
      ->capture_default_str();
  quantize->add_option("--seed", q_seed, "Rounding seed")->capture_default_str();
  quantize->add_option("-o,--output", out, "Write the program here instead of stdout");

  std::uint64_t cap = esising::kDefaultOracleCap;
  auto* oracle = app.add_subcommand("oracle", "Exact optimum and worst feasible summary");
  add_instance(oracle, common);
  oracle->add_option("--cap", cap, "Largest C(N, M) to enumerate")->capture_default_str();
  oracle->add_option("-o,--output", out, "Write JSON here instead of stdout");

  auto* solve_cmd = app.add_subcommand("solve", "Iterated quantize-and-solve");
  add_instance(solve_cmd, common);
  add_formulation(solve_cmd, common);
  add_precision(solve_cmd, precision);
  add_solver(solve_cmd, solve);
  solve_cmd->add_option("--iters", solve.iters, "Iterations")->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve_cmd->add_option("-o,--output", out, "Write JSON here instead of stdout");

  int p = 20;
  int q = 10;
  int per_stage = 1;
  auto* decompose = app.add_subcommand("decompose", "Windowed multi-stage summarization");
  add_instance(decompose, common);
  add_formulation(decompose, common);
  add_precision(decompose, precision);
  add_solver(decompose, solve);
  decompose->add_option("--p", p, "Window length")->capture_default_str();
  decompose->add_option("--q", q, "Sentences kept per window")->capture_default_str();
  decompose->add_option("--iters-per-stage", per_stage, "Iterations per stage")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decompose->add_option("-o,--output", out, "Write JSON here instead of stdout");

  std::string campaign;
  std::string curves;
  std::optional<int> threads;
  bool bench_timing = false;
  auto* bench = app.add_subcommand("bench", "Run a campaign and report TTS/ETS");
  bench->add_option("campaign", campaign, "Campaign file (default: $ESISING_CAMPAIGN)");
  bench->add_option("--emit-curves", curves, "Write iteration/objective series as CSV");
  bench->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  bench->add_flag("--timing", bench_timing, "Use and report measured solve times");
  bench->add_option("-o,--output", out, "Write JSON here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*formulate) return run_formulate(common, out);
    if (*quantize) return run_quantize(common, precision, q_scheme, q_seed, out);
    if (*oracle) return run_oracle(common.instance, cap, out);
    if (*solve_cmd) return run_solve(common, precision, solve, out);
    if (*decompose) {
      return run_decompose(common, precision, solve, p, q, per_stage, out);
    }
    if (*bench) return run_bench(campaign, curves, threads, bench_timing, out);
  } catch (const std::exception& e) {
    std::cerr << "esising: " << error_kind(e) << ": " << e.what() << "\n";
    return 1;
  }
  return 0;
}
