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

#include "esising/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "esising/error.hpp"
#include "esising/synthetic.hpp"

namespace esising {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + " is not valid JSON: " + e.what());
  }
}

template <typename T>
T get_field(const json& obj, const char* key, const char* context) {
  if (!obj.contains(key)) throw ParseError(std::string(context) + ": missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string(context) + ": field '" + key + "' has the wrong type");
  }
}

template <typename T>
T get_or(const json& obj, const char* key, T fallback, const char* context) {
  if (!obj.contains(key) || obj.at(key).is_null()) return fallback;
  return get_field<T>(obj, key, context);
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const char* context) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) throw ParseError(std::string(context) + ": unknown field '" + key + "'");
  }
}

std::vector<std::string> split_ws(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(const std::string& tok, const char* what) {
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(tok.c_str(), &end, 10);
  if (errno != 0 || end == tok.c_str() || *end != '\0') {
    throw ParseError(std::string("program file: ") + what + " '" + tok + "' is not an integer");
  }
  return v;
}

Precision parse_precision(const json& v, const char* context) {
  const bool has_range = v.contains("range");
  const bool has_bits = v.contains("bits");
  const bool has_fp = v.contains("precision");
  if (has_range + has_bits + has_fp > 1) {
    throw ParseError(std::string(context) + ": give only one of 'range', 'bits', 'precision'");
  }
  if (has_range) return Precision::range(get_field<int>(v, "range", context));
  if (has_bits) return Precision::bits(get_field<int>(v, "bits", context));
  if (has_fp) {
    const auto p = get_field<std::string>(v, "precision", context);
    if (p != "fp") throw ParseError(std::string(context) + ": precision must be \"fp\"");
    return Precision::full_precision();
  }
  return Precision::range(kNativeRange);
}

}  // namespace

// ---- Instances -------------------------------------------------------------

EsInstance parse_instance(std::string_view json_text) {
  const json doc = parse_json(json_text, "instance file");
  constexpr const char* ctx = "instance file";
  if (!doc.is_object()) throw ParseError("instance file: top level must be an object");
  const int version = get_field<int>(doc, "schema_version", ctx);
  if (version != kInstanceSchemaVersion) {
    throw ParseError("instance file: unsupported schema_version " + std::to_string(version));
  }
  auto name = get_or<std::string>(doc, "name", "", ctx);
  auto sentences = get_or<std::vector<std::string>>(doc, "sentences", {}, ctx);
  auto mu = get_field<std::vector<double>>(doc, "mu", ctx);
  auto beta = get_field<std::vector<std::vector<double>>>(doc, "beta", ctx);
  const double lambda = get_or<double>(doc, "lambda", 1.0, ctx);
  const int m = get_field<int>(doc, "summary_length", ctx);
  return EsInstance(std::move(name), std::move(mu), beta, lambda, m, std::move(sentences));
}

EsInstance load_instance(const std::filesystem::path& path) {
  return parse_instance(read_text_file(path));
}

std::string instance_to_json(const EsInstance& instance) {
  json doc;
  doc["schema_version"] = kInstanceSchemaVersion;
  doc["name"] = instance.name();
  if (instance.has_sentences()) doc["sentences"] = instance.sentences();
  doc["mu"] = std::vector<double>(instance.mu().begin(), instance.mu().end());
  json beta = json::array();
  for (int i = 0; i < instance.size(); ++i) {
    json row = json::array();
    for (int j = 0; j < instance.size(); ++j) row.push_back(instance.beta(i, j));
    beta.push_back(std::move(row));
  }
  doc["beta"] = std::move(beta);
  doc["lambda"] = instance.lambda();
  doc["summary_length"] = instance.summary_length();
  return doc.dump(2) + "\n";
}

// ---- Programs --------------------------------------------------------------

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_program(const QuantizedIsing& program) {
  std::string out;
  out += std::to_string(program.size()) + " " + std::to_string(program.range_w) + " " +
         format_real(program.scale) + " " + to_string(program.scheme) + " ";
  out += program.seed ? std::to_string(*program.seed) : std::string("-");
  out += "\n";
  for (std::size_t i = 0; i < program.h.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(program.h[i]);
  }
  out += "\n";
  const auto j = program.j.values();
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(j[i]);
  }
  out += "\n";
  return out;
}

QuantizedIsing parse_program(std::string_view text) {
  const auto tokens = split_ws(text);
  if (tokens.size() < 5) throw ParseError("program file: header must be 'N RANGE_W SCALE SCHEME SEED'");
  QuantizedIsing q;
  const long long n = parse_int(tokens[0], "N");
  if (n < 1) throw ParseError("program file: N must be >= 1");
  const long long range_w = parse_int(tokens[1], "RANGE_W");
  if (range_w < 1) throw ParseError("program file: RANGE_W must be >= 1");
  q.range_w = static_cast<int>(range_w);
  char* end = nullptr;
  q.scale = std::strtod(tokens[2].c_str(), &end);
  if (end == tokens[2].c_str() || *end != '\0' || !(q.scale > 0.0)) {
    throw ParseError("program file: SCALE '" + tokens[2] + "' is not a positive real");
  }
  try {
    q.scheme = scheme_from_string(tokens[3]);
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("program file: ") + e.what());
  }
  if (tokens[4] == "-") {
    if (q.scheme != RoundingScheme::deterministic) {
      throw ParseError("program file: seeded schemes need a SEED");
    }
  } else {
    if (tokens[4].empty() || tokens[4][0] == '-' || tokens[4][0] == '+') {
      throw ParseError("program file: SEED '" + tokens[4] + "' is not an unsigned integer");
    }
    errno = 0;
    const unsigned long long seed = std::strtoull(tokens[4].c_str(), &end, 10);
    if (errno != 0 || *end != '\0') {
      throw ParseError("program file: SEED '" + tokens[4] + "' is not an unsigned integer");
    }
    q.seed = seed;
  }

  const auto un = static_cast<std::size_t>(n);
  const std::size_t pairs = UpperTriangular<int>::pair_count(un);
  if (tokens.size() != 5 + un + pairs) {
    std::ostringstream os;
    os << "program file: expected " << un << " fields and " << pairs << " couplings, found "
       << tokens.size() - 5 << " values";
    throw ParseError(os.str());
  }
  auto checked = [&](const std::string& tok, const char* what) {
    const long long v = parse_int(tok, what);
    if (v < -range_w || v > range_w) {
      throw ParseError(std::string("program file: ") + what + " " + tok + " is outside +/-RANGE_W");
    }
    return static_cast<int>(v);
  };
  for (std::size_t i = 0; i < un; ++i) q.h.push_back(checked(tokens[5 + i], "field"));
  std::vector<int> packed;
  for (std::size_t i = 0; i < pairs; ++i) packed.push_back(checked(tokens[5 + un + i], "coupling"));
  q.j = UpperTriangular<int>(un, std::move(packed));
  return q;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
}

// ---- Campaigns -------------------------------------------------------------

Campaign parse_campaign(std::string_view json_text, const std::filesystem::path& base_dir) {
  const json doc = parse_json(json_text, "campaign config");
  constexpr const char* ctx = "campaign config";
  if (!doc.is_object()) throw ParseError("campaign config: top level must be an object");
  reject_unknown(doc,
                 {"seed", "repeats", "threads", "oracle_cap", "instances", "synthetic", "tabu",
                  "oscillator", "bench", "variants"},
                 ctx);

  Campaign c;
  c.suite.seed = get_or<std::uint64_t>(doc, "seed", 0, ctx);
  c.suite.repeats = get_or<int>(doc, "repeats", 10, ctx);
  c.suite.threads = get_or<int>(doc, "threads", 1, ctx);
  c.suite.oracle_cap = get_or<std::uint64_t>(doc, "oracle_cap", kDefaultOracleCap, ctx);

  for (const auto& p : get_or<std::vector<std::string>>(doc, "instances", {}, ctx)) {
    std::filesystem::path path(p);
    if (path.is_relative()) path = base_dir / path;
    c.instances.push_back(load_instance(path));
  }
  if (doc.contains("synthetic")) {
    const json& s = doc.at("synthetic");
    constexpr const char* sctx = "campaign config: synthetic";
    reject_unknown(s,
                   {"count", "n", "m", "seed", "dim", "lambda", "loading_min", "loading_max",
                    "subtopics", "subtopic_weight"},
                   sctx);
    SyntheticParams params;
    params.dim = get_or<int>(s, "dim", params.dim, sctx);
    params.lambda = get_or<double>(s, "lambda", params.lambda, sctx);
    params.loading_min = get_or<double>(s, "loading_min", params.loading_min, sctx);
    params.loading_max = get_or<double>(s, "loading_max", params.loading_max, sctx);
    params.subtopics = get_or<int>(s, "subtopics", params.subtopics, sctx);
    params.subtopic_weight = get_or<double>(s, "subtopic_weight", params.subtopic_weight, sctx);
    auto suite = synthetic_suite(get_field<int>(s, "count", sctx), get_field<int>(s, "n", sctx),
                                 get_field<int>(s, "m", sctx),
                                 get_or<std::uint64_t>(s, "seed", 0, sctx), params);
    for (auto& inst : suite) c.instances.push_back(std::move(inst));
  }
  if (c.instances.empty()) throw ParseError("campaign config: no instances (give 'instances' or 'synthetic')");

  if (doc.contains("tabu")) {
    const json& t = doc.at("tabu");
    constexpr const char* tctx = "campaign config: tabu";
    reject_unknown(t, {"tenure", "max_sweeps", "stall_limit", "random_start"}, tctx);
    c.suite.tabu.tenure = get_or<int>(t, "tenure", c.suite.tabu.tenure, tctx);
    c.suite.tabu.max_sweeps = get_or<int>(t, "max_sweeps", c.suite.tabu.max_sweeps, tctx);
    c.suite.tabu.stall_limit = get_or<int>(t, "stall_limit", c.suite.tabu.stall_limit, tctx);
    c.suite.tabu.random_start = get_or<bool>(t, "random_start", c.suite.tabu.random_start, tctx);
  }
  if (doc.contains("oscillator")) {
    const json& o = doc.at("oscillator");
    constexpr const char* octx = "campaign config: oscillator";
    reject_unknown(o, {"steps", "dt", "coupling", "shil_max", "noise"}, octx);
    auto& op = c.suite.oscillator;
    op.steps = get_or<int>(o, "steps", op.steps, octx);
    op.dt = get_or<double>(o, "dt", op.dt, octx);
    op.coupling = get_or<double>(o, "coupling", op.coupling, octx);
    op.shil_max = get_or<double>(o, "shil_max", op.shil_max, octx);
    op.noise = get_or<double>(o, "noise", op.noise, octx);
  }
  if (doc.contains("bench")) {
    const json& b = doc.at("bench");
    constexpr const char* bctx = "campaign config: bench";
    reject_unknown(b,
                   {"p_target", "success_threshold", "hw_time_per_iter", "eval_time_per_iter",
                    "p_hw", "p_cpu"},
                   bctx);
    auto& bc = c.bench;
    bc.p_target = get_or<double>(b, "p_target", bc.p_target, bctx);
    bc.success_threshold = get_or<double>(b, "success_threshold", bc.success_threshold, bctx);
    bc.hw_time_per_iter = get_or<double>(b, "hw_time_per_iter", bc.hw_time_per_iter, bctx);
    bc.eval_time_per_iter = get_or<double>(b, "eval_time_per_iter", bc.eval_time_per_iter, bctx);
    bc.p_hw = get_or<double>(b, "p_hw", bc.p_hw, bctx);
    bc.p_cpu = get_or<double>(b, "p_cpu", bc.p_cpu, bctx);
  }
  try {
    c.bench.validate();
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("campaign config: bench: ") + e.what());
  }

  if (!doc.contains("variants") || !doc.at("variants").is_array() || doc.at("variants").empty()) {
    throw ParseError("campaign config: 'variants' must be a non-empty array");
  }
  for (const json& v : doc.at("variants")) {
    constexpr const char* vctx = "campaign config: variant";
    reject_unknown(v,
                   {"name", "formulation", "scheme", "range", "bits", "precision", "backend",
                    "iterations", "decompose", "cpu_seconds_per_iter"},
                   vctx);
    Variant var;
    try {
      var.name = get_field<std::string>(v, "name", vctx);
      var.formulation = formulation_from_string(get_or<std::string>(v, "formulation", "improved", vctx));
      var.scheme = scheme_from_string(get_or<std::string>(v, "scheme", "stochastic", vctx));
      var.backend = backend_from_string(get_or<std::string>(v, "backend", "tabu", vctx));
      var.precision = parse_precision(v, vctx);
    } catch (const InvalidArgument& e) {
      throw ParseError(std::string(vctx) + ": " + e.what());
    }
    if (v.contains("iterations")) {
      const json& it = v.at("iterations");
      var.iteration_counts = it.is_array() ? get_field<std::vector<int>>(v, "iterations", vctx)
                                           : std::vector<int>{get_field<int>(v, "iterations", vctx)};
    }
    if (v.contains("decompose")) {
      const json& d = v.at("decompose");
      reject_unknown(d, {"p", "q"}, "campaign config: decompose");
      var.decompose = DecomposeSpec{get_field<int>(d, "p", "decompose"), get_field<int>(d, "q", "decompose")};
    }
    if (v.contains("cpu_seconds_per_iter")) {
      var.cpu_seconds_per_iter = get_field<double>(v, "cpu_seconds_per_iter", vctx);
    }
    c.suite.variants.push_back(std::move(var));
  }
  return c;
}

Campaign load_campaign(const std::filesystem::path& path) {
  return parse_campaign(read_text_file(path), path.parent_path());
}

// ---- Reports ---------------------------------------------------------------

json to_json(const Selection& sel) { return sel.indices(); }

json to_json(const OracleBounds& bounds) {
  return json{{"obj_max", bounds.obj_max},
              {"obj_min", bounds.obj_min},
              {"argmax", to_json(bounds.argmax)},
              {"argmin", to_json(bounds.argmin)},
              {"evaluated", bounds.evaluated}};
}

json to_json(const SolveOutcome& o, bool with_timing) {
  json j{{"selection", to_json(o.selection)},
         {"raw_energy", o.raw_energy},
         {"fp_objective", o.fp_objective},
         {"feasible_before_repair", o.feasible_before_repair},
         {"repaired", o.repaired},
         {"solver", to_string(o.solver)},
         {"seed", o.seed}};
  if (with_timing) j["wall_time_s"] = std::chrono::duration<double>(o.wall_time).count();
  return j;
}

json coefficient_stats(const IsingForm& form) {
  auto stats = [](std::span<const double> v) {
    if (v.empty()) return json{{"median", nullptr}, {"min", nullptr}, {"max", nullptr}};
    return json{{"median", median(v)},
                {"min", *std::min_element(v.begin(), v.end())},
                {"max", *std::max_element(v.begin(), v.end())}};
  };
  return json{{"h", stats(form.h)}, {"j", stats(form.j.values())}};
}

json to_json(const CompiledForm& c) {
  const auto qj = std::vector<double>(c.qubo.quad.values().begin(), c.qubo.quad.values().end());
  const auto ij = std::vector<double>(c.ising.j.values().begin(), c.ising.j.values().end());
  return json{{"formulation", to_string(c.formulation)},
              {"gamma", c.gamma},
              {"mu_b", c.mu_b},
              {"qubo", {{"linear", c.qubo.linear}, {"quad", qj}, {"offset", c.qubo.offset}}},
              {"ising", {{"h", c.ising.h}, {"j", ij}, {"offset", c.ising.offset}}},
              {"stats", coefficient_stats(c.ising)}};
}

json to_json(const IterateResult& r, bool with_timing) {
  json iters = json::array();
  for (const auto& rec : r.records) {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016" PRIx64, rec.digest);
    iters.push_back({{"iteration", rec.iteration},
                     {"digest", hex},
                     {"fp_objective", rec.outcome.fp_objective},
                     {"raw_energy", rec.outcome.raw_energy},
                     {"repaired", rec.outcome.repaired},
                     {"best_so_far", rec.best_so_far}});
  }
  return json{{"best", to_json(r.best, with_timing)},
              {"gamma", r.compiled.gamma},
              {"mu_b", r.compiled.mu_b},
              {"iterations", std::move(iters)}};
}

json to_json(const DecompositionPlan& plan, bool with_timing) {
  json stages = json::array();
  for (const auto& s : plan.trace) {
    stages.push_back({{"stage", s.stage},
                      {"cursor", s.cursor},
                      {"window", s.window},
                      {"selected", s.selected},
                      {"target", s.target},
                      {"final", s.final_stage},
                      {"outcome", to_json(s.outcome, with_timing)}});
  }
  return json{{"p", plan.p}, {"q", plan.q}, {"m", plan.m}, {"solves", plan.solves()}, {"stages", std::move(stages)}};
}

json to_json(const TtsEtsReport& r) {
  return json{{"solver", r.solver},
              {"k", r.k_list},
              {"excluded", r.excluded},
              {"warnings", r.warnings},
              {"k_hat", r.k_hat},
              {"p_success", r.p_success},
              {"tts_hw_s", r.tts_hw},
              {"tts_sw_s", r.tts_sw},
              {"tts_s", r.tts},
              {"ets_j", r.ets}};
}

json to_json(const Variant& v) {
  json j{{"name", v.name},
         {"formulation", to_string(v.formulation)},
         {"scheme", to_string(v.scheme)},
         {"precision", to_string(v.precision)},
         {"backend", to_string(v.backend)},
         {"iterations", v.iteration_counts}};
  if (v.decompose) j["decompose"] = {{"p", v.decompose->p}, {"q", v.decompose->q}};
  return j;
}

std::string curves_csv(const SuiteResult& result) {
  std::ostringstream os;
  os << "variant,instance,iterations,value\n";
  for (const auto& vr : result.variants) {
    for (std::size_t k = 0; k < vr.curves.size(); ++k) {
      const Curve& c = vr.curves[k];
      for (std::size_t i = 0; i < c.values.size(); ++i) {
        os << vr.variant.name << ',' << result.instances[k] << ',' << c.iterations[i] << ','
           << format_real(c.values[i]) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace esising
