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

// File formats and report serialization.
//
// Instance files are JSON (schema_version 1) with the full symmetric beta.
// Quantized program files are plain text:
//
//   N RANGE_W SCALE SCHEME SEED
//   h_0 h_1 ... h_{N-1}
//   j_01 j_02 ... j_{N-2,N-1}
//
// SCALE is printed with 17 significant digits, SEED is "-" for
// deterministic rounding, and j is the row-major upper triangle.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "esising/bench.hpp"
#include "esising/model.hpp"
#include "esising/pipeline.hpp"
#include "esising/quantizer.hpp"
#include "esising/suite.hpp"

namespace esising {

inline constexpr int kInstanceSchemaVersion = 1;

EsInstance parse_instance(std::string_view json_text);
EsInstance load_instance(const std::filesystem::path& path);
std::string instance_to_json(const EsInstance& instance);

std::string format_program(const QuantizedIsing& program);
QuantizedIsing parse_program(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
// Writes to a sibling temporary file, then renames over `path`.
void write_text_file(const std::filesystem::path& path, std::string_view content);

// 17 significant digits; parses back to the same double.
std::string format_real(double v);

// ---- Campaign configuration ------------------------------------------------

struct Campaign {
  std::vector<EsInstance> instances;
  SuiteConfig suite;
  BenchConfig bench;
};

// Relative instance paths resolve against `base_dir`.
Campaign parse_campaign(std::string_view json_text, const std::filesystem::path& base_dir);
Campaign load_campaign(const std::filesystem::path& path);

// ---- Reports ---------------------------------------------------------------

nlohmann::json to_json(const Selection& sel);
nlohmann::json to_json(const OracleBounds& bounds);
nlohmann::json to_json(const SolveOutcome& outcome, bool with_timing);
nlohmann::json to_json(const CompiledForm& compiled);
nlohmann::json to_json(const IterateResult& result, bool with_timing);
nlohmann::json to_json(const DecompositionPlan& plan, bool with_timing);
nlohmann::json to_json(const TtsEtsReport& report);
nlohmann::json to_json(const Variant& variant);

// Median/min/max of h and J, the diagnostic for field/coupling imbalance.
nlohmann::json coefficient_stats(const IsingForm& form);

// variant,instance,iterations,value rows for plotting.
std::string curves_csv(const SuiteResult& result);

}  // namespace esising
