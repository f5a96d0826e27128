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

// Integer quantization of Ising forms for fixed-range coupling hardware.
//
// A single joint scale maps the largest |h| or |J| onto the hardware range;
// rounding then produces integers within [-range_w, +range_w].

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "esising/model.hpp"

namespace esising {

// Native coupling range of the coupled-oscillator chip.
inline constexpr int kNativeRange = 14;

enum class RoundingScheme { deterministic, half, stochastic };

struct QuantizedIsing {
  std::vector<int> h;
  UpperTriangular<int> j;
  int range_w = kNativeRange;
  double scale = 1.0;
  RoundingScheme scheme = RoundingScheme::deterministic;
  std::optional<std::uint64_t> seed;  // absent for deterministic rounding
  double source_offset = 0.0;         // unscaled, never quantized

  int size() const { return static_cast<int>(h.size()); }
};

// Real form after joint scaling, ready for rounding.
struct ScaledForm {
  IsingForm form;
  double scale = 1.0;
  int range_w = kNativeRange;
};

// Multiplies h and J by range_w / max(|h| u |J|). The offset is carried
// unscaled. An all-zero form gets scale 1.
ScaledForm scale_to_range(const IsingForm& form, int range_w);

// Nearest integer, ties away from zero, clamped to +/-range_w.
QuantizedIsing round_deterministic(const ScaledForm& scaled);
// Non-integers go to floor or ceil with probability 1/2 each.
QuantizedIsing round_half(const ScaledForm& scaled, std::uint64_t seed);
// x goes to ceil(x) with probability x - floor(x); unbiased.
QuantizedIsing round_stochastic(const ScaledForm& scaled, std::uint64_t seed);

QuantizedIsing round_with(const ScaledForm& scaled, RoundingScheme scheme,
                          std::uint64_t seed);

// Signed b-bit range: 2^(b-1) - 1, for 3 <= bits <= 16.
int range_for_bits(int bits);

QuantizedIsing quantize(const IsingForm& form, int range_w, RoundingScheme scheme,
                        std::uint64_t seed = 0);
QuantizedIsing quantize_bits(const IsingForm& form, int bits, RoundingScheme scheme,
                             std::uint64_t seed = 0);

// Integer energy sum_i h_i s_i + sum_{i<j} 2 j_ij s_i s_j in scaled units.
// The source offset is in different units and is not added.
double ising_energy(const QuantizedIsing& q, std::span<const std::int8_t> spins);

// The integer program viewed as a real form (scaled units, zero offset).
IsingForm as_real_form(const QuantizedIsing& q);
// Divides by the scale and restores the source offset.
IsingForm dequantize(const QuantizedIsing& q);

// Stable 64-bit digest of the integer program (FNV-1a over its coefficients
// and range), used to tell quantized instances apart in iteration records.
std::uint64_t digest(const QuantizedIsing& q);

// Target precision for a solve: full floating point, or an integer range.
struct Precision {
  bool full = false;
  int range_w = kNativeRange;

  static Precision full_precision() { return {true, 0}; }
  static Precision range(int w);
  static Precision bits(int b) { return range(range_for_bits(b)); }
};

std::string to_string(const Precision& p);

const char* to_string(RoundingScheme s);
RoundingScheme scheme_from_string(const std::string& s);

}  // namespace esising
