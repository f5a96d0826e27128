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

#include "esising/quantizer.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "esising/error.hpp"
#include "esising/rng.hpp"

namespace esising {
namespace {

int clamp_to(double v, int range_w) {
  return static_cast<int>(std::clamp(v, -static_cast<double>(range_w),
                                     static_cast<double>(range_w)));
}

// Applies `round_one` to every coefficient in a fixed order (h, then the
// packed triangle) so seeded schemes are reproducible.
QuantizedIsing round_all(const ScaledForm& scaled, RoundingScheme scheme,
                         std::optional<std::uint64_t> seed,
                         const std::function<double(double)>& round_one) {
  const auto& f = scaled.form;
  QuantizedIsing q;
  q.range_w = scaled.range_w;
  q.scale = scaled.scale;
  q.scheme = scheme;
  q.seed = seed;
  q.source_offset = f.offset;
  q.h.reserve(f.h.size());
  for (double v : f.h) q.h.push_back(clamp_to(round_one(v), scaled.range_w));
  std::vector<int> packed;
  packed.reserve(f.j.size());
  for (double v : f.j.values()) packed.push_back(clamp_to(round_one(v), scaled.range_w));
  q.j = UpperTriangular<int>(f.h.size(), std::move(packed));
  return q;
}

}  // namespace

ScaledForm scale_to_range(const IsingForm& form, int range_w) {
  if (range_w < 1) throw InvalidArgument("range_w must be >= 1");
  double max_abs = 0.0;
  for (double v : form.h) max_abs = std::max(max_abs, std::abs(v));
  for (double v : form.j.values()) max_abs = std::max(max_abs, std::abs(v));
  ScaledForm out;
  out.range_w = range_w;
  out.scale = max_abs > 0.0 ? range_w / max_abs : 1.0;
  out.form = form;
  for (double& v : out.form.h) v *= out.scale;
  for (double& v : out.form.j.values()) v *= out.scale;
  return out;
}

QuantizedIsing round_deterministic(const ScaledForm& scaled) {
  // std::round rounds halfway cases away from zero.
  return round_all(scaled, RoundingScheme::deterministic, std::nullopt,
                   [](double v) { return std::round(v); });
}

QuantizedIsing round_half(const ScaledForm& scaled, std::uint64_t seed) {
  Rng rng(seed);
  return round_all(scaled, RoundingScheme::half, seed, [&rng](double v) {
    const double lo = std::floor(v);
    const bool up = uniform01(rng) < 0.5;
    return lo == v ? v : (up ? lo + 1.0 : lo);
  });
}

QuantizedIsing round_stochastic(const ScaledForm& scaled, std::uint64_t seed) {
  Rng rng(seed);
  return round_all(scaled, RoundingScheme::stochastic, seed, [&rng](double v) {
    const double lo = std::floor(v);
    const double frac = v - lo;
    return uniform01(rng) < frac ? lo + 1.0 : lo;
  });
}

QuantizedIsing round_with(const ScaledForm& scaled, RoundingScheme scheme,
                          std::uint64_t seed) {
  switch (scheme) {
    case RoundingScheme::deterministic: return round_deterministic(scaled);
    case RoundingScheme::half: return round_half(scaled, seed);
    case RoundingScheme::stochastic: return round_stochastic(scaled, seed);
  }
  throw InvalidArgument("unknown rounding scheme");
}

int range_for_bits(int bits) {
  if (bits < 3 || bits > 16) {
    throw InvalidArgument("bit width must be in [3, 16] (got " + std::to_string(bits) + ")");
  }
  return (1 << (bits - 1)) - 1;
}

QuantizedIsing quantize(const IsingForm& form, int range_w, RoundingScheme scheme,
                        std::uint64_t seed) {
  return round_with(scale_to_range(form, range_w), scheme, seed);
}

QuantizedIsing quantize_bits(const IsingForm& form, int bits, RoundingScheme scheme,
                             std::uint64_t seed) {
  return quantize(form, range_for_bits(bits), scheme, seed);
}

double ising_energy(const QuantizedIsing& q, std::span<const std::int8_t> spins) {
  const std::size_t n = q.h.size();
  if (spins.size() != n) throw InvalidArgument("spin vector length does not match program size");
  long long e = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (spins[i] != 1 && spins[i] != -1) throw InvalidArgument("spin values must be -1 or +1");
    e += static_cast<long long>(q.h[i]) * spins[i];
    for (std::size_t k = i + 1; k < n; ++k) {
      e += 2LL * q.j.at(i, k) * spins[i] * spins[k];
    }
  }
  return static_cast<double>(e);
}

IsingForm as_real_form(const QuantizedIsing& q) {
  IsingForm f;
  f.h.assign(q.h.begin(), q.h.end());
  std::vector<double> packed(q.j.values().begin(), q.j.values().end());
  f.j = UpperTriangular<double>(q.h.size(), std::move(packed));
  return f;
}

IsingForm dequantize(const QuantizedIsing& q) {
  IsingForm f = as_real_form(q);
  for (double& v : f.h) v /= q.scale;
  for (double& v : f.j.values()) v /= q.scale;
  f.offset = q.source_offset;
  return f;
}

std::uint64_t digest(const QuantizedIsing& q) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto feed = [&hash](long long v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      hash ^= (u >> (8 * b)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  };
  feed(static_cast<long long>(q.h.size()));
  feed(q.range_w);
  for (int v : q.h) feed(v);
  for (int v : q.j.values()) feed(v);
  return hash;
}

Precision Precision::range(int w) {
  if (w < 1) throw InvalidArgument("range_w must be >= 1");
  return {false, w};
}

std::string to_string(const Precision& p) {
  return p.full ? std::string("fp") : "range" + std::to_string(p.range_w);
}

const char* to_string(RoundingScheme s) {
  switch (s) {
    case RoundingScheme::deterministic: return "deterministic";
    case RoundingScheme::half: return "half";
    case RoundingScheme::stochastic: return "stochastic";
  }
  return "?";
}

RoundingScheme scheme_from_string(const std::string& s) {
  if (s == "deterministic") return RoundingScheme::deterministic;
  if (s == "half") return RoundingScheme::half;
  if (s == "stochastic") return RoundingScheme::stochastic;
  throw InvalidArgument("unknown rounding scheme '" + s +
                        "' (expected deterministic|half|stochastic)");
}

}  // namespace esising
