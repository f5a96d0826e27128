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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "esising/error.hpp"
#include "esising/io.hpp"
#include "esising/quantizer.hpp"
#include "support/oracles.hpp"

namespace esising {
namespace {

// Already-scaled single-field form holding `values` as h.
ScaledForm raw(std::vector<double> values, int range_w = 14) {
  ScaledForm s;
  s.form.h = std::move(values);
  s.form.j = UpperTriangular<double>(s.form.h.size());
  s.range_w = range_w;
  return s;
}

IsingForm random_form(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> u(-3, 3);
  IsingForm f;
  for (int i = 0; i < n; ++i) f.h.push_back(u(rng));
  f.j = UpperTriangular<double>(n);
  for (double& v : f.j.values()) v = u(rng);
  f.offset = u(rng);
  return f;
}

TEST(ScaleToRange, Examples) {
  IsingForm f;
  f.h = {7, -3};
  f.j = UpperTriangular<double>(2, std::vector<double>{1.0});
  const auto s = scale_to_range(f, 14);
  EXPECT_EQ(s.scale, 2.0);
  EXPECT_EQ(s.form.h, (std::vector<double>{14, -6}));

  f.h = {14, -3};
  const auto id = scale_to_range(f, 14);
  EXPECT_EQ(id.scale, 1.0);
  EXPECT_EQ(id.form.h, f.h);

  IsingForm z;
  z.h = {0, 0};
  z.j = UpperTriangular<double>(2);
  EXPECT_EQ(scale_to_range(z, 14).scale, 1.0);
  EXPECT_THROW(scale_to_range(f, 0), InvalidArgument);
}

TEST(ScaleToRange, UsesLargestCouplingToo) {
  IsingForm f;
  f.h = {1, -1};
  f.j = UpperTriangular<double>(2, std::vector<double>{-4.0});
  EXPECT_EQ(scale_to_range(f, 8).scale, 2.0);
}

TEST(ScaleToRange, PreservesArgminSet) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto f = random_form(8, seed);
    const auto s = scale_to_range(f, 7);
    auto before = oracle::argmin_all(8, [&](std::uint64_t m) { return oracle::ising_energy(f, oracle::spins_of(m, 8)); });
    auto after = oracle::argmin_all(8, [&](std::uint64_t m) {
      return oracle::ising_energy(s.form, oracle::spins_of(m, 8));
    });
    EXPECT_EQ(before.masks, after.masks);
  }
}

TEST(RoundDeterministic, Examples) {
  const auto q = round_deterministic(raw({1.4, -2.6, 13.5, 2.5, -2.5, 3.0}));
  EXPECT_EQ(q.h, (std::vector<int>{1, -3, 14, 3, -3, 3}));
  EXPECT_EQ(q.scheme, RoundingScheme::deterministic);
  EXPECT_FALSE(q.seed.has_value());
}

TEST(RoundDeterministic, ClampsBoundaryTies) {
  const auto q = round_deterministic(raw({7.5, -7.5}, 7));
  EXPECT_EQ(q.h, (std::vector<int>{7, -7}));
}

TEST(RoundDeterministic, IdempotentOnIntegers) {
  const auto once = round_deterministic(raw({1.4, -2.6, 5.5}));
  const auto twice = round_deterministic(raw(std::vector<double>(once.h.begin(), once.h.end())));
  EXPECT_EQ(once.h, twice.h);
}

TEST(RoundHalf, IntegersUnchangedAndFairCoin) {
  int twos = 0;
  constexpr int kDraws = 100000;
  for (int i = 0; i < kDraws; ++i) {
    const auto q = round_half(raw({1.25, 3.0}), derive_seed(1, {static_cast<std::uint64_t>(i)}));
    EXPECT_EQ(q.h[1], 3);
    ASSERT_TRUE(q.h[0] == 1 || q.h[0] == 2);
    twos += q.h[0] == 2;
  }
  EXPECT_NEAR(static_cast<double>(twos) / kDraws, 0.5, 0.005);
}

TEST(RoundStochastic, UnbiasedWithinThreeSigma) {
  constexpr int kDraws = 100000;
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const auto q = round_stochastic(raw({1.25, 2.0}), derive_seed(2, {static_cast<std::uint64_t>(i)}));
    EXPECT_EQ(q.h[1], 2);
    sum += q.h[0];
  }
  const double sigma = std::sqrt(0.25 * 0.75 / kDraws);
  EXPECT_NEAR(sum / kDraws, 1.25, 3 * sigma);
}

TEST(RoundStochastic, SeedReproducible) {
  const auto f = random_form(10, 5);
  const auto a = quantize(f, 14, RoundingScheme::stochastic, 99);
  const auto b = quantize(f, 14, RoundingScheme::stochastic, 99);
  const auto c = quantize(f, 14, RoundingScheme::stochastic, 100);
  EXPECT_EQ(format_program(a), format_program(b));
  EXPECT_NE(format_program(a), format_program(c));
  EXPECT_EQ(a.seed, std::optional<std::uint64_t>(99));
}

TEST(QuantizeBits, Ranges) {
  EXPECT_EQ(range_for_bits(6), 31);
  EXPECT_EQ(range_for_bits(4), 7);
  EXPECT_EQ(range_for_bits(3), 3);
  EXPECT_EQ(range_for_bits(16), 32767);
  EXPECT_THROW(range_for_bits(2), InvalidArgument);
  EXPECT_THROW(range_for_bits(17), InvalidArgument);
  const auto f = random_form(5, 1);
  EXPECT_EQ(format_program(quantize_bits(f, 5, RoundingScheme::deterministic)),
            format_program(quantize(f, 15, RoundingScheme::deterministic)));
}

TEST(QuantizeBits, SixBitErrorBound) {
  const auto f = random_form(10, 17);
  const auto q = quantize_bits(f, 6, RoundingScheme::deterministic);
  const auto back = dequantize(q);
  const double bound = 0.5 / q.scale + 1e-12;
  for (std::size_t i = 0; i < f.h.size(); ++i) EXPECT_LE(std::abs(back.h[i] - f.h[i]), bound);
  for (std::size_t k = 0; k < f.j.size(); ++k) {
    EXPECT_LE(std::abs(back.j.values()[k] - f.j.values()[k]), bound);
  }
  EXPECT_EQ(back.offset, f.offset);
}

TEST(Quantize, OutputsWithinRangeForAllSchemes) {
  for (auto scheme : {RoundingScheme::deterministic, RoundingScheme::half, RoundingScheme::stochastic}) {
    for (int w : {1, 3, 7, 14, 31}) {
      const auto q = quantize(random_form(9, static_cast<std::uint64_t>(w)), w, scheme, 4);
      for (int v : q.h) EXPECT_LE(std::abs(v), w);
      for (int v : q.j.values()) EXPECT_LE(std::abs(v), w);
      EXPECT_GT(q.scale, 0.0);
    }
  }
}

TEST(Quantize, DeterministicIsPure) {
  const auto f = random_form(12, 6);
  EXPECT_EQ(format_program(quantize(f, 14, RoundingScheme::deterministic, 1)),
            format_program(quantize(f, 14, RoundingScheme::deterministic, 2)));
  EXPECT_EQ(digest(quantize(f, 14, RoundingScheme::deterministic)),
            digest(quantize(f, 14, RoundingScheme::deterministic)));
}

TEST(Quantize, EnergyMatchesRealView) {
  const auto q = quantize(random_form(7, 2), 14, RoundingScheme::stochastic, 3);
  const auto real = as_real_form(q);
  for (std::uint64_t m = 0; m < 128; ++m) {
    const auto s = oracle::spins_of(m, 7);
    EXPECT_EQ(ising_energy(q, s), oracle::ising_energy(q, s));
    EXPECT_EQ(ising_energy(real, s), ising_energy(q, s));
  }
}

TEST(Precision, Names) {
  EXPECT_EQ(to_string(Precision::full_precision()), "fp");
  EXPECT_EQ(to_string(Precision::range(14)), "range14");
  EXPECT_EQ(Precision::bits(4).range_w, 7);
  EXPECT_THROW(Precision::range(0), InvalidArgument);
  EXPECT_EQ(scheme_from_string("half"), RoundingScheme::half);
  EXPECT_STREQ(to_string(RoundingScheme::stochastic), "stochastic");
  EXPECT_THROW(scheme_from_string("up"), InvalidArgument);
}

}  // namespace
}  // namespace esising
