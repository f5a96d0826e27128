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

#include "esising/synthetic.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "esising/error.hpp"
#include "esising/rng.hpp"

namespace esising {
namespace {

void normalize(std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  for (double& x : v) x /= norm;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

EsInstance synthetic_instance(std::string name, int n, int m, std::uint64_t seed,
                              const SyntheticParams& params) {
  if (params.dim < 2) throw InvalidArgument("synthetic embedding dimension must be >= 2");
  if (!(params.loading_min >= 0.0 && params.loading_max >= params.loading_min)) {
    throw InvalidArgument("synthetic loading range is invalid");
  }
  const auto dim = static_cast<std::size_t>(params.dim);
  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> topic(dim);
  for (double& x : topic) x = gauss(rng);
  normalize(topic);

  if (params.subtopics < 1) throw InvalidArgument("synthetic instances need >= 1 subtopic");
  std::vector<std::vector<double>> sub(static_cast<std::size_t>(params.subtopics),
                                       std::vector<double>(dim));
  for (auto& v : sub) {
    for (double& x : v) x = gauss(rng);
    normalize(v);
  }

  const double noise_scale = 1.0 / std::sqrt(static_cast<double>(dim));
  std::vector<std::vector<double>> emb(static_cast<std::size_t>(std::max(n, 0)),
                                       std::vector<double>(dim));
  for (auto& e : emb) {
    const double loading =
        params.loading_min + (params.loading_max - params.loading_min) * uniform01(rng);
    const auto& st = sub[static_cast<std::size_t>(rng() % sub.size())];
    for (std::size_t d = 0; d < dim; ++d) {
      e[d] = loading * topic[d] + params.subtopic_weight * st[d] + noise_scale * gauss(rng);
    }
    normalize(e);
  }

  std::vector<double> doc(dim, 0.0);
  for (const auto& e : emb) {
    for (std::size_t d = 0; d < dim; ++d) doc[d] += e[d];
  }
  normalize(doc);

  std::vector<double> mu;
  UpperTriangular<double> beta(emb.size());
  for (std::size_t i = 0; i < emb.size(); ++i) {
    mu.push_back(dot(emb[i], doc));
    for (std::size_t j = i + 1; j < emb.size(); ++j) beta.at(i, j) = dot(emb[i], emb[j]);
  }
  return EsInstance(std::move(name), std::move(mu), std::move(beta), params.lambda, m);
}

std::vector<EsInstance> synthetic_suite(int count, int n, int m, std::uint64_t seed,
                                        const SyntheticParams& params) {
  std::vector<EsInstance> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "synth-%03d", i);
    out.push_back(synthetic_instance(name, n, m, derive_seed(seed, {static_cast<std::uint64_t>(i)}),
                                     params));
  }
  return out;
}

}  // namespace esising
