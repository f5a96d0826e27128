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

#include <cstdint>
#include <string>
#include <vector>

#include "esising/model.hpp"

namespace esising {

// Embedding-like random instances. Each sentence belongs to one of
// `subtopics` random directions and its vector is
//   normalize(a_i * topic + b * subtopic_c(i) + g_i)
// with a shared unit topic, a loading a_i ~ U[loading_min, loading_max], and
// isotropic Gaussian noise g_i of unit expected norm. mu_i is the cosine to
// the normalized mean vector and beta_ij the pairwise cosine, as for real
// sentence embeddings; sentences on the same subtopic are redundant.
struct SyntheticParams {
  int dim = 32;
  double lambda = 1.0;
  double loading_min = 0.4;
  double loading_max = 1.2;
  int subtopics = 6;
  double subtopic_weight = 1.0;
};

EsInstance synthetic_instance(std::string name, int n, int m, std::uint64_t seed,
                              const SyntheticParams& params = {});

// `count` instances named synth-000, synth-001, ...; instance i uses a seed
// derived from (seed, i).
std::vector<EsInstance> synthetic_suite(int count, int n, int m, std::uint64_t seed,
                                        const SyntheticParams& params = {});

}  // namespace esising
