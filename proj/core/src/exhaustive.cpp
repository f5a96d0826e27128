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

#include <limits>
#include <sstream>
#include <vector>

#include "esising/error.hpp"
#include "esising/solvers.hpp"

namespace esising {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n - k + i) / i stays integral at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    if (r > kMax / num) return kMax;
    r = r * num / static_cast<std::uint64_t>(i);
  }
  return r;
}

OracleBounds solve_exhaustive(const EsInstance& instance, std::uint64_t cap) {
  const int n = instance.size();
  const int m = instance.summary_length();
  const std::uint64_t total = binomial(n, m);
  if (total > cap) {
    std::ostringstream os;
    os << "instance too large for oracle: C(" << n << ", " << m << ") = " << total
       << " exceeds the cap of " << cap;
    throw OracleTooLarge(os.str());
  }

  // Precompute pair weights so each subset costs O(M^2) lookups.
  const double two_lambda = 2.0 * instance.lambda();
  std::vector<double> pair(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) pair[static_cast<std::size_t>(i * n + j)] = two_lambda * instance.beta(i, j);
    }
  }

  std::vector<int> idx(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<int> best_max = idx;
  std::vector<int> best_min = idx;
  double obj_max = -std::numeric_limits<double>::infinity();
  double obj_min = std::numeric_limits<double>::infinity();
  std::uint64_t evaluated = 0;

  // Lexicographic order, so strict comparisons keep the smallest index set.
  while (true) {
    double obj = 0.0;
    for (int a = 0; a < m; ++a) {
      const int i = idx[static_cast<std::size_t>(a)];
      obj += instance.mu(i);
      for (int b = a + 1; b < m; ++b) {
        obj -= pair[static_cast<std::size_t>(i * n + idx[static_cast<std::size_t>(b)])];
      }
    }
    ++evaluated;
    if (obj > obj_max) {
      obj_max = obj;
      best_max = idx;
    }
    if (obj < obj_min) {
      obj_min = obj;
      best_min = idx;
    }
    int pos = m - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - m + pos) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int k = pos + 1; k < m; ++k) {
      idx[static_cast<std::size_t>(k)] = idx[static_cast<std::size_t>(k - 1)] + 1;
    }
  }

  OracleBounds out;
  out.obj_max = obj_max;
  out.obj_min = obj_min;
  out.argmax = Selection::from_indices(n, best_max);
  out.argmin = Selection::from_indices(n, best_min);
  out.evaluated = evaluated;
  return out;
}

}  // namespace esising
