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

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "esising/error.hpp"
#include "esising/rng.hpp"
#include "esising/solvers.hpp"

namespace esising {

const char* to_string(Backend b) {
  switch (b) {
    case Backend::exhaustive: return "exhaustive";
    case Backend::tabu: return "tabu";
    case Backend::oscillator: return "oscillator";
    case Backend::random: return "random";
  }
  return "?";
}

Backend backend_from_string(const std::string& s) {
  if (s == "exhaustive") return Backend::exhaustive;
  if (s == "tabu") return Backend::tabu;
  if (s == "oscillator") return Backend::oscillator;
  if (s == "random") return Backend::random;
  throw InvalidArgument("unknown backend '" + s +
                        "' (expected exhaustive|tabu|oscillator|random)");
}

Selection random_selection(int n, int m, std::uint64_t seed) {
  if (m < 1 || m > n) {
    std::ostringstream os;
    os << "random selection needs 1 <= m <= n (m = " << m << ", n = " << n << ")";
    throw InvalidArgument(os.str());
  }
  // Partial Fisher-Yates with portable index draws.
  Rng rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = 0; i < m; ++i) {
    const auto span = static_cast<double>(n - i);
    int k = i + static_cast<int>(uniform01(rng) * span);
    k = std::min(k, n - 1);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(k)]);
  }
  perm.resize(static_cast<std::size_t>(m));
  return Selection::from_indices(n, perm);
}

Selection repair(const EsInstance& instance, const Selection& sel) {
  const int n = instance.size();
  const int m = instance.summary_length();
  if (sel.size() != n) throw InvalidArgument("selection length does not match instance");
  Selection out = sel;
  const double two_lambda = 2.0 * instance.lambda();

  auto redundancy_with_members = [&](int i) {
    double r = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j != i && out.contains(j)) r += instance.beta(i, j);
    }
    return r;
  };

  int count = out.count();
  while (count > m) {
    int worst = -1;
    double worst_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (!out.contains(i)) continue;
      const double value = instance.mu(i) - two_lambda * redundancy_with_members(i);
      if (value < worst_value) {
        worst_value = value;
        worst = i;
      }
    }
    out.set(worst, false);
    --count;
  }
  while (count < m) {
    int best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      if (out.contains(i)) continue;
      const double value = instance.mu(i) - two_lambda * redundancy_with_members(i);
      if (value > best_value) {
        best_value = value;
        best = i;
      }
    }
    out.set(best, true);
    ++count;
  }
  return out;
}

}  // namespace esising
