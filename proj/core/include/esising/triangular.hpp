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

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace esising {

// Strict upper triangle of an n x n symmetric matrix, stored row-major:
// (0,1) (0,2) ... (0,n-1) (1,2) ... (n-2,n-1). Access is symmetric, so
// at(i, j) == at(j, i); the diagonal is not stored.
template <typename T>
class UpperTriangular {
 public:
  UpperTriangular() = default;
  explicit UpperTriangular(std::size_t n, T fill = T{})
      : n_(n), data_(pair_count(n), fill) {}
  UpperTriangular(std::size_t n, std::vector<T> packed)
      : n_(n), data_(std::move(packed)) {
    assert(data_.size() == pair_count(n));
  }

  static constexpr std::size_t pair_count(std::size_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
  }

  std::size_t dim() const { return n_; }
  std::size_t size() const { return data_.size(); }

  std::size_t index(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    assert(i < j && j < n_);
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }

  T& at(std::size_t i, std::size_t j) { return data_[index(i, j)]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[index(i, j)]; }

  std::span<T> values() { return data_; }
  std::span<const T> values() const { return data_; }

  friend bool operator==(const UpperTriangular&, const UpperTriangular&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

}  // namespace esising
