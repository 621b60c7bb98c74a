// Copyright 2026 The qonash Authors
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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "qonash/rational.hpp"

namespace qonash {

/// A subset I of the coordinate axes, naming the face pos{e_i : i in I} of
/// the positive quadrant. Stored 0-based; printed and serialized 1-based.
class IndexSet {
 public:
  IndexSet() = default;

  /// Validates 1 <= i <= dim and rejects repeats (kBadIndexSet).
  static IndexSet from_one_based(std::span<const long long> indices,
                                 std::size_t dim);
  static IndexSet from_one_based(std::initializer_list<long long> indices,
                                 std::size_t dim);
  static IndexSet full(std::size_t dim);
  static IndexSet from_mask(std::uint32_t mask) { return IndexSet(mask); }

  void insert(std::size_t axis) { mask_ |= (std::uint32_t{1} << axis); }
  bool contains(std::size_t axis) const {
    return (mask_ >> axis) & std::uint32_t{1};
  }
  bool empty() const { return mask_ == 0; }
  std::size_t size() const;
  bool is_subset_of(IndexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  std::uint32_t mask() const { return mask_; }

  /// Ascending 0-based axes.
  std::vector<std::size_t> axes() const;
  std::vector<long long> one_based() const;
  std::string to_string() const;

  friend bool operator==(IndexSet a, IndexSet b) { return a.mask_ == b.mask_; }
  /// Smaller faces first, then lexicographic on the axes.
  friend std::strong_ordering operator<=>(IndexSet a, IndexSet b);

 private:
  explicit IndexSet(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_ = 0;
};

/// {i : v_i != 0}.
IndexSet support_of(const RatVec& v);

/// All nonempty subsets of {0..dim-1}, in IndexSet order.
std::vector<IndexSet> all_nonempty_faces(std::size_t dim);

}  // namespace qonash
