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

#include "qonash/index_set.hpp"

#include <algorithm>
#include <bit>

#include "qonash/error.hpp"

namespace qonash {

IndexSet IndexSet::from_one_based(std::span<const long long> indices,
                                  std::size_t dim) {
  IndexSet out;
  for (long long i : indices) {
    if (i < 1 || static_cast<std::size_t>(i) > dim) {
      throw Error(
          ErrorCode::kBadIndexSet,
          "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    }
    const auto axis = static_cast<std::size_t>(i - 1);
    if (out.contains(axis)) {
      throw Error(ErrorCode::kBadIndexSet,
                  "index " + std::to_string(i) + " repeated");
    }
    out.insert(axis);
  }
  return out;
}

IndexSet IndexSet::from_one_based(std::initializer_list<long long> indices,
                                  std::size_t dim) {
  return from_one_based(
      std::span<const long long>(indices.begin(), indices.size()), dim);
}

IndexSet IndexSet::full(std::size_t dim) {
  if (dim > kMaxDimension) {
    throw Error(ErrorCode::kDimensionCap, "dimension " + std::to_string(dim) +
                                              " exceeds cap " +
                                              std::to_string(kMaxDimension));
  }
  return IndexSet(static_cast<std::uint32_t>((std::uint64_t{1} << dim) - 1));
}

std::size_t IndexSet::size() const {
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> IndexSet::axes() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 32; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

std::vector<long long> IndexSet::one_based() const {
  std::vector<long long> out;
  for (std::size_t a : axes()) out.push_back(static_cast<long long>(a) + 1);
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (long long i : one_based()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

std::strong_ordering operator<=>(IndexSet a, IndexSet b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  const auto ax = a.axes();
  const auto bx = b.axes();
  return std::lexicographical_compare_three_way(ax.begin(), ax.end(),
                                                bx.begin(), bx.end());
}

IndexSet support_of(const RatVec& v) {
  IndexSet s;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (sgn(v[i]) != 0) s.insert(i);
  }
  return s;
}

std::vector<IndexSet> all_nonempty_faces(std::size_t dim) {
  const std::uint32_t full = IndexSet::full(dim).mask();
  std::vector<IndexSet> out;
  out.reserve(full);
  for (std::uint32_t m = 1; m <= full && m != 0; ++m) {
    out.push_back(IndexSet::from_mask(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qonash
