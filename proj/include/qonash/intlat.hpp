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

// Exact integer and rational lattice algebra: Hermite and Smith normal
// forms, full-rank lattices in Q^d with a canonical basis, sums, duals,
// membership and indices.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qonash/rational.hpp"

namespace qonash {

using IntVec = std::vector<Integer>;
using IntMatrix = std::vector<IntVec>;

/// Row-style Hermite normal form of the integer row span of `rows`.
///
/// Lower-triangular echelon convention: rows are ordered by pivot column,
/// every entry right of a row's pivot is zero, pivots are positive, and an
/// entry sitting in another row's pivot column is reduced into
/// [0, pivot). Zero rows are dropped, so rank-deficient input returns fewer
/// than d rows. Throws kEmptyInput / kDimensionMismatch.
IntMatrix hnf(const IntMatrix& rows);

/// Invariant factors d_1 | d_2 | ... | d_r (all positive) of a nonzero
/// integer matrix. Throws kZeroMatrix / kEmptyInput / kDimensionMismatch.
std::vector<Integer> snf(const IntMatrix& mat);

/// A full-rank lattice in Q^d. The basis is kept as the scaled row HNF
/// (HNF of denom * L, divided by denom), so equal lattices compare equal
/// by representation.
class Lattice {
 public:
  /// Z^d.
  static Lattice standard(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  /// Rows generate the lattice; row k is supported on columns 0..k.
  const std::vector<RatVec>& basis() const noexcept { return basis_; }
  /// Least positive D with D * L inside Z^d.
  const Integer& denom() const noexcept { return denom_; }
  /// Covolume |det(basis)|, always positive.
  Rational covolume() const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

  std::string to_string() const;

 private:
  Lattice(std::size_t dim, std::vector<RatVec> basis, Integer denom)
      : dim_(dim), basis_(std::move(basis)), denom_(std::move(denom)) {}

  friend Lattice lattice_from_generators(std::span<const RatVec> gens);

  std::size_t dim_;
  std::vector<RatVec> basis_;
  Integer denom_;
};

/// Integer span of `gens`. Throws kEmptyInput, kDimensionMismatch,
/// kDimensionCap, or kNotFullRank.
Lattice lattice_from_generators(std::span<const RatVec> gens);
inline Lattice lattice_from_generators(const std::vector<RatVec>& gens) {
  return lattice_from_generators(std::span<const RatVec>(gens));
}

/// Smallest lattice containing both.
Lattice lattice_sum(const Lattice& a, const Lattice& b);

/// {v : <v, u> in Z for all u in l}.
Lattice dual_lattice(const Lattice& l);

/// Coordinates of v in l's basis (exact, possibly non-integral).
RatVec coordinates(const Lattice& l, const RatVec& v);

bool contains(const Lattice& l, const RatVec& v);

/// [sup : sub]. Throws kNotContained unless sub is inside sup.
Integer index(const Lattice& sub, const Lattice& sup);

/// Smallest t * e_axis (t > 0) lying in l. `axis` is 0-based.
RatVec primitive_on_ray(const Lattice& l, std::size_t axis);

/// Basis of l intersected with span{e_a : a in axes}, returned as ambient
/// vectors. The basis is triangular in the order `axes` is given: row k is
/// supported on axes[0..k] with a positive entry at axes[k].
std::vector<RatVec> coordinate_section(const Lattice& l,
                                       std::span<const std::size_t> axes);

/// Splits a nonzero v in l as q * v0 with v0 primitive in l on the same ray.
std::pair<RatVec, Integer> primitive_part(const Lattice& l, const RatVec& v);

}  // namespace qonash
