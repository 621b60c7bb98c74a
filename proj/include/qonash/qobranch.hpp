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

#include <cstddef>
#include <string>
#include <vector>

#include "qonash/intlat.hpp"
#include "qonash/rational.hpp"

namespace qonash {

/// One analytically irreducible quasi-ordinary branch, given by its
/// characteristic exponents lambda_1 <= ... <= lambda_g (componentwise).
/// An empty exponent list is a smooth branch.
struct BranchSpec {
  std::size_t dim = 0;
  std::vector<RatVec> char_exponents;
  std::string label;
};

/// The exponent lattices M_0 = Z^d < M_1 < ... < M_g = M, and N = dual(M).
struct BranchLattices {
  std::vector<Lattice> tower;
  /// [M_j : M_{j-1}] for j = 1..g.
  std::vector<Integer> step_indices;
  Lattice M;
  Lattice N;
  /// [M : M_0].
  Integer degree_n;
};

/// Validates the exponents and builds the lattice tower.
///
/// Checks, in order: dimensions (kDimensionMismatch), signs
/// (kNegativeExponent, kZeroExponent), the componentwise chain
/// (kChainOrder) and strict growth of every step (kNotCharacteristic).
BranchLattices build_tower(const BranchSpec& spec);

}  // namespace qonash
