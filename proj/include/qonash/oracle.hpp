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

// Exhaustive reference computations. Nothing here calls the normal-form,
// face or minimal-element code of the main path: membership is decided by
// an adjugate test on the basis, edge generators by scanning multiples,
// and everything else by walking integer boxes.

#pragma once

#include <cstdint>
#include <vector>

#include "qonash/index_set.hpp"
#include "qonash/intlat.hpp"
#include "qonash/rational.hpp"

namespace qonash::oracle {

/// Minimal elements of S among the points of N in [0, bound]^d. Throws
/// kBoundTooSmall if some edge generator has a coordinate above `bound`,
/// and kNotSublatticeOfZd unless N is integral.
std::vector<RatVec> brute_minimal_S(const Lattice& n, std::int64_t bound);

/// Number of N-points in the half-open edge parallelepiped of a nonempty
/// face.
std::int64_t brute_face_index(const Lattice& n, IndexSet face);

/// Smallest t > 0 with t * e_axis in N, by scanning t = 1, 2, ...
std::int64_t brute_edge_length(const Lattice& n, std::size_t axis);

}  // namespace qonash::oracle
