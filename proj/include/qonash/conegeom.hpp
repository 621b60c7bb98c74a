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

// Geometry of the positive quadrant sigma relative to a lattice N: faces
// and their regularity, lattice points in edge parallelepipeds, minimal
// elements for the cone order, barycenters and monomial valuations.

#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "qonash/index_set.hpp"
#include "qonash/intlat.hpp"
#include "qonash/rational.hpp"

namespace qonash {

/// u <=_sigma v, i.e. v - u has no negative coordinate.
bool leq_sigma(const RatVec& u, const RatVec& v);

/// The face tau_I = pos{e_i : i in I} of sigma, seen through N.
struct Face {
  IndexSet indices;
  /// p_i = c_i e_i, the primitive N-vector on each edge, in axis order.
  std::vector<RatVec> primgens;
  /// [N cap span(tau_I) : Z<p_i>]; equals the parallelepiped point count.
  Integer index;
  bool regular = true;
};

Face face_data(const Lattice& n, IndexSet face);

/// Points x of N with 0 < x_i <= c_i for i in I and x_j = 0 otherwise.
/// Sorted lexicographically.
std::vector<RatVec> parallelepiped_points(const Lattice& n, IndexSet face);

/// The <=_sigma-minimal members, sorted lexicographically, duplicates
/// removed.
std::vector<RatVec> minimal_elements(std::span<const RatVec> pts);

enum class DivisorOrigin { kToricMinimal, kBarycenter };

std::string_view origin_name(DivisorOrigin origin);

/// A toric divisorial valuation val_v = q * val_{D_v0}.
struct Divisor {
  RatVec vector;
  RatVec primitive;
  Integer multiplicity;
  DivisorOrigin origin;
  /// Support of `vector`: the face whose relative interior holds it.
  IndexSet face;

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

Divisor make_divisor(const Lattice& n, RatVec v, DivisorOrigin origin);

/// Minimal elements of S, the union over singular faces tau of relint(tau)
/// cap N. Requires N inside Z^d (kNotSublatticeOfZd).
///
/// Only half-open edge parallelepipeds are searched. If x lies in
/// relint(tau_I) cap N and x_i > c_i for some i in I, then x - p_i is still
/// in relint(tau_I) cap N and strictly below x, so x is not minimal. Every
/// minimal element of S therefore lies in some parallelepiped of a singular
/// face, and those points all belong to S.
std::vector<Divisor> minimal_toric_divisors(const Lattice& n);

/// Sum of the primitive edge generators of a regular face. Throws
/// kSingularFace on a singular face and kBadIndexSet on the zero face.
Divisor barycenter(const Lattice& n, IndexSet face);

/// min over u in support of <v, u>. Throws kEmptySupport.
Rational monomial_valuation(const RatVec& v, std::span<const RatVec> support);

}  // namespace qonash
