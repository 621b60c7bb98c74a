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

#include "qonash/conegeom.hpp"

#include <algorithm>

#include "qonash/error.hpp"

namespace qonash {
namespace {

void check_face(const Lattice& n, IndexSet face) {
  if (!face.is_subset_of(IndexSet::full(n.dim()))) {
    throw Error(ErrorCode::kBadIndexSet,
                "face " + face.to_string() + " is not a face of the " +
                    std::to_string(n.dim()) + "-dimensional quadrant");
  }
}

// Coefficients of p in a basis that is triangular along `axes`.
IntVec triangular_solve(const std::vector<RatVec>& basis,
                        const std::vector<std::size_t>& axes, const RatVec& p) {
  const std::size_t k = axes.size();
  std::vector<Rational> y(k);
  for (std::size_t r = k; r-- > 0;) {
    Rational rest = p[axes[r]];
    for (std::size_t t = r + 1; t < k; ++t) rest -= y[t] * basis[t][axes[r]];
    y[r] = rest / basis[r][axes[r]];
  }
  IntVec out;
  out.reserve(k);
  for (const auto& q : y) {
    if (q.get_den() != 1) {
      throw Error(ErrorCode::kNotContained,
                  p.to_string() + " is outside the face sublattice");
    }
    out.push_back(q.get_num());
  }
  return out;
}

void enumerate_box(const std::vector<RatVec>& section,
                   const std::vector<std::size_t>& axes,
                   const std::vector<Rational>& bounds, std::size_t r,
                   const RatVec& partial, std::vector<RatVec>& out) {
  const std::size_t axis = axes[r];
  const Rational& pivot = section[r][axis];
  // 0 < a * pivot + partial <= bound, pivot > 0.
  const Integer lo = floor_of(-partial[axis] / pivot) + 1;
  const Integer hi = floor_of((bounds[r] - partial[axis]) / pivot);
  for (Integer a = lo; a <= hi; ++a) {
    RatVec next = partial + Rational(a) * section[r];
    if (r == 0) {
      out.push_back(std::move(next));
    } else {
      enumerate_box(section, axes, bounds, r - 1, next, out);
    }
  }
}

}  // namespace

bool leq_sigma(const RatVec& u, const RatVec& v) {
  require_same_dim(u, v);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

Face face_data(const Lattice& n, IndexSet face) {
  check_face(n, face);
  Face out{face, {}, Integer(1), true};
  if (face.empty()) return out;

  const auto axes = face.axes();
  for (std::size_t a : axes) out.primgens.push_back(primitive_on_ray(n, a));

  const auto section = coordinate_section(n, axes);
  IntMatrix coords;
  coords.reserve(axes.size());
  for (const auto& p : out.primgens) {
    coords.push_back(triangular_solve(section, axes, p));
  }
  Integer idx = 1;
  for (const auto& f : snf(coords)) idx *= f;
  out.index = idx;
  out.regular = (idx == 1);
  return out;
}

std::vector<RatVec> parallelepiped_points(const Lattice& n, IndexSet face) {
  check_face(n, face);
  if (face.empty()) {
    throw Error(ErrorCode::kBadIndexSet,
                "parallelepiped of the zero face is undefined");
  }
  // Lattice points are enumerated through the triangular basis of
  // N cap span(tau), one coordinate at a time: each coordinate admits
  // exactly c_r / pivot_r choices, so the walk visits index-many points.
  const auto axes = face.axes();
  const auto section = coordinate_section(n, axes);
  std::vector<Rational> bounds;
  for (std::size_t a : axes) bounds.push_back(primitive_on_ray(n, a)[a]);

  std::vector<RatVec> out;
  enumerate_box(section, axes, bounds, axes.size() - 1, RatVec(n.dim()), out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RatVec> minimal_elements(std::span<const RatVec> pts) {
  std::vector<RatVec> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<RatVec> out;
  for (const auto& x : sorted) {
    const bool dominated =
        std::any_of(sorted.begin(), sorted.end(),
                    [&](const RatVec& y) { return y != x && leq_sigma(y, x); });
    if (!dominated) out.push_back(x);
  }
  return out;
}

std::string_view origin_name(DivisorOrigin origin) {
  switch (origin) {
    case DivisorOrigin::kToricMinimal:
      return "toric-minimal";
    case DivisorOrigin::kBarycenter:
      return "barycenter";
  }
  return "unknown";
}

Divisor make_divisor(const Lattice& n, RatVec v, DivisorOrigin origin) {
  auto [v0, q] = primitive_part(n, v);
  IndexSet face = support_of(v);
  return Divisor{std::move(v), std::move(v0), std::move(q), origin, face};
}

std::vector<Divisor> minimal_toric_divisors(const Lattice& n) {
  if (n.denom() != 1) {
    throw Error(ErrorCode::kNotSublatticeOfZd,
                "N = " + n.to_string() + " is not contained in Z^d");
  }
  std::vector<RatVec> candidates;
  for (IndexSet face : all_nonempty_faces(n.dim())) {
    if (face_data(n, face).regular) continue;
    auto pts = parallelepiped_points(n, face);
    candidates.insert(candidates.end(), pts.begin(), pts.end());
  }
  std::vector<Divisor> out;
  for (auto& v : minimal_elements(candidates)) {
    out.push_back(make_divisor(n, std::move(v), DivisorOrigin::kToricMinimal));
  }
  return out;
}

Divisor barycenter(const Lattice& n, IndexSet face) {
  if (face.empty()) {
    throw Error(ErrorCode::kBadIndexSet, "barycenter of the zero face");
  }
  const Face f = face_data(n, face);
  if (!f.regular) {
    throw Error(ErrorCode::kSingularFace, "face " + face.to_string() +
                                              " is singular (index " +
                                              f.index.get_str() + ")");
  }
  RatVec sum(n.dim());
  for (const auto& p : f.primgens) sum += p;
  return make_divisor(n, std::move(sum), DivisorOrigin::kBarycenter);
}

Rational monomial_valuation(const RatVec& v, std::span<const RatVec> support) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySupport,
                "valuation of a series with empty support");
  }
  Rational best = dot(v, support.front());
  for (const auto& u : support.subspan(1)) {
    Rational val = dot(v, u);
    if (val < best) best = std::move(val);
  }
  return best;
}

}  // namespace qonash
