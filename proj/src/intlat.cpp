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

#include "qonash/intlat.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "qonash/error.hpp"

namespace qonash {
namespace {

std::size_t check_rectangular(const IntMatrix& rows) {
  if (rows.empty()) throw Error(ErrorCode::kEmptyInput, "matrix has no rows");
  const std::size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "rows of length " + std::to_string(width) + " and " +
                      std::to_string(r.size()));
    }
  }
  return width;
}

void check_dim_cap(std::size_t dim) {
  if (dim == 0 || dim > kMaxDimension) {
    throw Error(ErrorCode::kDimensionCap,
                "ambient dimension " + std::to_string(dim) + " outside 1.." +
                    std::to_string(kMaxDimension));
  }
}

// a <- s*a + t*b, b <- u*b - w*a with s*x + t*y = g, u = x/g, w = y/g.
// Unimodular, leaves g in a[col] and 0 in b[col].
void combine_rows(IntVec& a, IntVec& b, std::size_t col) {
  Integer g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[col].get_mpz_t(),
             b[col].get_mpz_t());
  const Integer u = a[col] / g;
  const Integer w = b[col] / g;
  for (std::size_t k = 0; k < a.size(); ++k) {
    Integer na = s * a[k] + t * b[k];
    Integer nb = u * b[k] - w * a[k];
    a[k] = std::move(na);
    b[k] = std::move(nb);
  }
}

void axpy(IntVec& row, const Integer& q, const IntVec& pivot) {
  for (std::size_t k = 0; k < row.size(); ++k) row[k] -= q * pivot[k];
}

IntMatrix scaled_integer_basis(const Lattice& l) {
  IntMatrix m;
  m.reserve(l.dim());
  for (const auto& row : l.basis()) {
    IntVec r(l.dim());
    for (std::size_t j = 0; j < l.dim(); ++j) {
      Rational q = row[j] * l.denom();
      r[j] = q.get_num();
    }
    m.push_back(std::move(r));
  }
  return m;
}

std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(
    const IntMatrix& a, std::size_t from) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = from; i < a.size(); ++i) {
    for (std::size_t j = from; j < a[i].size(); ++j) {
      if (a[i][j] == 0) continue;
      if (!best || abs(a[i][j]) < abs(a[best->first][best->second])) {
        best = {i, j};
      }
    }
  }
  return best;
}

void swap_columns(IntMatrix& a, std::size_t x, std::size_t y) {
  for (auto& row : a) std::swap(row[x], row[y]);
}

}  // namespace

IntMatrix hnf(const IntMatrix& rows) {
  const std::size_t width = check_rectangular(rows);
  std::vector<IntVec> active(rows.begin(), rows.end());
  std::vector<std::pair<std::size_t, IntVec>> pivots;  // (column, row)

  // Clear columns right to left; a row leaves `active` once it owns the
  // pivot of the column being cleared.
  for (std::size_t c = width; c-- > 0;) {
    std::optional<std::size_t> lead;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (active[i][c] == 0) continue;
      if (!lead) {
        lead = i;
      } else {
        combine_rows(active[*lead], active[i], c);
      }
    }
    if (!lead) continue;
    IntVec p = std::move(active[*lead]);
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(*lead));
    if (p[c] < 0) {
      for (auto& x : p) x = -x;
    }
    pivots.emplace_back(c, std::move(p));
  }

  std::sort(pivots.begin(), pivots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  // Reduce each row against the pivots left of its own, right to left, so
  // later subtractions never disturb columns already reduced.
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t p = r; p-- > 0;) {
      const std::size_t c = pivots[p].first;
      const IntVec& prow = pivots[p].second;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), pivots[r].second[c].get_mpz_t(),
                 prow[c].get_mpz_t());
      if (q != 0) axpy(pivots[r].second, q, prow);
    }
  }

  IntMatrix out;
  out.reserve(pivots.size());
  for (auto& [c, row] : pivots) out.push_back(std::move(row));
  return out;
}

std::vector<Integer> snf(const IntMatrix& mat) {
  check_rectangular(mat);
  IntMatrix a = mat;
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  std::vector<Integer> factors;

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto pos = smallest_entry(a, t);
    if (!pos) break;
    std::swap(a[t], a[pos->first]);
    swap_columns(a, t, pos->second);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        axpy(a[i], q, a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (a[i][t] != 0 && abs(a[i][t]) < abs(a[bi][bj])) bi = i, bj = t;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[t][j] != 0 && abs(a[t][j]) < abs(a[bi][bj])) bi = t, bj = j;
        }
        std::swap(a[t], a[bi]);
        swap_columns(a, t, bj);
        continue;
      }
      // Row and column are clear; enforce divisibility of the remainder.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    factors.push_back(abs(a[t][t]));
  }

  if (factors.empty()) {
    throw Error(ErrorCode::kZeroMatrix, "Smith form of the zero matrix");
  }
  return factors;
}

Lattice Lattice::standard(std::size_t dim) {
  check_dim_cap(dim);
  std::vector<RatVec> basis;
  for (std::size_t k = 0; k < dim; ++k) basis.push_back(RatVec::unit(dim, k));
  return Lattice(dim, std::move(basis), Integer(1));
}

Rational Lattice::covolume() const {
  Rational det = 1;
  for (std::size_t k = 0; k < dim_; ++k) det *= basis_[k][k];
  return abs(det);
}

std::string Lattice::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (k) os << ", ";
    os << basis_[k];
  }
  os << '>';
  return os.str();
}

Lattice lattice_from_generators(std::span<const RatVec> gens) {
  if (gens.empty()) {
    throw Error(ErrorCode::kEmptyInput, "lattice needs at least one generator");
  }
  const std::size_t dim = gens.front().dim();
  check_dim_cap(dim);
  Integer scale = 1;
  for (const auto& g : gens) {
    require_same_dim(gens.front(), g);
    const Integer d = g.common_denominator();
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), d.get_mpz_t());
  }

  IntMatrix rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    IntVec r(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      Rational q = g[j] * scale;
      r[j] = q.get_num();
    }
    rows.push_back(std::move(r));
  }

  IntMatrix h = hnf(rows);
  if (h.size() < dim) {
    throw Error(ErrorCode::kNotFullRank, "generators span rank " +
                                             std::to_string(h.size()) + " < " +
                                             std::to_string(dim));
  }

  std::vector<RatVec> basis;
  basis.reserve(dim);
  Integer denom = 1;
  for (const auto& r : h) {
    RatVec v(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      v[j] = make_rational(r[j], scale);
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), v[j].get_den_mpz_t());
    }
    basis.push_back(std::move(v));
  }
  return Lattice(dim, std::move(basis), std::move(denom));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "lattice sum across dimensions");
  }
  std::vector<RatVec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return lattice_from_generators(gens);
}

Lattice dual_lattice(const Lattice& l) {
  const std::size_t d = l.dim();
  // Gauss-Jordan on [B | I]; rows of (B^-1)^T generate the dual.
  std::vector<std::vector<Rational>> aug(d, std::vector<Rational>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) aug[i][j] = l.basis()[i][j];
    aug[i][d + i] = 1;
  }
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (sgn(aug[p][c]) == 0) ++p;
    std::swap(aug[p], aug[c]);
    const Rational inv = 1 / aug[c][c];
    for (auto& x : aug[c]) x *= inv;
    for (std::size_t i = 0; i < d; ++i) {
      if (i == c || sgn(aug[i][c]) == 0) continue;
      const Rational f = aug[i][c];
      for (std::size_t k = 0; k < 2 * d; ++k) aug[i][k] -= f * aug[c][k];
    }
  }
  std::vector<RatVec> gens(d, RatVec(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) gens[j][i] = aug[i][d + j];
  }
  return lattice_from_generators(gens);
}

RatVec coordinates(const Lattice& l, const RatVec& v) {
  if (v.dim() != l.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector of dimension " + std::to_string(v.dim()) +
                    " against lattice of dimension " + std::to_string(l.dim()));
  }
  const auto& b = l.basis();
  const std::size_t d = l.dim();
  RatVec x(d);
  // Row k is supported on columns 0..k, so column j only sees rows k >= j.
  for (std::size_t j = d; j-- > 0;) {
    Rational rest = v[j];
    for (std::size_t k = j + 1; k < d; ++k) rest -= x[k] * b[k][j];
    x[j] = rest / b[j][j];
  }
  return x;
}

bool contains(const Lattice& l, const RatVec& v) {
  return coordinates(l, v).is_integral();
}

Integer index(const Lattice& sub, const Lattice& sup) {
  if (sub.dim() != sup.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "index across dimensions");
  }
  for (const auto& row : sub.basis()) {
    if (!contains(sup, row)) {
      throw Error(ErrorCode::kNotContained,
                  "basis vector " + row.to_string() +
                      " of the sublattice is not in the superlattice");
    }
  }
  const Rational ratio = sub.covolume() / sup.covolume();
  return ratio.get_num();
}

std::vector<RatVec> coordinate_section(const Lattice& l,
                                       std::span<const std::size_t> axes) {
  const std::size_t d = l.dim();
  std::vector<std::size_t> order;
  std::vector<bool> used(d, false);
  for (std::size_t a : axes) {
    if (a >= d || used[a]) {
      throw Error(ErrorCode::kBadIndexSet,
                  "axis list is not a set of coordinates of dimension " +
                      std::to_string(d));
    }
    used[a] = true;
    order.push_back(a);
  }
  for (std::size_t a = 0; a < d; ++a) {
    if (!used[a]) order.push_back(a);
  }

  const IntMatrix scaled = scaled_integer_basis(l);
  IntMatrix permuted(d, IntVec(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) permuted[i][j] = scaled[i][order[j]];
  }
  const IntMatrix h = hnf(permuted);

  // The first k rows of a triangular basis span the lattice points
  // supported on the first k (permuted) columns.
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < axes.size(); ++i) {
    RatVec v(d);
    for (std::size_t j = 0; j < d; ++j) {
      v[order[j]] = make_rational(h[i][j], l.denom());
    }
    out.push_back(std::move(v));
  }
  return out;
}

RatVec primitive_on_ray(const Lattice& l, std::size_t axis) {
  const std::size_t axes[] = {axis};
  return coordinate_section(l, axes).front();
}

std::pair<RatVec, Integer> primitive_part(const Lattice& l, const RatVec& v) {
  const RatVec x = coordinates(l, v);
  if (!x.is_integral()) {
    throw Error(ErrorCode::kNotContained,
                v.to_string() + " is not a lattice vector");
  }
  Integer g = 0;
  for (const auto& c : x) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g == 0) {
    throw Error(ErrorCode::kEmptyInput,
                "the zero vector has no primitive part");
  }
  RatVec v0 = v;
  v0 *= Rational(1) / Rational(g);
  return {std::move(v0), g};
}

}  // namespace qonash
