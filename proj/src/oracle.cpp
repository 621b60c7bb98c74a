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

#include "qonash/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "qonash/error.hpp"

namespace qonash::oracle {
namespace {

using Grid = std::vector<std::vector<Integer>>;

Integer laplace_det(const Grid& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Integer> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const Integer term = m[0][c] * laplace_det(minor);
    if (c % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

std::int64_t to_i64(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorCode::kLimitExceeded,
                std::string("oracle: ") + what + " exceeds machine range");
  }
  return z.get_si();
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// x = y B with B the integer basis, so y = x adj(B) / det(B): x lies in N
// exactly when every entry of x adj(B) is divisible by det(B).
class Membership {
 public:
  explicit Membership(const Lattice& n) : dim_(n.dim()) {
    if (n.denom() != 1) {
      throw Error(ErrorCode::kNotSublatticeOfZd,
                  "oracle: N = " + n.to_string() + " is not inside Z^d");
    }
    Grid b(dim_, std::vector<Integer>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j)
        b[i][j] = n.basis()[i][j].get_num();
    }
    const Integer det = laplace_det(b);
    det_ = std::abs(to_i64(det, "determinant"));
    const bool negative = det < 0;
    const Integer det_z = abs(det);
    adj_.assign(dim_, std::vector<std::int64_t>(dim_));
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        // adj(B)[i][j] = (-1)^(i+j) * minor of B without row j, column i.
        Grid minor;
        for (std::size_t r = 0; r < dim_; ++r) {
          if (r == j) continue;
          std::vector<Integer> row;
          for (std::size_t c = 0; c < dim_; ++c) {
            if (c != i) row.push_back(b[r][c]);
          }
          minor.push_back(std::move(row));
        }
        Integer cof = laplace_det(minor);
        if ((i + j) % 2 == 1) cof = -cof;
        if (negative) cof = -cof;  // pair with |det|
        adj_[i][j] = mod(to_i64(cof % det_z, "cofactor"), det_);
      }
    }
  }

  std::size_t dim() const { return dim_; }
  std::int64_t det() const { return det_; }
  /// Row i of adj(B) reduced mod det, for incremental walks.
  const std::vector<std::int64_t>& adj_row(std::size_t i) const {
    return adj_[i];
  }

  bool contains(const std::vector<std::int64_t>& x) const {
    for (std::size_t j = 0; j < dim_; ++j) {
      __int128 s = 0;
      for (std::size_t i = 0; i < dim_; ++i) {
        s += static_cast<__int128>(x[i]) * adj_[i][j];
      }
      if (s % det_ != 0) return false;
    }
    return true;
  }

 private:
  std::size_t dim_;
  std::int64_t det_ = 1;
  std::vector<std::vector<std::int64_t>> adj_;
};

std::int64_t edge_length(const Membership& mem, std::size_t axis) {
  std::vector<std::int64_t> x(mem.dim(), 0);
  for (std::int64_t t = 1;; ++t) {
    x[axis] = t;
    if (mem.contains(x)) return t;
  }
}

std::int64_t face_index(const Membership& mem, IndexSet face,
                        const std::vector<std::int64_t>& lengths) {
  const auto axes = face.axes();
  std::vector<std::int64_t> x(mem.dim(), 0);
  for (std::size_t a : axes) x[a] = 1;
  std::int64_t count = 0;
  for (;;) {
    if (mem.contains(x)) ++count;
    std::size_t k = 0;
    while (k < axes.size() && x[axes[k]] == lengths[axes[k]]) {
      x[axes[k]] = 1;
      ++k;
    }
    if (k == axes.size()) break;
    ++x[axes[k]];
  }
  return count;
}

}  // namespace

std::int64_t brute_edge_length(const Lattice& n, std::size_t axis) {
  if (axis >= n.dim()) {
    throw Error(ErrorCode::kBadIndexSet, "oracle: axis out of range");
  }
  return edge_length(Membership(n), axis);
}

std::int64_t brute_face_index(const Lattice& n, IndexSet face) {
  if (face.empty() || !face.is_subset_of(IndexSet::full(n.dim()))) {
    throw Error(ErrorCode::kBadIndexSet,
                "oracle: face " + face.to_string() + " is not a nonempty face");
  }
  const Membership mem(n);
  std::vector<std::int64_t> lengths(n.dim(), 0);
  for (std::size_t a : face.axes()) lengths[a] = edge_length(mem, a);
  return face_index(mem, face, lengths);
}

std::vector<RatVec> brute_minimal_S(const Lattice& n, std::int64_t bound) {
  const Membership mem(n);
  const std::size_t d = n.dim();

  std::vector<std::int64_t> lengths(d);
  for (std::size_t a = 0; a < d; ++a) {
    lengths[a] = edge_length(mem, a);
    if (lengths[a] > bound) {
      throw Error(ErrorCode::kBoundTooSmall,
                  "oracle: bound " + std::to_string(bound) +
                      " is below edge length " + std::to_string(lengths[a]) +
                      " on axis " + std::to_string(a + 1));
    }
  }

  const std::uint32_t full = IndexSet::full(d).mask();
  std::vector<bool> singular(full + 1, false);
  for (std::uint32_t m = 1; m <= full; ++m) {
    singular[m] = face_index(mem, IndexSet::from_mask(m), lengths) > 1;
  }

  // Walk [0, bound]^d keeping x adj(B) mod det incrementally.
  const std::int64_t det = mem.det();
  std::vector<std::int64_t> x(d, 0), residue(d, 0);
  std::vector<std::vector<std::int64_t>> in_s;
  for (;;) {
    std::uint32_t support = 0;
    bool member = true;
    for (std::size_t j = 0; j < d; ++j) {
      if (x[j] != 0) support |= (std::uint32_t{1} << j);
      if (residue[j] != 0) member = false;
    }
    if (member && support != 0 && singular[support]) in_s.push_back(x);

    std::size_t k = 0;
    while (k < d && x[k] == bound) {
      for (std::size_t j = 0; j < d; ++j) {
        residue[j] = mod(residue[j] - static_cast<std::int64_t>(
                                          static_cast<__int128>(bound) *
                                          mem.adj_row(k)[j] % det),
                         det);
      }
      x[k] = 0;
      ++k;
    }
    if (k == d) break;
    ++x[k];
    for (std::size_t j = 0; j < d; ++j) {
      residue[j] = (residue[j] + mem.adj_row(k)[j]) % det;
    }
  }

  // A point is minimal iff no minimal point found earlier (smaller
  // coordinate sum) lies below it.
  auto sum = [](const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t{0});
  };
  std::stable_sort(in_s.begin(), in_s.end(), [&](const auto& a, const auto& b) {
    return sum(a) < sum(b);
  });
  std::vector<std::vector<std::int64_t>> minimal;
  for (const auto& p : in_s) {
    const bool dominated =
        std::any_of(minimal.begin(), minimal.end(), [&](const auto& m) {
          for (std::size_t j = 0; j < d; ++j) {
            if (m[j] > p[j]) return false;
          }
          return true;
        });
    if (!dominated) minimal.push_back(p);
  }

  std::vector<RatVec> out;
  for (const auto& m : minimal) {
    RatVec v(d);
    for (std::size_t j = 0; j < d; ++j)
      v[j] = Rational(static_cast<long>(m[j]));
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qonash::oracle
