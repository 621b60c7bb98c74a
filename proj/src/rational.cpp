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

#include "qonash/rational.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "qonash/error.hpp"

namespace qonash {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) {
    throw Error(ErrorCode::kSchema, "zero denominator");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

RatVec RatVec::unit(std::size_t dim, std::size_t k) {
  RatVec v(dim);
  v[k] = 1;
  return v;
}

bool RatVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return sgn(q) == 0; });
}

bool RatVec::is_nonnegative() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return sgn(q) >= 0; });
}

bool RatVec::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q.get_den() == 1; });
}

Integer RatVec::common_denominator() const {
  Integer d = 1;
  for (const auto& q : coords_) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
  }
  return d;
}

RatVec& RatVec::operator+=(const RatVec& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& other) {
  require_same_dim(*this, other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other[i];
  return *this;
}

RatVec& RatVec::operator*=(const Rational& scale) {
  for (auto& q : coords_) q *= scale;
  return *this;
}

bool operator==(const RatVec& a, const RatVec& b) {
  return a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const RatVec& a, const RatVec& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    const int c = cmp(a[i], b[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return a.dim() <=> b.dim();
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string RatVec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ", ";
    os << rational_to_string(coords_[i]);
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RatVec& v) {
  return os << v.to_string();
}

void require_same_dim(const RatVec& a, const RatVec& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vectors of dimension " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
}

Rational dot(const RatVec& a, const RatVec& b) {
  require_same_dim(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

}  // namespace qonash
