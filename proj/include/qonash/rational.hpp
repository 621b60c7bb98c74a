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

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace qonash {

using Integer = mpz_class;
using Rational = mpq_class;

/// Ambient dimensions above this are rejected: face enumeration is 2^d.
inline constexpr std::size_t kMaxDimension = 16;

/// Builds a canonical rational num/den. Throws on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Exact rational vector in ambient d-space.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t dim) : coords_(dim) {}
  explicit RatVec(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  RatVec(std::initializer_list<Rational> coords) : coords_(coords) {}

  /// Standard basis vector e_k (0-based k).
  static RatVec unit(std::size_t dim, std::size_t k);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;
  bool is_nonnegative() const;
  bool is_integral() const;
  /// Least positive integer D with D * this integral.
  Integer common_denominator() const;

  RatVec& operator+=(const RatVec& other);
  RatVec& operator-=(const RatVec& other);
  RatVec& operator*=(const Rational& scale);

  friend RatVec operator+(RatVec a, const RatVec& b) { return a += b; }
  friend RatVec operator-(RatVec a, const RatVec& b) { return a -= b; }
  friend RatVec operator*(const Rational& s, RatVec v) { return v *= s; }

  friend bool operator==(const RatVec& a, const RatVec& b);
  /// Lexicographic on coordinates; used for deterministic set ordering.
  friend std::strong_ordering operator<=>(const RatVec& a, const RatVec& b);

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const RatVec& v);

/// <a, b>; throws kDimensionMismatch.
Rational dot(const RatVec& a, const RatVec& b);

/// Throws kDimensionMismatch unless a.dim() == b.dim().
void require_same_dim(const RatVec& a, const RatVec& b);

std::string rational_to_string(const Rational& q);

/// floor(q) as an integer.
Integer floor_of(const Rational& q);

}  // namespace qonash
