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

// Shorthands for the unit tests.

#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "qonash/error.hpp"
#include "qonash/intlat.hpp"

namespace qonash::testing {

inline Rational q(long num, long den = 1) { return make_rational(num, den); }

inline Lattice lat(std::vector<RatVec> gens) {
  return lattice_from_generators(gens);
}

inline Lattice z2() { return Lattice::standard(2); }

/// {v in Z^2 : v1 + v2 = 0 mod k}.
inline Lattice sum_mod(long k) { return lat({{q(k), q(0)}, {q(-1), q(1)}}); }

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::kSchema;
}

}  // namespace qonash::testing

namespace doctest {
template <>
struct StringMaker<qonash::RatVec> {
  static String convert(const qonash::RatVec& v) {
    return v.to_string().c_str();
  }
};
template <>
struct StringMaker<qonash::Lattice> {
  static String convert(const qonash::Lattice& l) {
    return l.to_string().c_str();
  }
};
template <>
struct StringMaker<qonash::ErrorCode> {
  static String convert(qonash::ErrorCode c) {
    return std::string(qonash::error_code_name(c)).c_str();
  }
};
}  // namespace doctest
