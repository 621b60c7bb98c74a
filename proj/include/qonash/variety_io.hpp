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

// JSON variety files and reports (schema_version 1).
//
// Rationals are always [num, den] with den > 0; face index sets are
// 1-based lists of axes. A variety file looks like
//
//   {
//     "schema_version": 1,
//     "dim": 2,
//     "branches": [
//       {"label": "A1", "char_exponents": [[[1, 2], [1, 2]]],
//        "sing_faces": [[1, 2]], "extra_faces": []}
//     ],
//     "contacts": [
//       {"from_label": "A1", "to_label": "L", "exponent": [[1, 2], [1, 2]]}
//     ]
//   }
//
// "description" (string or list of strings) is accepted at the top level
// and on branches and ignored. "extra_faces" and "contacts" are optional.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qonash/nashmap.hpp"

namespace qonash::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Parses a variety file into branch inputs, in file order. Schema
/// problems raise kSchema with a JSON path in the message.
std::vector<BranchInput> parse_variety(const Json& doc);
std::vector<BranchInput> parse_variety_text(const std::string& text);

Json report_to_json(const VarietyReport& report);
/// Inverse of report_to_json.
VarietyReport report_from_json(const Json& doc);

std::string format_text(const VarietyReport& report);
/// Two-space indented JSON followed by a newline.
std::string format_json(const VarietyReport& report);

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path);
Json vector_to_json(const RatVec& v);
RatVec vector_from_json(const Json& j, const std::string& path);

}  // namespace qonash::io
