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

#include "golden.hpp"
#include "helpers.hpp"
#include "qonash/variety_io.hpp"

namespace qonash {
namespace {

using testing::code_of;
using testing::q;

const char* kWhitney = R"({
  "schema_version": 1,
  "dim": 2,
  "branches": [
    {"label": "w", "char_exponents": [[[1, 1], [1, 2]]], "sing_faces": [[1]]}
  ]
})";

std::string with(const std::string& from, const std::string& to) {
  std::string s = kWhitney;
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

std::string schema_message(const std::string& text) {
  try {
    io::parse_variety_text(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kSchema);
    return e.what();
  }
  FAIL("expected a schema error");
  return {};
}

TEST_CASE("parse a minimal variety") {
  const auto bs = io::parse_variety_text(kWhitney);
  REQUIRE(bs.size() == 1);
  CHECK(bs[0].spec.label == "w");
  CHECK(bs[0].spec.dim == 2);
  CHECK(bs[0].spec.char_exponents == std::vector<RatVec>{{q(1), q(1, 2)}});
  CHECK(bs[0].sing_faces == std::vector<IndexSet>{IndexSet::from_mask(1)});
  CHECK(bs[0].extra_faces.empty());
  CHECK(bs[0].contacts.empty());
}

TEST_CASE("rationals are canonicalized on input") {
  const auto bs =
      io::parse_variety_text(with("[[1, 1], [1, 2]]", "[[2, 2], [2, 4]]"));
  CHECK(bs[0].spec.char_exponents == std::vector<RatVec>{{q(1), q(1, 2)}});
}

TEST_CASE("schema errors carry a JSON path") {
  CHECK(schema_message(with("[1, 2]]]", "[1, 0]]]"))
            .find("$.branches[0].char_exponents[0][1][1]") !=
        std::string::npos);
  CHECK(schema_message(with("\"dim\": 2", "\"dim\": 2, \"colour\": 1"))
            .find("unknown key \"colour\"") != std::string::npos);
  CHECK(schema_message(with("\"schema_version\": 1", "\"schema_version\": 2"))
            .find("$.schema_version") != std::string::npos);
  CHECK(schema_message(with("[[1]]", "[[3]]"))
            .find("$.branches[0].sing_faces[0]") != std::string::npos);
  CHECK(schema_message(with("[[1, 1], [1, 2]]", "[[1, 1]]"))
            .find("expected 2 coordinates") != std::string::npos);
  CHECK(schema_message(with("\"label\": \"w\", ", ""))
            .find("missing \"label\"") != std::string::npos);
  CHECK(schema_message("{not json").find("invalid JSON") != std::string::npos);
  CHECK(schema_message(with("\"dim\": 2", "\"dim\": 0")).find("$.dim") !=
        std::string::npos);
}

TEST_CASE("contacts resolve labels") {
  const std::string two = R"({
    "schema_version": 1, "dim": 2,
    "branches": [
      {"label": "a", "char_exponents": [], "sing_faces": []},
      {"label": "b", "char_exponents": [], "sing_faces": []}
    ],
    "contacts": [
      {"from_label": "a", "to_label": "b", "exponent": [[1, 1], [0, 1]]},
      {"from_label": "b", "to_label": "a", "exponent": [[1, 1], [0, 1]]}
    ]
  })";
  const auto bs = io::parse_variety_text(two);
  REQUIRE(bs[0].contacts.size() == 1);
  CHECK(bs[0].contacts[0].other == "b");
  CHECK(bs[0].contacts[0].exponent == RatVec{q(1), q(0)});

  std::string ghost = two;
  ghost.replace(ghost.find("\"to_label\": \"b\""), 15, "\"to_label\": \"z\"");
  CHECK(code_of([&] { io::parse_variety_text(ghost); }) ==
        ErrorCode::kUnknownBranch);

  std::string dup = two;
  dup.replace(dup.find("\"label\": \"b\""), 12, "\"label\": \"a\"");
  CHECK(code_of([&] { io::parse_variety_text(dup); }) ==
        ErrorCode::kDuplicateLabel);
}

TEST_CASE("report round trip is byte-identical on the corpus") {
  for (const auto& name : testing::corpus_names()) {
    if (name == "not_characteristic") continue;
    CAPTURE(name);
    const auto report =
        analyze_variety(io::parse_variety_text(testing::read_file(
            std::string(QONASH_CORPUS_DIR) + "/" + name + ".json")));
    const std::string first = io::format_json(report);
    const auto back = io::report_from_json(io::Json::parse(first));
    CHECK(io::format_json(back) == first);
    CHECK(io::format_text(back) == io::format_text(report));
  }
}

TEST_CASE("report_from_json rejects malformed reports") {
  const auto report = analyze_variety(io::parse_variety_text(kWhitney));
  io::Json j = io::report_to_json(report);
  j["branches"][0]["nash_count"] = 7;
  CHECK(code_of([&] { io::report_from_json(j); }) == ErrorCode::kSchema);
  io::Json k = io::report_to_json(report);
  k.erase("total_nash");
  CHECK(code_of([&] { io::report_from_json(k); }) == ErrorCode::kSchema);
}

TEST_CASE("rational json helpers") {
  CHECK(io::rational_to_json(q(-3, 6)).dump() == "[-1,2]");
  CHECK(io::rational_from_json(io::Json::parse("[4, 6]"), "$") == q(2, 3));
  CHECK(code_of([] {
          io::rational_from_json(io::Json::parse("[1, -2]"), "$");
        }) == ErrorCode::kSchema);
  CHECK(code_of([] { io::rational_from_json(io::Json::parse("0.5"), "$"); }) ==
        ErrorCode::kSchema);
  CHECK(io::vector_to_json({q(1), q(1, 2)}).dump() == "[[1,1],[1,2]]");
}

}  // namespace
}  // namespace qonash
