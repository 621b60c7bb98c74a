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

#include "qonash/variety_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <map>
#include <sstream>

#include "qonash/error.hpp"

namespace qonash::io {
namespace {

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& msg) {
  throw Error(ErrorCode::kSchema, path + ": " + msg);
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end())
    schema_error(path, std::string("missing \"") + key + "\"");
  return *it;
}

void check_object(const Json& j, const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* a) { return key == a; });
    if (!known) schema_error(path, "unknown key \"" + key + "\"");
  }
}

const Json& require_array(const Json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

long long integer_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<unsigned long long>() >
          static_cast<unsigned long long>(
              std::numeric_limits<long long>::max())) {
    schema_error(path, "integer out of range");
  }
  return j.get<long long>();
}

Integer big_from_json(const Json& j, const std::string& path) {
  return Integer(static_cast<long>(integer_from_json(j, path)));
}

Json integer_to_json(const Integer& z) {
  if (!z.fits_slong_p()) {
    throw Error(ErrorCode::kLimitExceeded,
                "integer " + z.get_str() + " does not fit the report format");
  }
  return Json(static_cast<long long>(z.get_si()));
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

std::string key(const std::string& path, const char* k) {
  return path + "." + k;
}

void check_description(const Json& obj, const std::string& path) {
  auto it = obj.find("description");
  if (it == obj.end() || it->is_string()) return;
  if (it->is_array() && std::all_of(it->begin(), it->end(), [](const Json& s) {
        return s.is_string();
      })) {
    return;
  }
  schema_error(key(path, "description"),
               "expected a string or a list of strings");
}

IndexSet face_from_json(const Json& j, std::size_t dim,
                        const std::string& path) {
  require_array(j, path);
  std::vector<long long> idx;
  for (std::size_t i = 0; i < j.size(); ++i) {
    idx.push_back(integer_from_json(j[i], at(path, i)));
  }
  try {
    return IndexSet::from_one_based(idx, dim);
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
}

Json face_to_json(IndexSet f) { return Json(f.one_based()); }

std::vector<IndexSet> faces_from_json(const Json& j, std::size_t dim,
                                      const std::string& path) {
  require_array(j, path);
  std::vector<IndexSet> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(face_from_json(j[i], dim, at(path, i)));
  }
  return out;
}

Json faces_to_json(const std::vector<IndexSet>& faces) {
  Json out = Json::array();
  for (IndexSet f : faces) out.push_back(face_to_json(f));
  return out;
}

RatVec vector_from_json_dim(const Json& j, std::size_t dim,
                            const std::string& path) {
  RatVec v = vector_from_json(j, path);
  if (v.dim() != dim) {
    schema_error(path, "expected " + std::to_string(dim) +
                           " coordinates, got " + std::to_string(v.dim()));
  }
  return v;
}

Json vectors_to_json(const std::vector<RatVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vector_to_json(v));
  return out;
}

std::vector<RatVec> vectors_from_json(const Json& j, std::size_t dim,
                                      const std::string& path) {
  require_array(j, path);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(vector_from_json_dim(j[i], dim, at(path, i)));
  }
  return out;
}

std::size_t size_from_json(const Json& j, const std::string& path) {
  const long long v = integer_from_json(j, path);
  if (v < 0) schema_error(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

// --- report pieces --------------------------------------------------------

Json divisor_to_json(const Divisor& d) {
  Json j;
  j["vector"] = vector_to_json(d.vector);
  j["primitive"] = vector_to_json(d.primitive);
  j["multiplicity"] = integer_to_json(d.multiplicity);
  j["origin"] = std::string(origin_name(d.origin));
  j["face"] = face_to_json(d.face);
  return j;
}

Divisor divisor_from_json(const Json& j, std::size_t dim,
                          const std::string& path) {
  check_object(j, path,
               {"vector", "primitive", "multiplicity", "origin", "face"});
  Divisor d;
  d.vector = vector_from_json_dim(require(j, "vector", path), dim,
                                  key(path, "vector"));
  d.primitive = vector_from_json_dim(require(j, "primitive", path), dim,
                                     key(path, "primitive"));
  d.multiplicity = big_from_json(require(j, "multiplicity", path),
                                 key(path, "multiplicity"));
  const Json& origin = require(j, "origin", path);
  if (origin == origin_name(DivisorOrigin::kBarycenter)) {
    d.origin = DivisorOrigin::kBarycenter;
  } else if (origin == origin_name(DivisorOrigin::kToricMinimal)) {
    d.origin = DivisorOrigin::kToricMinimal;
  } else {
    schema_error(key(path, "origin"), "unknown divisor origin");
  }
  d.face = face_from_json(require(j, "face", path), dim, key(path, "face"));
  return d;
}

Json divisors_to_json(const std::vector<Divisor>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) out.push_back(divisor_to_json(d));
  return out;
}

std::vector<Divisor> divisors_from_json(const Json& j, std::size_t dim,
                                        const std::string& path) {
  require_array(j, path);
  std::vector<Divisor> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(divisor_from_json(j[i], dim, at(path, i)));
  }
  return out;
}

Json diagnostics_to_json(const std::vector<Diagnostic>& ds) {
  Json out = Json::array();
  for (const auto& d : ds) {
    Json j;
    j["severity"] = severity_name(d.severity);
    j["code"] = d.code;
    j["message"] = d.message;
    out.push_back(std::move(j));
  }
  return out;
}

std::vector<Diagnostic> diagnostics_from_json(const Json& j,
                                              const std::string& path) {
  require_array(j, path);
  std::vector<Diagnostic> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = at(path, i);
    check_object(j[i], p, {"severity", "code", "message"});
    const Json& sev = require(j[i], "severity", p);
    Diagnostic d;
    if (sev == "warning") {
      d.severity = Diagnostic::Severity::kWarning;
    } else if (sev == "violation") {
      d.severity = Diagnostic::Severity::kViolation;
    } else {
      schema_error(key(p, "severity"), "unknown severity");
    }
    const Json& code = require(j[i], "code", p);
    const Json& msg = require(j[i], "message", p);
    if (!code.is_string() || !msg.is_string()) {
      schema_error(p, "code and message must be strings");
    }
    d.code = code.get<std::string>();
    d.message = msg.get<std::string>();
    out.push_back(std::move(d));
  }
  return out;
}

Json lattice_to_json(const Lattice& l) { return vectors_to_json(l.basis()); }

Lattice lattice_from_json(const Json& j, std::size_t dim,
                          const std::string& path) {
  try {
    return lattice_from_generators(vectors_from_json(j, dim, path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kSchema) throw;
    schema_error(path, e.what());
  }
}

Json branch_to_json(const BranchReport& b) {
  Json j;
  j["label"] = b.label;
  j["char_exponents"] = vectors_to_json(b.spec.char_exponents);
  j["sing_faces"] = faces_to_json(b.sing_faces);
  j["extra_faces"] = faces_to_json(b.extra_faces);
  Json contacts = Json::array();
  for (const auto& c : b.contacts) {
    Json cj;
    cj["to_label"] = c.other;
    cj["exponent"] = vector_to_json(c.exponent);
    contacts.push_back(std::move(cj));
  }
  j["contacts"] = std::move(contacts);

  Json lat;
  Json tower = Json::array();
  for (std::size_t k = 0; k < b.lattices.tower.size(); ++k) {
    Json step;
    step["basis"] = lattice_to_json(b.lattices.tower[k]);
    step["index_over_previous"] =
        integer_to_json(k == 0 ? Integer(1) : b.lattices.step_indices[k - 1]);
    tower.push_back(std::move(step));
  }
  lat["tower"] = std::move(tower);
  lat["M"] = lattice_to_json(b.lattices.M);
  lat["N"] = lattice_to_json(b.lattices.N);
  lat["degree_n"] = integer_to_json(b.lattices.degree_n);
  j["lattices"] = std::move(lat);

  Json faces = Json::array();
  for (const auto& f : b.faces) {
    Json fj;
    fj["face"] = face_to_json(f.indices);
    fj["primitive_generators"] = vectors_to_json(f.primgens);
    fj["index"] = integer_to_json(f.index);
    fj["regular"] = f.regular;
    faces.push_back(std::move(fj));
  }
  j["faces"] = std::move(faces);
  j["singular_faces"] = faces_to_json(b.singular_faces_of_sigma);
  j["relevant_faces"] = faces_to_json(b.relevant.faces);
  j["S_min"] = divisors_to_json(b.s_min);
  j["E"] = divisors_to_json(b.E);
  j["V"] = divisors_to_json(b.V);
  j["nash_count"] = b.nash_count;
  j["diagnostics"] = diagnostics_to_json(b.diagnostics);
  return j;
}

BranchReport branch_from_json(const Json& j, std::size_t dim,
                              const std::string& path) {
  check_object(
      j, path,
      {"label", "char_exponents", "sing_faces", "extra_faces", "contacts",
       "lattices", "faces", "singular_faces", "relevant_faces", "S_min", "E",
       "V", "nash_count", "diagnostics"});
  const Json& label = require(j, "label", path);
  if (!label.is_string()) schema_error(key(path, "label"), "expected a string");

  const std::string lp = key(path, "lattices");
  const Json& lat = require(j, "lattices", path);
  check_object(lat, lp, {"tower", "M", "N", "degree_n"});
  const Json& tower =
      require_array(require(lat, "tower", lp), key(lp, "tower"));
  std::vector<Lattice> lattices;
  std::vector<Integer> steps;
  for (std::size_t k = 0; k < tower.size(); ++k) {
    const std::string p = at(key(lp, "tower"), k);
    check_object(tower[k], p, {"basis", "index_over_previous"});
    lattices.push_back(
        lattice_from_json(require(tower[k], "basis", p), dim, key(p, "basis")));
    Integer step = big_from_json(require(tower[k], "index_over_previous", p),
                                 key(p, "index_over_previous"));
    if (k > 0) steps.push_back(std::move(step));
  }
  if (lattices.empty()) schema_error(key(lp, "tower"), "tower is empty");

  BranchReport b{
      .label = label.get<std::string>(),
      .spec = {},
      .sing_faces = {},
      .extra_faces = {},
      .contacts = {},
      .lattices = BranchLattices{
          std::move(lattices), std::move(steps),
          lattice_from_json(require(lat, "M", lp), dim, key(lp, "M")),
          lattice_from_json(require(lat, "N", lp), dim, key(lp, "N")),
          big_from_json(require(lat, "degree_n", lp), key(lp, "degree_n"))}};
  b.spec = BranchSpec{dim,
                      vectors_from_json(require(j, "char_exponents", path), dim,
                                        key(path, "char_exponents")),
                      b.label};
  b.sing_faces = faces_from_json(require(j, "sing_faces", path), dim,
                                 key(path, "sing_faces"));
  b.extra_faces = faces_from_json(require(j, "extra_faces", path), dim,
                                  key(path, "extra_faces"));
  const Json& contacts =
      require_array(require(j, "contacts", path), key(path, "contacts"));
  for (std::size_t i = 0; i < contacts.size(); ++i) {
    const std::string p = at(key(path, "contacts"), i);
    check_object(contacts[i], p, {"to_label", "exponent"});
    const Json& to = require(contacts[i], "to_label", p);
    if (!to.is_string()) schema_error(key(p, "to_label"), "expected a string");
    b.contacts.push_back(
        {to.get<std::string>(),
         vector_from_json_dim(require(contacts[i], "exponent", p), dim,
                              key(p, "exponent"))});
  }

  const Json& faces =
      require_array(require(j, "faces", path), key(path, "faces"));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const std::string p = at(key(path, "faces"), i);
    check_object(faces[i], p,
                 {"face", "primitive_generators", "index", "regular"});
    Face f;
    f.indices =
        face_from_json(require(faces[i], "face", p), dim, key(p, "face"));
    f.primgens = vectors_from_json(require(faces[i], "primitive_generators", p),
                                   dim, key(p, "primitive_generators"));
    f.index = big_from_json(require(faces[i], "index", p), key(p, "index"));
    const Json& reg = require(faces[i], "regular", p);
    if (!reg.is_boolean())
      schema_error(key(p, "regular"), "expected a boolean");
    f.regular = reg.get<bool>();
    b.faces.push_back(std::move(f));
  }
  b.singular_faces_of_sigma = faces_from_json(
      require(j, "singular_faces", path), dim, key(path, "singular_faces"));
  b.relevant.faces = faces_from_json(require(j, "relevant_faces", path), dim,
                                     key(path, "relevant_faces"));
  b.s_min =
      divisors_from_json(require(j, "S_min", path), dim, key(path, "S_min"));
  b.E = divisors_from_json(require(j, "E", path), dim, key(path, "E"));
  b.V = divisors_from_json(require(j, "V", path), dim, key(path, "V"));
  b.nash_count =
      size_from_json(require(j, "nash_count", path), key(path, "nash_count"));
  if (b.nash_count != b.E.size() + b.V.size()) {
    schema_error(key(path, "nash_count"), "does not equal |E| + |V|");
  }
  b.diagnostics = diagnostics_from_json(require(j, "diagnostics", path),
                                        key(path, "diagnostics"));
  return b;
}

void check_schema_version(const Json& doc) {
  const Json& v = require(doc, "schema_version", "$");
  if (!v.is_number_integer() || v.get<long long>() != kSchemaVersion) {
    schema_error("$.schema_version", "unsupported schema version (expected " +
                                         std::to_string(kSchemaVersion) + ")");
  }
}

std::size_t dim_from_json(const Json& doc) {
  const std::size_t dim = size_from_json(require(doc, "dim", "$"), "$.dim");
  if (dim < 1 || dim > kMaxDimension) {
    schema_error("$.dim",
                 "dimension must be in 1.." + std::to_string(kMaxDimension));
  }
  return dim;
}

}  // namespace

Json rational_to_json(const Rational& q) {
  return Json::array(
      {integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) {
    schema_error(path, "expected a rational [numerator, denominator]");
  }
  const long long num = integer_from_json(j[0], path + "[0]");
  const long long den = integer_from_json(j[1], path + "[1]");
  if (den <= 0) schema_error(path + "[1]", "denominator must be positive");
  return make_rational(Integer(static_cast<long>(num)),
                       Integer(static_cast<long>(den)));
}

Json vector_to_json(const RatVec& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(rational_to_json(q));
  return out;
}

RatVec vector_from_json(const Json& j, const std::string& path) {
  require_array(j, path);
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.push_back(rational_from_json(j[i], at(path, i)));
  }
  return RatVec(std::move(coords));
}

std::vector<BranchInput> parse_variety(const Json& doc) {
  check_object(
      doc, "$",
      {"schema_version", "description", "dim", "branches", "contacts"});
  check_schema_version(doc);
  check_description(doc, "$");
  const std::size_t dim = dim_from_json(doc);

  const Json& branches =
      require_array(require(doc, "branches", "$"), "$.branches");
  if (branches.empty())
    schema_error("$.branches", "at least one branch required");
  std::vector<BranchInput> out;
  std::map<std::string, std::size_t> by_label;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const std::string p = at("$.branches", i);
    const Json& b = branches[i];
    check_object(b, p,
                 {"label", "description", "char_exponents", "sing_faces",
                  "extra_faces"});
    check_description(b, p);
    const Json& label = require(b, "label", p);
    if (!label.is_string() || label.get<std::string>().empty()) {
      schema_error(key(p, "label"), "expected a nonempty string");
    }
    BranchInput in;
    in.spec.dim = dim;
    in.spec.label = label.get<std::string>();
    if (!by_label.emplace(in.spec.label, i).second) {
      throw Error(
          ErrorCode::kDuplicateLabel,
          key(p, "label") + ": label '" + in.spec.label + "' used twice");
    }
    in.spec.char_exponents = vectors_from_json(require(b, "char_exponents", p),
                                               dim, key(p, "char_exponents"));
    in.sing_faces =
        faces_from_json(require(b, "sing_faces", p), dim, key(p, "sing_faces"));
    if (auto it = b.find("extra_faces"); it != b.end()) {
      in.extra_faces = faces_from_json(*it, dim, key(p, "extra_faces"));
    }
    out.push_back(std::move(in));
  }

  if (auto it = doc.find("contacts"); it != doc.end()) {
    require_array(*it, "$.contacts");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const std::string p = at("$.contacts", i);
      const Json& c = (*it)[i];
      check_object(c, p, {"from_label", "to_label", "exponent"});
      const Json& from = require(c, "from_label", p);
      const Json& to = require(c, "to_label", p);
      if (!from.is_string())
        schema_error(key(p, "from_label"), "expected a string");
      if (!to.is_string())
        schema_error(key(p, "to_label"), "expected a string");
      auto src = by_label.find(from.get<std::string>());
      if (src == by_label.end()) {
        throw Error(ErrorCode::kUnknownBranch,
                    key(p, "from_label") + ": no branch labelled '" +
                        from.get<std::string>() + "'");
      }
      if (!by_label.contains(to.get<std::string>())) {
        throw Error(ErrorCode::kUnknownBranch, key(p, "to_label") +
                                                   ": no branch labelled '" +
                                                   to.get<std::string>() + "'");
      }
      out[src->second].contacts.push_back(
          {to.get<std::string>(),
           vector_from_json_dim(require(c, "exponent", p), dim,
                                key(p, "exponent"))});
    }
  }
  return out;
}

std::vector<BranchInput> parse_variety_text(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kSchema,
                std::string("$: invalid JSON: ") + e.what());
  }
  return parse_variety(doc);
}

Json report_to_json(const VarietyReport& report) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["dim"] = report.dim;
  Json branches = Json::array();
  for (const auto& b : report.branches) branches.push_back(branch_to_json(b));
  j["branches"] = std::move(branches);
  j["total_nash"] = report.total_nash;
  j["total_essential"] = report.total_essential;
  j["diagnostics"] = diagnostics_to_json(report.diagnostics);
  return j;
}

VarietyReport report_from_json(const Json& doc) {
  check_object(doc, "$",
               {"schema_version", "dim", "branches", "total_nash",
                "total_essential", "diagnostics"});
  check_schema_version(doc);
  VarietyReport r;
  r.dim = dim_from_json(doc);
  const Json& branches =
      require_array(require(doc, "branches", "$"), "$.branches");
  for (std::size_t i = 0; i < branches.size(); ++i) {
    r.branches.push_back(
        branch_from_json(branches[i], r.dim, at("$.branches", i)));
  }
  r.total_nash =
      size_from_json(require(doc, "total_nash", "$"), "$.total_nash");
  r.total_essential =
      size_from_json(require(doc, "total_essential", "$"), "$.total_essential");
  std::size_t sum = 0;
  for (const auto& b : r.branches) sum += b.nash_count;
  if (r.total_nash != sum || r.total_essential != sum) {
    schema_error("$.total_nash", "totals disagree with the branch counts");
  }
  r.diagnostics =
      diagnostics_from_json(require(doc, "diagnostics", "$"), "$.diagnostics");
  return r;
}

std::string format_json(const VarietyReport& report) {
  return report_to_json(report).dump(2) + "\n";
}

namespace {

std::string join_faces(const std::vector<IndexSet>& faces) {
  if (faces.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (i) s += " ";
    s += faces[i].to_string();
  }
  return s;
}

std::string divisor_text(const Divisor& d) {
  std::string s = d.vector.to_string();
  if (d.multiplicity != 1) {
    s += " = " + d.multiplicity.get_str() + "*" + d.primitive.to_string();
  }
  return s + " on " + d.face.to_string();
}

void list_divisors(std::ostringstream& os, const char* title,
                   const std::vector<Divisor>& ds) {
  os << "  " << title << ":";
  if (ds.empty()) os << " none";
  os << "\n";
  for (const auto& d : ds) os << "    " << divisor_text(d) << "\n";
}

void list_diagnostics(std::ostringstream& os, const std::vector<Diagnostic>& ds,
                      const char* indent) {
  for (const auto& d : ds) {
    os << indent << severity_name(d.severity) << "[" << d.code
       << "]: " << d.message << "\n";
  }
}

}  // namespace

std::string format_text(const VarietyReport& report) {
  std::ostringstream os;
  os << "quasi-ordinary germ in dimension d = " << report.dim << ", "
     << report.branches.size() << " branch"
     << (report.branches.size() == 1 ? "" : "es") << "\n";
  for (const auto& b : report.branches) {
    os << "\nbranch '" << b.label << "'\n";
    os << "  characteristic exponents:";
    if (b.spec.char_exponents.empty()) os << " none (smooth)";
    for (const auto& l : b.spec.char_exponents) os << " " << l;
    os << "\n  lattice tower:\n";
    for (std::size_t k = 0; k < b.lattices.tower.size(); ++k) {
      os << "    M_" << k << " = " << b.lattices.tower[k].to_string();
      if (k > 0) {
        os << "  [M_" << k << " : M_" << k - 1
           << "] = " << b.lattices.step_indices[k - 1];
      }
      os << "\n";
    }
    os << "  N = " << b.lattices.N.to_string() << "\n";
    os << "  degree n = [M : Z^d] = " << b.lattices.degree_n << "\n";
    os << "  faces of sigma:\n";
    for (const auto& f : b.faces) {
      os << "    " << f.indices.to_string() << "  p =";
      for (const auto& p : f.primgens) os << " " << p;
      os << "  index " << f.index << (f.regular ? "  regular" : "  singular")
         << "\n";
    }
    os << "  singular faces: " << join_faces(b.singular_faces_of_sigma) << "\n";
    os << "  singular-locus faces: " << join_faces(b.sing_faces) << "\n";
    os << "  extra faces: " << join_faces(b.extra_faces) << "\n";
    os << "  contacts:";
    if (b.contacts.empty()) os << " none";
    for (const auto& c : b.contacts)
      os << " '" << c.other << "' m = " << c.exponent;
    os << "\n  relevant faces: " << join_faces(b.relevant.faces) << "\n";
    list_divisors(os, "S_min", b.s_min);
    list_divisors(os, "E (barycenters)", b.E);
    list_divisors(os, "V (surviving minimal vectors)", b.V);
    os << "  Nash components = essential divisors = " << b.nash_count << "\n";
    list_diagnostics(os, b.diagnostics, "  ");
  }
  os << "\ntotal: " << report.total_nash << " Nash components, "
     << report.total_essential << " essential divisors\n";
  list_diagnostics(os, report.diagnostics, "");
  return os.str();
}

}  // namespace qonash::io
