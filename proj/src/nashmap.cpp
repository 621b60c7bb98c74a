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

#include "qonash/nashmap.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qonash/error.hpp"

namespace qonash {
namespace {

bool strictly_below(const RatVec& a, const RatVec& b) {
  return a != b && leq_sigma(a, b);
}

void check_sing_face(IndexSet face, std::size_t dim, const std::string& who) {
  if (face.empty() || !face.is_subset_of(IndexSet::full(dim))) {
    throw Error(ErrorCode::kBadIndexSet,
                who + ": singular-locus face " + face.to_string() +
                    " is not a nonempty face of sigma");
  }
  if (face.size() > 2) {
    throw Error(ErrorCode::kBadIndexSet, who + ": singular-locus face " +
                                             face.to_string() +
                                             " has codimension above two");
  }
}

void check_extra_face(IndexSet face, std::size_t dim, const std::string& who) {
  if (face.empty() || !face.is_subset_of(IndexSet::full(dim))) {
    throw Error(ErrorCode::kBadIndexSet,
                who + ": extra face " + face.to_string() +
                    " is not a nonempty face of sigma");
  }
}

BranchReport analyze_branch_unlabelled(const BranchInput& input) {
  const std::string who = "branch '" + input.spec.label + "'";
  const std::size_t dim = input.spec.dim;

  BranchReport rep{.label = input.spec.label,
                   .spec = input.spec,
                   .sing_faces = input.sing_faces,
                   .extra_faces = input.extra_faces,
                   .contacts = input.contacts,
                   .lattices = build_tower(input.spec)};
  const Lattice& n = rep.lattices.N;

  std::vector<IndexSet> raw;
  for (IndexSet f : input.sing_faces) {
    check_sing_face(f, dim, who);
    raw.push_back(f);
  }
  for (IndexSet f : input.extra_faces) {
    check_extra_face(f, dim, who);
    raw.push_back(f);
  }
  for (const auto& c : input.contacts) {
    if (c.exponent.dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  who + ": contact exponent toward '" + c.other +
                      "' has dimension " + std::to_string(c.exponent.dim()));
    }
    const auto faces = contact_faces(c.exponent);
    raw.insert(raw.end(), faces.begin(), faces.end());
    if (!contains(rep.lattices.M, c.exponent)) {
      rep.diagnostics.push_back(
          {Diagnostic::Severity::kWarning, "CONTACT_NOT_IN_M",
           "contact exponent " + c.exponent.to_string() + " toward '" +
               c.other + "' is not in the exponent lattice M"});
    }
  }

  for (IndexSet f : all_nonempty_faces(dim)) {
    Face fd = face_data(n, f);
    if (!fd.regular) rep.singular_faces_of_sigma.push_back(f);
    rep.faces.push_back(std::move(fd));
  }
  if (input.sing_faces.empty() && !rep.singular_faces_of_sigma.empty()) {
    throw Error(ErrorCode::kBMissingSing,
                who + ": no singular-locus faces given, but face " +
                    rep.singular_faces_of_sigma.front().to_string() +
                    " of sigma is singular for N");
  }

  rep.relevant = componentize(raw);
  rep.s_min = minimal_toric_divisors(n);

  std::vector<Divisor> candidates;
  for (IndexSet f : rep.relevant.faces) {
    if (face_data(n, f).regular) candidates.push_back(barycenter(n, f));
  }
  auto ess = assemble_essential(std::move(candidates), rep.s_min);
  rep.E = std::move(ess.barycenters);
  rep.V = std::move(ess.minimal);
  rep.diagnostics.insert(rep.diagnostics.end(), ess.diagnostics.begin(),
                         ess.diagnostics.end());
  rep.nash_count = rep.E.size() + rep.V.size();

  if (rep.relevant.faces.empty()) {
    rep.diagnostics.push_back({Diagnostic::Severity::kWarning, "EMPTY_B",
                               "B is empty over this branch; nothing to "
                               "resolve"});
  }
  return rep;
}

}  // namespace

std::string severity_name(Diagnostic::Severity s) {
  return s == Diagnostic::Severity::kWarning ? "warning" : "violation";
}

std::vector<IndexSet> contact_faces(const RatVec& m) {
  if (!m.is_nonnegative()) {
    throw Error(
        ErrorCode::kNegativeExponent,
        "contact exponent " + m.to_string() + " has a negative coordinate");
  }
  if (m.is_zero()) {
    throw Error(ErrorCode::kZeroContact,
                "contact exponent is zero: a unit cuts out nothing, so the "
                "branches do not meet");
  }
  std::vector<IndexSet> out;
  for (std::size_t k = 0; k < m.dim(); ++k) {
    if (sgn(m[k]) > 0) {
      IndexSet s;
      s.insert(k);
      out.push_back(s);
    }
  }
  return out;
}

RelevantFaces componentize(std::span<const IndexSet> raw) {
  std::vector<IndexSet> faces(raw.begin(), raw.end());
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  RelevantFaces out;
  for (IndexSet f : faces) {
    const bool contains_smaller =
        std::any_of(faces.begin(), faces.end(),
                    [&](IndexSet g) { return g != f && g.is_subset_of(f); });
    if (!contains_smaller) out.faces.push_back(f);
  }
  return out;
}

EssentialDivisors assemble_essential(std::vector<Divisor> barycenters,
                                     std::span<const Divisor> s_min) {
  EssentialDivisors out;
  for (const auto& e : barycenters) {
    auto below = [&](const Divisor& w) {
      return strictly_below(w.vector, e.vector);
    };
    const Divisor* hit = nullptr;
    for (const auto& w : barycenters) {
      if (below(w)) hit = &w;
    }
    for (const auto& w : s_min) {
      if (below(w)) hit = &w;
    }
    if (hit) {
      out.diagnostics.push_back(
          {Diagnostic::Severity::kViolation, "LEMMA_MIN_VIOLATION",
           "barycenter " + e.vector.to_string() + " of face " +
               e.face.to_string() + " is strictly above " +
               hit->vector.to_string() + "; the face data is inconsistent"});
    }
  }
  for (const auto& v : s_min) {
    const bool dominated = std::any_of(
        barycenters.begin(), barycenters.end(),
        [&](const Divisor& e) { return strictly_below(e.vector, v.vector); });
    if (!dominated) out.minimal.push_back(v);
  }
  out.barycenters = std::move(barycenters);

  std::vector<const Divisor*> all;
  for (const auto& d : out.barycenters) all.push_back(&d);
  for (const auto& d : out.minimal) all.push_back(&d);
  for (const auto* a : all) {
    for (const auto* b : all) {
      if (a != b && leq_sigma(a->vector, b->vector)) {
        out.diagnostics.push_back(
            {Diagnostic::Severity::kViolation, "ANTICHAIN_VIOLATION",
             a->vector.to_string() + " <= " + b->vector.to_string() +
                 " among the essential divisors"});
      }
    }
  }
  return out;
}

EssentialDivisors essential_divisors(const Lattice& n,
                                     const RelevantFaces& relevant) {
  const auto s_min = minimal_toric_divisors(n);
  std::vector<Divisor> candidates;
  for (IndexSet f : relevant.faces) {
    if (face_data(n, f).regular) candidates.push_back(barycenter(n, f));
  }
  return assemble_essential(std::move(candidates), s_min);
}

BranchReport analyze_branch(const BranchInput& input) {
  try {
    return analyze_branch_unlabelled(input);
  } catch (const Error& e) {
    const std::string prefix = "branch '" + input.spec.label + "'";
    if (std::string_view(e.what()).starts_with(prefix)) throw;
    throw Error(e.code(), prefix + ": " + e.what());
  }
}

VarietyReport analyze_variety(std::span<const BranchInput> branches) {
  if (branches.empty()) {
    throw Error(ErrorCode::kEmptyInput, "variety has no branches");
  }
  const std::size_t dim = branches.front().spec.dim;
  std::map<std::string, std::size_t> by_label;
  for (std::size_t i = 0; i < branches.size(); ++i) {
    const auto& b = branches[i];
    if (b.spec.dim != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "branch '" + b.spec.label + "' has dimension " +
                      std::to_string(b.spec.dim) + ", expected " +
                      std::to_string(dim));
    }
    if (!by_label.emplace(b.spec.label, i).second) {
      throw Error(ErrorCode::kDuplicateLabel,
                  "branch label '" + b.spec.label + "' used twice");
    }
  }

  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& b : branches) {
    for (const auto& c : b.contacts) {
      if (c.other == b.spec.label) {
        throw Error(
            ErrorCode::kSelfContact,
            "branch '" + b.spec.label + "' lists a contact with itself");
      }
      if (!by_label.contains(c.other)) {
        throw Error(ErrorCode::kUnknownBranch, "branch '" + b.spec.label +
                                                   "' lists a contact with "
                                                   "unknown branch '" +
                                                   c.other + "'");
      }
      if (!edges.emplace(b.spec.label, c.other).second) {
        throw Error(ErrorCode::kDuplicateLabel,
                    "branch '" + b.spec.label + "' lists its contact with '" +
                        c.other + "' twice");
      }
    }
  }
  for (const auto& [from, to] : edges) {
    if (!edges.contains({to, from})) {
      throw Error(ErrorCode::kAsymmetricContact,
                  "branch '" + from + "' meets '" + to + "' but '" + to +
                      "' lists no contact with '" + from + "'");
    }
  }

  VarietyReport out;
  out.dim = dim;
  for (const auto& b : branches) {
    out.branches.push_back(analyze_branch(b));
    out.total_nash += out.branches.back().nash_count;
  }
  out.total_essential = out.total_nash;
  if (out.total_nash == 0) {
    out.diagnostics.push_back(
        {Diagnostic::Severity::kWarning, "NO_ESSENTIAL_DIVISORS",
         "no essential divisors: X is smooth or B is empty"});
  }
  return out;
}

}  // namespace qonash
