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

// Essential divisors and Nash components of a quasi-ordinary germ.
//
// For one branch with normalization the toric germ (sigma, N) and a closed
// subset B whose preimage is a union of orbit closures, the essential
// divisors over the branch relative to B are labelled by
//   E = barycenters of the regular faces among the components of nu^-1(B),
//   V = minimal elements of S not dominated by any member of E,
// and the Nash components correspond to them one to one. A reducible germ
// splits into its branches X_i with B_i = X_i cap Sing(X); the counts add.

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "qonash/conegeom.hpp"
#include "qonash/index_set.hpp"
#include "qonash/qobranch.hpp"

namespace qonash {

/// Orbit-closure components of nu^-1(B), as inclusion-minimal faces.
struct RelevantFaces {
  std::vector<IndexSet> faces;
};

/// Exponent of the monomial cutting out this branch's meeting with
/// another branch, in this branch's normalization.
struct Contact {
  std::string other;
  RatVec exponent;
};

struct BranchInput {
  BranchSpec spec;
  /// Components of Sing of the branch: {i} for X cap {x_i = 0},
  /// {i, j} for X cap {x_i = x_j = 0}. Larger sets are rejected.
  std::vector<IndexSet> sing_faces;
  /// Optional enlargement of B; any nonempty face.
  std::vector<IndexSet> extra_faces;
  std::vector<Contact> contacts;
};

struct Diagnostic {
  enum class Severity { kWarning, kViolation };
  Severity severity;
  std::string code;
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string severity_name(Diagnostic::Severity s);

struct EssentialDivisors {
  std::vector<Divisor> barycenters;  // E
  std::vector<Divisor> minimal;      // V
  std::vector<Diagnostic> diagnostics;
};

struct BranchReport {
  std::string label;
  BranchSpec spec;
  std::vector<IndexSet> sing_faces;
  std::vector<IndexSet> extra_faces;
  std::vector<Contact> contacts;
  BranchLattices lattices;
  /// Every nonempty face of sigma with its regularity w.r.t. N.
  std::vector<Face> faces;
  std::vector<IndexSet> singular_faces_of_sigma;
  RelevantFaces relevant;
  std::vector<Divisor> s_min;
  std::vector<Divisor> E;
  std::vector<Divisor> V;
  std::size_t nash_count = 0;
  std::vector<Diagnostic> diagnostics;
};

struct VarietyReport {
  std::size_t dim = 0;
  std::vector<BranchReport> branches;
  std::size_t total_nash = 0;
  std::size_t total_essential = 0;
  std::vector<Diagnostic> diagnostics;
};

/// {{k} : m_k > 0}. Throws kZeroContact for m = 0, kNegativeExponent for a
/// negative coordinate.
std::vector<IndexSet> contact_faces(const RatVec& m);

/// Keeps the inclusion-minimal faces (sorted, deduplicated).
RelevantFaces componentize(std::span<const IndexSet> raw);

/// Selects E and V from barycenter candidates and the minimal toric
/// divisors. Flags LEMMA_MIN_VIOLATION when a candidate barycenter is
/// strictly dominated by another candidate or by a member of S_min.
EssentialDivisors assemble_essential(std::vector<Divisor> barycenters,
                                     std::span<const Divisor> s_min);

/// Essential divisors over the branch relative to the faces in `relevant`.
EssentialDivisors essential_divisors(const Lattice& n,
                                     const RelevantFaces& relevant);

/// Full analysis of one branch. Throws kBMissingSing when no singular face
/// is supplied although N makes a face of sigma singular.
BranchReport analyze_branch(const BranchInput& input);

/// Per-branch analysis in input order plus totals. Checks that contacts
/// come in pairs (kAsymmetricContact) and that labels are unique and
/// resolvable.
VarietyReport analyze_variety(std::span<const BranchInput> branches);

}  // namespace qonash
