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

// Randomized properties. Each case draws from a fixed seed so failures
// replay; the seed is reported through CAPTURE.

#include <algorithm>
#include <numeric>

#include "generators.hpp"
#include "helpers.hpp"
#include "qonash/conegeom.hpp"
#include "qonash/nashmap.hpp"
#include "qonash/oracle.hpp"
#include "qonash/variety_io.hpp"

namespace qonash {
namespace {

using testing::q;
using testing::Rng;
using testing::uniform;

constexpr int kCases = 250;

// Determinant by Gaussian elimination over Q, kept apart
// from the library's HNF/SNF code.
Rational det(std::vector<std::vector<Rational>> a) {
  const std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

std::vector<std::vector<Rational>> rows_of(const std::vector<RatVec>& vs) {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : vs) out.push_back(v.coords());
  return out;
}

// Solves x = sum_i y_i g_i for independent g_i (Cramer's rule).
std::vector<Rational> solve(const std::vector<RatVec>& g, const RatVec& x) {
  const Rational d = det(rows_of(g));
  std::vector<Rational> y;
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto m = g;
    m[i] = x;
    y.push_back(det(rows_of(m)) / d);
  }
  return y;
}

Lattice random_n(Rng& rng, std::size_t dim) {
  testing::TowerLimits lim;
  lim.min_dim = lim.max_dim = dim;
  lim.max_degree = 64;
  for (;;) {
    if (auto spec = testing::random_branch(rng, lim)) {
      return build_tower(*spec).N;
    }
  }
}

IndexSet random_face(Rng& rng, std::size_t dim, std::size_t max_size) {
  for (;;) {
    IndexSet f;
    for (std::size_t a = 0; a < dim; ++a) {
      if (uniform(rng, 0, 1)) f.insert(a);
    }
    if (!f.empty() && f.size() <= max_size) return f;
  }
}

TEST_CASE("dual involution") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const Lattice l = testing::random_lattice(
        rng, static_cast<std::size_t>(uniform(rng, 1, 4)));
    CHECK(dual_lattice(dual_lattice(l)) == l);
    // Pairing of bases is integral.
    const Lattice d = dual_lattice(l);
    for (const auto& u : l.basis()) {
      for (const auto& v : d.basis()) CHECK(dot(u, v).get_den() == 1);
    }
    CHECK(d.covolume() * l.covolume() == 1);
  }
}

TEST_CASE("generator order does not change the canonical basis") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 4));
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < dim; ++i) {
      gens.push_back(make_rational(uniform(rng, 1, 3), uniform(rng, 1, 4)) *
                     RatVec::unit(dim, i));
    }
    for (long k = uniform(rng, 0, 3); k > 0; --k) {
      gens.push_back(testing::random_signed_vector(rng, dim, 6, 6));
    }
    const Lattice a = lattice_from_generators(gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(lattice_from_generators(gens) == a);
  }
}

TEST_CASE("index multiplicativity along a chain") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 4));
    const Lattice l3 = testing::random_lattice(rng, dim);
    const Lattice l2 = testing::random_sublattice(rng, l3, 3);
    const Lattice l1 = testing::random_sublattice(rng, l2, 2);
    CHECK(index(l1, l3) == index(l1, l2) * index(l2, l3));
    CHECK(Rational(index(l2, l3)) == l2.covolume() / l3.covolume());
  }
}

TEST_CASE("snf divisibility chain and determinant") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 4));
    const IntMatrix m = testing::random_nonsingular(rng, dim, 9);
    const auto f = snf(m);
    REQUIRE(f.size() == dim);
    Integer prod = 1;
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(f[i] > 0);
      if (i + 1 < f.size()) CHECK(f[i + 1] % f[i] == 0);
      prod *= f[i];
    }
    std::vector<std::vector<Rational>> a;
    for (const auto& r : m) a.emplace_back(r.begin(), r.end());
    CHECK(Rational(prod) == abs(det(a)));
  }
}

TEST_CASE("contains agrees with a bounded combination search") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<RatVec> g;
    const IntMatrix m = testing::random_nonsingular(rng, dim, 3);
    for (const auto& r : m) {
      RatVec v(dim);
      for (std::size_t j = 0; j < dim; ++j) v[j] = Rational(r[j]);
      g.push_back(make_rational(1, uniform(rng, 1, 3)) * v);
    }
    RatVec x(dim);
    for (const auto& gi : g) x += Rational(uniform(rng, -3, 3)) * gi;
    if (uniform(rng, 0, 1)) x += testing::random_signed_vector(rng, dim, 4, 1);

    long bound = 0;
    for (const auto& y : solve(g, x)) {
      bound = std::max(bound, floor_of(abs(y)).get_si() + 1);
    }
    bool found = false;
    std::vector<long> c(dim, -bound);
    for (;;) {
      RatVec s(dim);
      for (std::size_t i = 0; i < dim; ++i) s += Rational(c[i]) * g[i];
      if (s == x) found = true;
      std::size_t k = 0;
      while (k < dim && c[k] == bound) c[k++] = -bound;
      if (k == dim) break;
      ++c[k];
    }
    CHECK(contains(lattice_from_generators(g), x) == found);
  }
}

TEST_CASE("tower invariants") {
  testing::TowerLimits lim;
  lim.min_dim = 1;
  int tested = 0;
  for (int seed = 0; tested < kCases; ++seed) {
    Rng rng(seed);
    const auto spec = testing::random_branch(rng, lim);
    if (!spec) continue;
    ++tested;
    CAPTURE(seed);
    const BranchLattices t = build_tower(*spec);
    Integer prod = 1;
    for (const auto& s : t.step_indices) {
      CHECK(s >= 2);
      prod *= s;
    }
    CHECK(t.degree_n == prod);
    CHECK(t.degree_n == index(t.tower.front(), t.M));
    CHECK(t.N.denom() == 1);
    CHECK(t.N == dual_lattice(t.M));
    std::vector<RatVec> gens = spec->char_exponents;
    for (std::size_t i = 0; i < spec->dim; ++i) {
      gens.push_back(RatVec::unit(spec->dim, i));
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(lattice_from_generators(gens) == t.M);
  }
}

TEST_CASE("face regularity, heredity and parallelepiped counts") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 5));
    const Lattice n = random_n(rng, dim);
    for (IndexSet f : all_nonempty_faces(dim)) {
      CAPTURE(f.to_string());
      const Face fd = face_data(n, f);
      if (f.size() == 1) CHECK(fd.regular);
      CHECK(fd.regular == (fd.index == 1));
      if (fd.regular) {
        for (IndexSet g : all_nonempty_faces(dim)) {
          if (g.is_subset_of(f)) CHECK(face_data(n, g).regular);
        }
      }
      const auto pts = parallelepiped_points(n, f);
      CHECK(Integer(static_cast<unsigned long>(pts.size())) == fd.index);
      for (const auto& p : pts) {
        CHECK(contains(n, p));
        CHECK(support_of(p) == f);
      }
      RatVec corner(dim);
      for (const auto& p : fd.primgens) corner += p;
      CHECK(std::find(pts.begin(), pts.end(), corner) != pts.end());
      if (fd.regular) CHECK(pts == std::vector<RatVec>{corner});

      // Determinant ratio inside span(tau_I).
      const auto axes = f.axes();
      const auto sec = coordinate_section(n, axes);
      std::vector<std::vector<Rational>> gen_minor, sec_minor;
      for (std::size_t i = 0; i < axes.size(); ++i) {
        std::vector<Rational> gr, sr;
        for (std::size_t a : axes) {
          gr.push_back(fd.primgens[i][a]);
          sr.push_back(sec[i][a]);
        }
        gen_minor.push_back(gr);
        sec_minor.push_back(sr);
      }
      CHECK(Rational(fd.index) == abs(det(gen_minor)) / abs(det(sec_minor)));
    }
  }
}

TEST_CASE("minimal toric divisors lie in N on singular faces") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 4));
    const Lattice n = random_n(rng, dim);
    const auto divs = minimal_toric_divisors(n);
    for (const auto& d : divs) {
      CHECK(contains(n, d.vector));
      CHECK(d.face == support_of(d.vector));
      CHECK_FALSE(face_data(n, d.face).regular);
      CHECK(d.multiplicity == 1);
      for (const auto& e : divs) {
        if (&e != &d) CHECK_FALSE(leq_sigma(e.vector, d.vector));
      }
    }
  }
}

TEST_CASE("oracle agrees on small random lattices") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 3));
    const Lattice n = random_n(rng, dim);
    std::int64_t bound = 1;
    for (std::size_t a = 0; a < dim; ++a) {
      bound = std::max(bound, oracle::brute_edge_length(n, a));
      CHECK(primitive_on_ray(n, a)[a] == oracle::brute_edge_length(n, a));
    }
    std::vector<RatVec> main_path;
    for (const auto& d : minimal_toric_divisors(n))
      main_path.push_back(d.vector);
    CHECK(oracle::brute_minimal_S(n, bound) == main_path);
    CHECK(oracle::brute_minimal_S(n, bound + 2) == main_path);
    for (IndexSet f : all_nonempty_faces(dim)) {
      CHECK(face_data(n, f).index == oracle::brute_face_index(n, f));
    }
  }
}

TEST_CASE("valuation scaling and additivity") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 4));
    const RatVec v = testing::random_nonneg_vector(rng, dim, 5, 9);
    std::vector<RatVec> s;
    for (long k = uniform(rng, 1, 4); k > 0; --k) {
      s.push_back(testing::random_nonneg_vector(rng, dim, 6, 12));
    }
    const Rational scale =
        make_rational(uniform(rng, 1, 12), uniform(rng, 1, 5));
    CHECK(monomial_valuation(scale * v, s) == scale * monomial_valuation(v, s));

    const RatVec u0 = testing::random_nonneg_vector(rng, dim, 6, 12);
    std::vector<RatVec> shifted;
    for (const auto& x : s) shifted.push_back(u0 + x);
    CHECK(monomial_valuation(v, shifted) ==
          dot(v, u0) + monomial_valuation(v, s));
  }
}

BranchInput random_input(Rng& rng, std::size_t dim) {
  testing::TowerLimits lim;
  lim.min_dim = lim.max_dim = dim;
  lim.max_degree = 64;
  std::optional<BranchSpec> spec;
  while (!(spec = testing::random_branch(rng, lim))) {
  }
  BranchInput in{*spec, {}, {}, {}};
  for (long k = uniform(rng, 1, 3); k > 0; --k) {
    in.sing_faces.push_back(random_face(rng, dim, 2));
  }
  for (long k = uniform(rng, 0, 2); k > 0; --k) {
    in.extra_faces.push_back(random_face(rng, dim, dim));
  }
  return in;
}

TEST_CASE("essential divisors form an antichain with consistent counts") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 4));
    const BranchReport r = analyze_branch(random_input(rng, dim));
    CHECK(r.diagnostics.empty());
    CHECK(r.nash_count == r.E.size() + r.V.size());
    std::vector<Divisor> all = r.E;
    all.insert(all.end(), r.V.begin(), r.V.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(all[i].multiplicity == 1);
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (i != j) CHECK_FALSE(leq_sigma(all[i].vector, all[j].vector));
      }
    }
    for (const auto& e : r.E) {
      CHECK(std::find(r.relevant.faces.begin(), r.relevant.faces.end(),
                      e.face) != r.relevant.faces.end());
      CHECK(face_data(r.lattices.N, e.face).regular);
    }
    for (const auto& v : r.V) {
      CHECK(std::find(r.s_min.begin(), r.s_min.end(), v) != r.s_min.end());
      CHECK_FALSE(face_data(r.lattices.N, v.face).regular);
    }
  }
}

TEST_CASE("adding a regular face keeps barycenters and only shrinks V") {
  int tested = 0;
  for (int seed = 0; tested < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 2, 4));
    const Lattice n = random_n(rng, dim);
    std::vector<IndexSet> raw;
    for (long k = uniform(rng, 1, 3); k > 0; --k) {
      raw.push_back(random_face(rng, dim, dim));
    }
    const IndexSet extra = random_face(rng, dim, dim);
    if (!face_data(n, extra).regular) continue;
    ++tested;
    const RelevantFaces before = componentize(raw);
    raw.push_back(extra);
    const RelevantFaces after = componentize(raw);
    const auto e0 = essential_divisors(n, before);
    const auto e1 = essential_divisors(n, after);
    for (const auto& b : e0.barycenters) {
      const bool kept = std::find(after.faces.begin(), after.faces.end(),
                                  b.face) != after.faces.end();
      if (kept) {
        CHECK(std::find(e1.barycenters.begin(), e1.barycenters.end(), b) !=
              e1.barycenters.end());
      }
    }
    for (const auto& v : e1.minimal) {
      CHECK(std::find(e0.minimal.begin(), e0.minimal.end(), v) !=
            e0.minimal.end());
    }
  }
}

TEST_CASE("reports are deterministic and round-trip") {
  for (int seed = 0; seed < kCases; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const auto dim = static_cast<std::size_t>(uniform(rng, 1, 3));
    std::vector<BranchInput> inputs{random_input(rng, dim),
                                    random_input(rng, dim)};
    inputs[0].spec.label = "p";
    inputs[1].spec.label = "q";
    const RatVec m0 =
        testing::random_nonneg_vector(rng, dim, 4, 4) + RatVec::unit(dim, 0);
    const RatVec m1 = testing::random_nonneg_vector(rng, dim, 4, 4) +
                      RatVec::unit(dim, dim - 1);
    inputs[0].contacts = {{"q", m0}};
    inputs[1].contacts = {{"p", m1}};

    const VarietyReport r = analyze_variety(inputs);
    const std::string json = io::format_json(r);
    CHECK(io::format_json(analyze_variety(inputs)) == json);
    const VarietyReport back = io::report_from_json(io::Json::parse(json));
    CHECK(io::format_json(back) == json);
    CHECK(io::format_text(back) == io::format_text(r));
    CHECK(r.total_nash == r.branches[0].nash_count + r.branches[1].nash_count);
  }
}

}  // namespace
}  // namespace qonash
