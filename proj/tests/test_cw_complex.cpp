// Copyright 2026 The stratflow Authors
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

#include <doctest.h>

#include <set>

#include "core/cw_complex.hpp"
#include "core/errors.hpp"

using namespace stratflow;

namespace {

std::vector<std::string> words(const StratifiedSurface& s) {
  std::vector<std::string> out;
  for (const auto& c : s.two_cells) out.push_back(c.word.str());
  return out;
}

bool same_action(const SymmetryElement& x, const SymmetryElement& y) {
  return x.angle_map == y.angle_map && x.cell_map == y.cell_map && x.region_map == y.region_map &&
         x.label_map == y.label_map && x.reverses_reading == y.reverses_reading;
}

bool contains(const std::vector<std::string>& v, const std::string& x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

TEST_CASE("boundary words parse and print") {
  auto w = BoundaryWord::parse("2C12A'10B7A4B'2");
  REQUIRE(w.size() == 5);
  CHECK(w.sides()[0] == Side{2, 'C', false, 12});
  CHECK(w.sides()[1] == Side{12, 'A', true, 10});
  CHECK(w.sides()[4] == Side{4, 'B', true, 2});
  CHECK(w.str() == "2C12A'10B7A4B'2");
  CHECK_THROWS_AS(BoundaryWord::parse("2C12A'10B7A4B'3"), DomainError);
  CHECK_THROWS_AS(BoundaryWord::parse("2CC1"), DomainError);
}

TEST_CASE("Girl's surface data") {
  auto s = build_surface(SurfaceName::Girls);
  CHECK(s.one_cells.size() == 3);
  CHECK(s.two_cells.size() == 4);
  auto w = words(s);
  CHECK(contains(w, "2C12A'10B7A4B'2"));
  CHECK(contains(w, "9A'9"));
  CHECK(contains(w, "3B'3"));
  CHECK(contains(w, "1A6C'5C'8B11C1"));
  CHECK(s.symmetry.order() == 2);
}

TEST_CASE("Boy's surface data") {
  auto s = build_surface(SurfaceName::Boys);
  CHECK(s.one_cells.size() == 3);
  CHECK(s.two_cells.size() == 4);
  auto w = words(s);
  CHECK(contains(w, "9A'9"));
  CHECK(contains(w, "3B'3"));
  CHECK(contains(w, "5C'5"));
  CHECK(s.symmetry.order() == 6);
}

TEST_CASE("surface names") {
  CHECK(parse_surface_name("girls") == SurfaceName::Girls);
  CHECK(parse_surface_name("boys") == SurfaceName::Boys);
  CHECK_THROWS_AS(parse_surface_name("torus"), DomainError);
  CHECK_THROWS_AS(build_surface(std::string_view("klein")), DomainError);
}

TEST_CASE("both surfaces validate") {
  for (auto n : {SurfaceName::Girls, SurfaceName::Boys}) {
    CAPTURE(to_string(n));
    auto r = validate_complex(build_surface(n));
    for (const auto& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK(r.ok());
    REQUIRE(r.find("image-euler-characteristic"));
    REQUIRE(r.find("angle-double-occurrence"));
  }
}

TEST_CASE("removing angle 7 from B's pairs breaks the occurrence check") {
  auto s = build_surface(SurfaceName::Girls);
  auto& pairs = s.one_cells.at('B');
  auto before = pairs.size();
  std::erase_if(pairs, [](const auto& p) { return p.first == 7 || p.second == 7; });
  REQUIRE(pairs.size() == before - 1);
  auto r = validate_complex(s);
  CHECK_FALSE(r.ok());
  REQUIRE(r.find("angle-double-occurrence"));
  CHECK_FALSE(r.find("angle-double-occurrence")->passed);
  CHECK_THROWS_AS(pullback_complex(s), DomainError);
}

TEST_CASE("a word that disagrees with the gluing table is rejected") {
  auto s = build_surface(SurfaceName::Girls);
  s.two_cells[0].word = BoundaryWord::parse("9B'9");
  CHECK_FALSE(validate_complex(s).ok());
}

TEST_CASE("pullback complex is a projective plane") {
  for (auto n : {SurfaceName::Girls, SurfaceName::Boys}) {
    CAPTURE(to_string(n));
    auto s = build_surface(n);
    auto p = pullback_complex(s);
    CHECK(p.vertices.size() == 3);
    CHECK(p.edges.size() == 6);
    CHECK(p.faces.size() == 4);
    CHECK(p.euler_characteristic() == 1);
    // Every side of every face lies on exactly one lift.
    std::set<SideRef> seen;
    for (const auto& e : p.edges) {
      CHECK(e.sides[0].face < p.faces.size());
      CHECK(seen.insert(e.sides[0]).second);
      CHECK(seen.insert(e.sides[1]).second);
    }
    std::size_t total = 0;
    for (const auto& c : s.two_cells) total += c.word.size();
    CHECK(seen.size() == total);
    // Each preimage vertex carries four of the twelve angles.
    for (const auto& v : p.vertices) CHECK(v.size() == 4);
  }
}

TEST_CASE("Girl's lifts pair sides of one cell and C'C' is parallel") {
  auto s = build_surface(SurfaceName::Girls);
  auto p = pullback_complex(s);
  std::size_t parallel = 0;
  for (const auto& e : p.edges) {
    const auto& a = s.two_cells[e.sides[0].face].word.sides()[e.sides[0].side];
    const auto& b = s.two_cells[e.sides[1].face].word.sides()[e.sides[1].side];
    CHECK(a.cell == e.cell);
    CHECK(b.cell == e.cell);
    if (e.parallel) {
      ++parallel;
      CHECK(e.cell == 'C');
      CHECK(s.two_cells[e.sides[0].face].region == "BR");
      CHECK(s.two_cells[e.sides[1].face].region == "BR");
    }
  }
  CHECK(parallel == 1);
}

TEST_CASE("exactly one admissible planar gluing per surface") {
  auto girls = build_surface(SurfaceName::Girls);
  auto gm = enumerate_planar_gluings(girls);
  REQUIRE(gm.size() == 1);
  auto p = pullback_complex(girls);
  CHECK(gm[0].glued_lifts.size() == p.edges.size() - 1);
  REQUIRE(gm[0].boundary.size() == 2);
  CHECK(gm[0].boundary[0].lift == gm[0].boundary[1].lift);
  CHECK(p.edges[gm[0].boundary[0].lift].parallel);

  auto boys = build_surface(SurfaceName::Boys);
  auto bm = enumerate_planar_gluings(boys);
  REQUIRE(bm.size() == 1);
  CHECK(bm[0].glued_lifts.size() == 3);
  CHECK(bm[0].boundary.size() == 6);
  CHECK(assess_gluing(boys, bm[0].glued_mask).antipodal);
}

TEST_CASE("gluing C'C' as well produces a Moebius band") {
  auto s = build_surface(SurfaceName::Girls);
  auto p = pullback_complex(s);
  std::uint32_t all = (1u << p.edges.size()) - 1;
  auto a = assess_gluing(s, all);
  CHECK_FALSE(a.admissible);
  CHECK_FALSE(a.orientable);
  CHECK(a.reason.find("bius") != std::string::npos);

  auto planar = enumerate_planar_gluings(s)[0];
  auto ok = assess_gluing(s, planar.glued_mask);
  CHECK(ok.admissible);
  CHECK(ok.orientable);
  CHECK(ok.connected);
  CHECK(ok.euler == 1);
  CHECK(ok.boundary_components == 1);
}

TEST_CASE("symmetry group elements are automorphisms") {
  for (auto n : {SurfaceName::Girls, SurfaceName::Boys}) {
    auto s = build_surface(n);
    const auto& els = s.symmetry.elements;
    CHECK(els.front().is_identity());
    // Closed under composition, every element has finite order dividing the group order.
    for (const auto& x : els) {
      CHECK(s.symmetry.order() % element_order(x) == 0);
      for (const auto& y : els) {
        auto z = compose(x, y);
        CHECK(std::any_of(els.begin(), els.end(), [&](const auto& e) { return same_action(e, z); }));
      }
      std::set<Angle> image(x.angle_map.begin() + 1, x.angle_map.end());
      CHECK(image.size() == kAngleCount);
    }
  }
}

TEST_CASE("Girl's reflection") {
  auto s = build_surface(SurfaceName::Girls);
  REQUIRE(s.symmetry.order() == 2);
  const auto& r = s.symmetry.elements[1];
  CHECK(element_order(r) == 2);
  CHECK(r.reverses_reading);
  CHECK(r.angle_map[1] == 11);
  CHECK(r.angle_map[3] == 9);
  CHECK(r.angle_map[5] == 5);
  CHECK(r.angle_map[7] == 7);
  CHECK(r.region_map.at("LD") == "RD");
  CHECK(r.region_map.at("BR") == "BR");
  CHECK(r.region_map.at("CR") == "CR");
  CHECK(r.label_map.at('a') == 'b');
  CHECK(r.label_map.at('c') == 'd');
  CHECK(r.label_map.at('e') == 'f');
  CHECK(r.label_map.at('g') == 'g');
  // Mirror of the mirror is the identity.
  CHECK(compose(r, r).is_identity());
}

TEST_CASE("Boy's group has two rotations and three reflections") {
  auto s = build_surface(SurfaceName::Boys);
  int rotations = 0, reflections = 0;
  for (const auto& e : s.symmetry.elements) {
    if (e.is_identity()) continue;
    if (e.reverses_reading) {
      ++reflections;
      CHECK(element_order(e) == 2);
    } else {
      ++rotations;
      CHECK(element_order(e) == 3);
    }
  }
  CHECK(rotations == 2);
  CHECK(reflections == 3);
}

TEST_CASE("marked point classes") {
  auto s = build_surface(SurfaceName::Girls);
  CHECK(s.class_key('c') == s.class_key('g'));
  CHECK(s.class_key('d') == s.class_key('g'));
  CHECK(s.class_key('a') == s.class_key('e'));
  CHECK(s.class_key('b') == s.class_key('f'));
  CHECK(s.class_key('a') != s.class_key('b'));
}
