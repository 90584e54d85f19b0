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

#include "core/errors.hpp"
#include "core/flow_model.hpp"
#include "core/region_enumeration.hpp"

using namespace stratflow;

namespace {

Coloring coloring(Color ae, Color bf, Color cdg) {
  auto s = build_surface(SurfaceName::Girls);
  Coloring c;
  c.colors[s.class_key('a')] = ae;
  c.colors[s.class_key('b')] = bf;
  c.colors[s.class_key('c')] = cdg;
  return c;
}

std::map<Angle, CornerRole> roles_in(const StratifiedSurface& s, const std::map<Angle, CornerRole>& all,
                                     const std::string& region) {
  std::map<Angle, CornerRole> out;
  for (const auto& side : s.two_cell(region).word.sides()) out[side.start] = all.at(side.start);
  return out;
}

std::vector<Angle> with_role(const std::map<Angle, CornerRole>& roles, CornerRole r) {
  std::vector<Angle> out;
  for (const auto& [a, role] : roles)
    if (role == r) out.push_back(a);
  return out;
}

}  // namespace

TEST_CASE("all-green coloring points every arc into the corners") {
  auto s = build_surface(SurfaceName::Girls);
  auto o = derive_orientations(s, coloring(Color::Green, Color::Green, Color::Green));
  for (const auto& face : o.sides)
    for (const auto& h : face) {
      CHECK(h.into_start);
      CHECK(h.into_end);
    }
  for (const auto& [a, r] : corner_roles(s, o)) CHECK(r == CornerRole::Sink);
}

TEST_CASE("red {a,e} reverses exactly the arcs around a and e") {
  auto s = build_surface(SurfaceName::Girls);
  auto green = derive_orientations(s, coloring(Color::Green, Color::Green, Color::Green));
  auto mixed = derive_orientations(s, coloring(Color::Red, Color::Green, Color::Green));
  for (std::size_t f = 0; f < s.two_cells.size(); ++f) {
    const auto& cell = s.two_cells[f];
    for (std::size_t k = 0; k < cell.word.size(); ++k) {
      char label = cell.marked_points[k];
      bool red = label == 'a' || label == 'e';
      CAPTURE(label);
      CHECK(mixed.sides[f][k].into_start == (red ? !green.sides[f][k].into_start : green.sides[f][k].into_start));
      CHECK(mixed.sides[f][k].into_end == (red ? !green.sides[f][k].into_end : green.sides[f][k].into_end));
    }
  }
}

TEST_CASE("a coloring missing a class is rejected") {
  auto s = build_surface(SurfaceName::Girls);
  auto c = coloring(Color::Red, Color::Green, Color::Green);
  c.colors.erase(s.class_key('b'));
  CHECK_THROWS_AS(derive_orientations(s, c), DomainError);
}

TEST_CASE("flipping a coloring swaps every color") {
  auto c = coloring(Color::Red, Color::Green, Color::Green);
  auto f = c.flipped();
  for (const auto& [k, v] : c.colors) CHECK(f.colors.at(k) != v);
  CHECK(f.flipped() == c);
}

TEST_CASE("corner roles for the four direction cases") {
  auto s = build_surface(SurfaceName::Girls);
  auto roles = [&](int a, int b) {
    return corner_roles(s, orientations_from_cells(s, {{'A', a}, {'B', b}, {'C', kNormalizedC}}));
  };

  SUBCASE("case 1 (A, B)") {
    auto cr = roles_in(s, roles(1, 1), "CR");
    CHECK(with_role(cr, CornerRole::Source) == std::vector<Angle>{4, 12});
    CHECK(with_role(cr, CornerRole::Sink) == std::vector<Angle>{2, 10});
  }
  SUBCASE("case 2 (-A, B)") {
    auto br = roles_in(s, roles(-1, 1), "BR");
    CHECK(with_role(br, CornerRole::Source) == std::vector<Angle>{8});
    CHECK(with_role(br, CornerRole::Sink) == std::vector<Angle>{1});
  }
  SUBCASE("case 3 (A, -B)") {
    auto all = roles(1, -1);
    auto br = roles_in(s, all, "BR");
    CHECK(with_role(br, CornerRole::Source) == std::vector<Angle>{11});
    CHECK(with_role(br, CornerRole::Sink) == std::vector<Angle>{6});
    auto cr = roles_in(s, all, "CR");
    CHECK(with_role(cr, CornerRole::Source) == std::vector<Angle>{12});
    CHECK(with_role(cr, CornerRole::Sink) == std::vector<Angle>{7});
  }
  SUBCASE("case 4 (-A, -B)") {
    auto all = roles(-1, -1);
    for (const auto& region : {"BR", "CR"}) {
      auto r = roles_in(s, all, region);
      CHECK(with_role(r, CornerRole::Source).size() == 1);
      CHECK(with_role(r, CornerRole::Sink).size() == 1);
    }
  }
}

TEST_CASE("region boundaries") {
  auto s = build_surface(SurfaceName::Girls);
  auto case2 = orientations_from_cells(s, {{'A', -1}, {'B', 1}, {'C', kNormalizedC}});

  SUBCASE("LD has a single corner") {
    auto rb = region_boundary(s, "LD", case2);
    REQUIRE(rb.items.size() == 1);
    CHECK(rb.items[0].is_corner());
    CHECK(rb.items[0].angle == 9);
  }
  SUBCASE("BR in case 2 is a polar cycle from 8 to 1") {
    auto rb = region_boundary(s, "BR", case2);
    CHECK(rb.items.size() == 5);
    CHECK(classify_simple_region(rb) == SimpleRegionKind::Polar);
    for (const auto& it : rb.items) {
      if (it.angle == 8) CHECK(it.role == CornerRole::Source);
      else if (it.angle == 1) CHECK(it.role == CornerRole::Sink);
      else CHECK(it.role == CornerRole::Transit);
    }
  }
  SUBCASE("CR under option 1 alternates corners and colored points") {
    auto c = coloring(Color::Red, Color::Green, Color::Green);
    auto rb = region_boundary(s, "CR", derive_orientations(s, c), c);
    REQUIRE(rb.items.size() == 10);
    std::string labels;
    int green = 0, red = 0;
    for (std::size_t i = 0; i < rb.items.size(); ++i) {
      CHECK(rb.items[i].is_corner() == (i % 2 == 0));
      if (rb.items[i].is_corner()) continue;
      labels += rb.items[i].label;
      bool is_red = rb.items[i].label == 'a' || rb.items[i].label == 'e';
      CHECK((rb.items[i].color == Color::Red) == is_red);
      (rb.items[i].color == Color::Red ? red : green)++;
    }
    CHECK(labels == "gebaf");
    CHECK(green == 3);
    CHECK(red == 2);
    CHECK(rb.index_of("a").value() == 7);
    CHECK(rb.index_of("12").value() == 2);
    CHECK_FALSE(rb.index_of("z").has_value());
  }
  SUBCASE("without a coloring no marked points appear") {
    auto rb = region_boundary(s, "CR", case2);
    for (const auto& it : rb.items) CHECK(it.is_corner());
  }
}

TEST_CASE("simple region kinds across the four cases") {
  auto s = build_surface(SurfaceName::Girls);
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      auto o = orientations_from_cells(s, {{'A', a}, {'B', b}, {'C', kNormalizedC}});
      CHECK(classify_simple_region(region_boundary(s, "LD", o)) == SimpleRegionKind::Elliptic);
      CHECK(classify_simple_region(region_boundary(s, "RD", o)) == SimpleRegionKind::Elliptic);
    }
  auto case1 = orientations_from_cells(s, {{'A', 1}, {'B', 1}, {'C', kNormalizedC}});
  CHECK(classify_simple_region(region_boundary(s, "CR", case1)) == SimpleRegionKind::RequiresSeparatrix);
  auto case2 = orientations_from_cells(s, {{'A', -1}, {'B', 1}, {'C', kNormalizedC}});
  CHECK(classify_simple_region(region_boundary(s, "BR", case2)) == SimpleRegionKind::Polar);
  CHECK(classify_simple_region(region_boundary(s, "CR", case2)) == SimpleRegionKind::Polar);
}

TEST_CASE("one-fixed-point flows") {
  auto s = build_surface(SurfaceName::Girls);
  auto flows = enumerate_one_fixed_point(s);
  REQUIRE(flows.size() == 3);
  for (const auto& f : flows) {
    CHECK(f.directions.at('C') == kNormalizedC);
    CHECK_FALSE((f.directions.at('A') == 1 && f.directions.at('B') == 1));
    for (const auto& [region, kind] : f.regions) CHECK(kind != SimpleRegionKind::RequiresSeparatrix);
  }
  CHECK(flows[0].directions.at('A') == -1);
  CHECK(flows[0].directions.at('B') == 1);
  CHECK(flows[1].directions.at('A') == 1);
  CHECK(flows[1].directions.at('B') == -1);
  CHECK(flows[2].directions.at('A') == -1);
  CHECK(flows[2].directions.at('B') == -1);

  auto labeled = enumerate_one_fixed_point_labeled(s);
  CHECK(labeled.size() == 6);
  int c_reversed = 0;
  for (const auto& f : labeled) c_reversed += f.directions.at('C') != kNormalizedC;
  CHECK(c_reversed == 3);
}

TEST_CASE("cell orientation reversal swaps sources and sinks") {
  auto s = build_surface(SurfaceName::Girls);
  for (int a : {1, -1})
    for (int b : {1, -1}) {
      auto r1 = corner_roles(s, orientations_from_cells(s, {{'A', a}, {'B', b}, {'C', 1}}));
      auto r2 = corner_roles(s, orientations_from_cells(s, {{'A', -a}, {'B', -b}, {'C', -1}}));
      for (const auto& [angle, role] : r1) {
        CAPTURE(angle);
        if (role == CornerRole::Transit) CHECK(r2.at(angle) == CornerRole::Transit);
        else CHECK(r2.at(angle) != role);
        if (role != CornerRole::Transit) CHECK(r2.at(angle) != CornerRole::Transit);
      }
    }
}
