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

#include "core/flow_model.hpp"

#include "core/errors.hpp"

namespace stratflow {

std::string to_string(Color c) { return c == Color::Green ? "G" : "R"; }

std::string to_string(CornerRole r) {
  switch (r) {
    case CornerRole::Source: return "source";
    case CornerRole::Sink: return "sink";
    case CornerRole::Transit: return "transit";
  }
  return "?";
}

std::string to_string(SimpleRegionKind k) {
  switch (k) {
    case SimpleRegionKind::Elliptic: return "elliptic";
    case SimpleRegionKind::Polar: return "polar";
    case SimpleRegionKind::RequiresSeparatrix: return "requires-separatrix";
  }
  return "?";
}

Color Coloring::of(const StratifiedSurface& s, char label) const {
  auto it = colors.find(s.class_key(label));
  if (it == colors.end()) throw DomainError(std::string("coloring leaves the class of '") + label + "' uncolored");
  return it->second;
}

Coloring Coloring::flipped() const {
  Coloring c;
  for (const auto& [k, v] : colors) c.colors[k] = v == Color::Green ? Color::Red : Color::Green;
  return c;
}

OrientationAssignment orientations_from_cells(const StratifiedSurface& s,
                                              const std::map<CellLabel, int>& directions) {
  const PullbackComplex p = pullback_complex_unchecked(s);
  OrientationAssignment o;
  o.cell_directions = directions;
  for (std::size_t f = 0; f < s.two_cells.size(); ++f) {
    std::vector<HalfArcs> row;
    const auto& sides = s.two_cells[f].word.sides();
    for (std::size_t k = 0; k < sides.size(); ++k) {
      auto it = directions.find(sides[k].cell);
      if (it == directions.end() || (it->second != 1 && it->second != -1)) {
        throw DomainError(std::string("no direction for cell ") + sides[k].cell);
      }
      bool forward = effective_sign(s, p, {f, k}) * it->second > 0;
      row.push_back({!forward, forward});
    }
    o.sides.push_back(std::move(row));
  }
  return o;
}

OrientationAssignment derive_orientations(const StratifiedSurface& s, const Coloring& c) {
  for (const auto& cls : s.marked_point_classes) {
    if (!c.colors.count(std::string(cls.begin(), cls.end()))) {
      throw DomainError("coloring leaves class {" + std::string(cls.begin(), cls.end()) + "} uncolored");
    }
  }
  OrientationAssignment o;
  for (const auto& tc : s.two_cells) {
    if (tc.marked_points.size() != tc.word.size()) {
      throw DomainError("region " + tc.region + " carries no marked points to color");
    }
    std::vector<HalfArcs> row;
    for (char label : tc.marked_points) {
      bool green = c.of(s, label) == Color::Green;
      row.push_back({green, green});
    }
    o.sides.push_back(std::move(row));
  }
  return o;
}

namespace {

CornerRole role_between(const HalfArcs& before, const HalfArcs& after) {
  if (before.into_end && after.into_start) return CornerRole::Sink;
  if (!before.into_end && !after.into_start) return CornerRole::Source;
  return CornerRole::Transit;
}

}  // namespace

std::map<Angle, CornerRole> corner_roles(const StratifiedSurface& s, const OrientationAssignment& o) {
  if (o.sides.size() != s.two_cells.size()) throw DomainError("orientation does not cover every region");
  std::map<Angle, CornerRole> roles;
  for (std::size_t f = 0; f < s.two_cells.size(); ++f) {
    const auto& sides = s.two_cells[f].word.sides();
    const auto& arcs = o.sides[f];
    if (arcs.size() != sides.size()) throw DomainError("orientation does not cover every side");
    const std::size_t n = sides.size();
    for (std::size_t k = 0; k < n; ++k) {
      roles[sides[k].start] = role_between(arcs[(k + n - 1) % n], arcs[k]);
    }
  }
  return roles;
}

std::string BoundaryItem::ref() const {
  return kind == Kind::Corner ? std::to_string(angle) : std::string(1, label);
}

std::optional<std::size_t> RegionBoundary::index_of(const std::string& ref) const {
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].ref() == ref) return i;
  }
  return std::nullopt;
}

RegionBoundary region_boundary(const StratifiedSurface& s, const std::string& region,
                               const OrientationAssignment& o, const std::optional<Coloring>& c) {
  const std::size_t f = s.face_index(region);
  const auto& tc = s.two_cells[f];
  auto roles = corner_roles(s, o);
  RegionBoundary rb;
  rb.region = region;
  const auto& sides = tc.word.sides();
  for (std::size_t k = 0; k < sides.size(); ++k) {
    BoundaryItem corner;
    corner.kind = BoundaryItem::Kind::Corner;
    corner.angle = sides[k].start;
    corner.role = roles.at(sides[k].start);
    rb.items.push_back(corner);
    if (c) {
      if (tc.marked_points.empty()) throw DomainError("region " + region + " carries no marked points");
      BoundaryItem point;
      point.kind = BoundaryItem::Kind::Marked;
      point.label = tc.marked_points[k];
      point.color = c->of(s, point.label);
      rb.items.push_back(point);
    }
  }
  return rb;
}

SimpleRegionKind classify_simple_region(const RegionBoundary& rb) {
  int corners = 0, sources = 0, sinks = 0;
  for (const auto& it : rb.items) {
    if (it.is_corner()) {
      ++corners;
      if (it.role == CornerRole::Source) ++sources;
      if (it.role == CornerRole::Sink) ++sinks;
    } else if (it.color == Color::Green) {
      ++sources;
    } else {
      ++sinks;
    }
  }
  if (corners == 1 && rb.items.size() == 1) return SimpleRegionKind::Elliptic;
  if (sources == 1 && sinks == 1) return SimpleRegionKind::Polar;
  return SimpleRegionKind::RequiresSeparatrix;
}

namespace {

std::vector<OneFixedPointFlow> one_fixed_point_search(const StratifiedSurface& s,
                                                      const std::vector<int>& c_directions) {
  if (s.name != SurfaceName::Girls) {
    throw UnsupportedError("one-fixed-point enumeration is implemented for the Girl's surface only");
  }
  std::vector<OneFixedPointFlow> out;
  for (int c : c_directions) {
    for (int b : {1, -1}) {
      for (int a : {1, -1}) {
        OneFixedPointFlow flow;
        flow.directions = {{'A', a}, {'B', b}, {'C', c}};
        auto o = orientations_from_cells(s, flow.directions);
        bool keep = true;
        for (const auto& tc : s.two_cells) {
          auto rb = region_boundary(s, tc.region, o);
          auto kind = classify_simple_region(rb);
          keep = keep && kind != SimpleRegionKind::RequiresSeparatrix;
          flow.regions[tc.region] = kind;
          flow.boundaries[tc.region] = std::move(rb);
        }
        if (keep) out.push_back(std::move(flow));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<OneFixedPointFlow> enumerate_one_fixed_point(const StratifiedSurface& s) {
  return one_fixed_point_search(s, {kNormalizedC});
}

std::vector<OneFixedPointFlow> enumerate_one_fixed_point_labeled(const StratifiedSurface& s) {
  return one_fixed_point_search(s, {kNormalizedC, -kNormalizedC});
}

}  // namespace stratflow
