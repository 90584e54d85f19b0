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

#include "core/export.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "core/classification.hpp"
#include "core/errors.hpp"

namespace stratflow {

namespace {

std::string fmt(double v) {
  if (std::fabs(v) < 0.005) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string dot(const StratifiedSurface& s, const FlowStructure& f) {
  std::ostringstream o;
  o << "digraph flow {\n";
  o << "  graph [label=" << quote(display_name(f.surface) + " " + to_string(f.family) + " option " + option_tag(f))
    << ", labelloc=t];\n";
  o << "  node [fontname=Helvetica];\n";
  for (const auto& rf : f.regions) {
    const std::string& r = rf.boundary.region;
    o << "  subgraph " << quote("cluster_" + r) << " {\n";
    o << "    label=" << quote(r) << ";\n";
    for (VertexId v = 0; v < rf.diagram.vertex_count(); ++v) {
      std::string id = quote(r + ":" + rf.vertex_ref(v));
      std::string color = "black";
      if (rf.vertex_type(v) == FlowType::Source) color = "green";
      if (rf.vertex_type(v) == FlowType::Sink) color = "red";
      const bool corner = v < rf.boundary.items.size() && rf.boundary.items[v].is_corner();
      std::string shape = corner ? "box" : (rf.is_saddle(v) ? "diamond" : "circle");
      o << "    " << id << " [label=" << quote(rf.vertex_ref(v)) << ", shape=" << shape << ", color=" << color
        << "];\n";
    }
    const std::size_t n = rf.boundary.items.size();
    for (std::size_t k = 0; k < n && n > 1; ++k) {
      o << "    " << quote(r + ":" + rf.vertex_ref(static_cast<VertexId>(k))) << " -> "
        << quote(r + ":" + rf.vertex_ref(static_cast<VertexId>((k + 1) % n))) << " [dir=none, style=dashed];\n";
    }
    for (const auto& sx : rf.separatrices()) {
      o << "    " << quote(r + ":" + rf.vertex_ref(sx.from)) << " -> " << quote(r + ":" + rf.vertex_ref(sx.to))
        << ";\n";
    }
    o << "  }\n";
  }
  // Region adjacency across the lifted 1-cells.
  const PullbackComplex p = pullback_complex(s);
  for (const auto& l : p.edges) {
    o << "  " << quote("region:" + p.faces[l.sides[0].face]) << " -> " << quote("region:" + p.faces[l.sides[1].face])
      << " [dir=none, label=" << quote(l.name) << "];\n";
  }
  o << "}\n";
  return o.str();
}

struct Point {
  double x = 0, y = 0;
};

struct Panel {
  double cx, cy, radius;
};

// Panels sit symmetrically about the vertical axis x = width/2.
Panel panel_for(const StratifiedSurface& s, std::size_t face) {
  const std::size_t n = s.two_cells.size();
  if (s.name == SurfaceName::Girls && n == 4) {
    const Panel girls[] = {{150, 320, 80}, {750, 320, 80}, {450, 170, 135}, {450, 470, 135}};
    return girls[face];
  }
  const double step = kSvgWidth / static_cast<double>(n);
  return {step * (static_cast<double>(face) + 0.5), kSvgHeight / 2, std::min(step * 0.4, 135.0)};
}

// Angle of boundary position p: a mirror image region uses the reflected angles so the
// whole drawing is symmetric about the vertical axis.
std::vector<double> item_angles(const StratifiedSurface& s, const FlowStructure& f, std::size_t face) {
  const auto& rf = f.regions[face];
  const std::size_t n = rf.boundary.items.size();
  const double alpha = 2.0 * std::numbers::pi / static_cast<double>(n);
  std::vector<double> theta(n);
  for (std::size_t p = 0; p < n; ++p) theta[p] = std::numbers::pi / 2 + alpha * static_cast<double>(p);

  const auto elements = acting_elements(s, GroupChoice::Reflection);
  if (elements.size() < 2) return theta;
  const auto& e = elements[1];
  const std::string& region = rf.boundary.region;
  const std::string& partner = e.region_map.at(region);
  const std::size_t pf = s.face_index(partner);
  const auto& other = f.regions[pf].boundary;
  auto image_of = [&](std::size_t p) -> std::optional<std::size_t> {
    const auto& item = rf.boundary.items[p];
    std::string ref = item.is_corner() ? std::to_string(e.angle_map[static_cast<std::size_t>(item.angle)])
                                       : std::string(1, e.label_map.at(item.label));
    return other.index_of(ref);
  };
  if (partner == region) {
    auto q0 = image_of(0);
    if (!q0) return theta;
    const double k = static_cast<double>(*q0);
    for (std::size_t p = 0; p < n; ++p) theta[p] = std::numbers::pi / 2 + alpha * (static_cast<double>(p) - k / 2);
  } else if (pf < face) {
    // Mirror of the partner's layout.
    std::vector<double> base(n);
    for (std::size_t p = 0; p < n; ++p) base[p] = std::numbers::pi / 2 + alpha * static_cast<double>(p);
    for (std::size_t p = 0; p < n; ++p) {
      if (auto img = image_of(p)) theta[p] = std::numbers::pi - base[*img];
    }
  }
  return theta;
}

std::string svg(const StratifiedSurface& s, const FlowStructure& f) {
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kSvgWidth) << "\" height=\"" << fmt(kSvgHeight)
    << "\" viewBox=\"0 0 " << fmt(kSvgWidth) << " " << fmt(kSvgHeight) << "\">\n";
  o << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" markerWidth=\"6\" "
       "markerHeight=\"6\" orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  o << "  <title>" << display_name(f.surface) << " " << to_string(f.family) << " option " << option_tag(f)
    << "</title>\n";
  for (std::size_t face = 0; face < f.regions.size(); ++face) {
    const auto& rf = f.regions[face];
    const Panel pn = panel_for(s, face);
    const auto theta = item_angles(s, f, face);
    const std::size_t n = rf.boundary.items.size();
    std::vector<Point> pos(rf.diagram.vertex_count());
    std::vector<std::size_t> corners;
    for (std::size_t p = 0; p < n; ++p) {
      if (rf.boundary.items[p].is_corner()) corners.push_back(p);
    }
    for (std::size_t p = 0; p < n; ++p) {
      pos[p] = {pn.cx + pn.radius * std::cos(theta[p]), pn.cy - pn.radius * std::sin(theta[p])};
    }
    // Marked points sit at the midpoint of their side when the region is a true polygon.
    if (corners.size() >= 2) {
      for (std::size_t p = 0; p < n; ++p) {
        if (rf.boundary.items[p].is_corner()) continue;
        const Point& a = pos[(p + n - 1) % n];
        const Point& b = pos[(p + 1) % n];
        pos[p] = {(a.x + b.x) / 2, (a.y + b.y) / 2};
      }
    }
    // Interior vertices: damped barycentric placement with the boundary fixed.
    for (VertexId v = static_cast<VertexId>(n); v < pos.size(); ++v) pos[v] = {pn.cx, pn.cy};
    for (int iter = 0; iter < 200; ++iter) {
      for (VertexId v = static_cast<VertexId>(n); v < pos.size(); ++v) {
        Point sum;
        for (Dart d : rf.diagram.rotation(v)) {
          sum.x += pos[rf.diagram.dst(d)].x;
          sum.y += pos[rf.diagram.dst(d)].y;
        }
        const double k = static_cast<double>(rf.diagram.rotation(v).size());
        pos[v] = {0.7 * sum.x / k + 0.3 * pn.cx, 0.7 * sum.y / k + 0.3 * pn.cy};
      }
    }

    o << "  <g id=\"region-" << rf.boundary.region << "\">\n";
    if (corners.size() >= 2) {
      o << "    <polygon fill=\"#f7f7f7\" stroke=\"black\" points=\"";
      for (std::size_t i = 0; i < corners.size(); ++i) {
        o << (i ? " " : "") << fmt(pos[corners[i]].x) << "," << fmt(pos[corners[i]].y);
      }
      o << "\"/>\n";
    } else {
      o << "    <circle class=\"region\" cx=\"" << fmt(pn.cx) << "\" cy=\"" << fmt(pn.cy) << "\" r=\"" << fmt(pn.radius)
        << "\" fill=\"#f7f7f7\" stroke=\"black\"/>\n";
    }
    o << "    <text class=\"region-label\" x=\"" << fmt(pn.cx) << "\" y=\"" << fmt(pn.cy + 4)
      << "\" text-anchor=\"middle\" fill=\"#999\">" << rf.boundary.region << "</text>\n";
    for (const auto& sx : rf.separatrices()) {
      const Point& a = pos[sx.from];
      const Point& b = pos[sx.to];
      const double len = std::hypot(b.x - a.x, b.y - a.y);
      const double cross = (b.x - a.x) * (pn.cy - a.y) - (b.y - a.y) * (pn.cx - a.x);
      o << "    <path class=\"separatrix\" d=\"M " << fmt(a.x) << " " << fmt(a.y);
      // A chord through the panel center has no preferred side; draw it straight.
      if (std::abs(cross) <= 1e-9 * len * len) {
        o << " L ";
      } else {
        o << " A " << fmt(len * 1.5) << " " << fmt(len * 1.5) << " 0 0 " << (cross > 0 ? 1 : 0) << " ";
      }
      o << fmt(b.x) << " " << fmt(b.y) << "\" fill=\"none\" stroke=\"#333\" marker-end=\"url(#arrow)\"/>\n";
    }
    for (VertexId v = 0; v < pos.size(); ++v) {
      std::string cls, fill = "black", stroke = "black";
      double r = 5;
      const FlowType t = rf.vertex_type(v);
      const std::string color = t == FlowType::Source ? "green" : (t == FlowType::Sink ? "red" : "black");
      if (v < n && rf.boundary.items[v].is_corner()) {
        cls = "corner " + to_string(rf.boundary.items[v].role);
        fill = color;
        r = 4;
      } else if (rf.is_saddle(v)) {
        cls = "saddle";
        fill = "white";
        stroke = v < n ? color : "black";
      } else {
        cls = t == FlowType::Source ? "source" : "sink";
        fill = color;
      }
      o << "    <circle class=\"" << cls << "\" cx=\"" << fmt(pos[v].x) << "\" cy=\"" << fmt(pos[v].y) << "\" r=\""
        << fmt(r) << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\"/>\n";
      o << "    <text x=\"" << fmt(pos[v].x) << "\" y=\"" << fmt(pos[v].y - 9) << "\" text-anchor=\"middle\" "
        << "font-size=\"11\">" << rf.vertex_ref(v) << "</text>\n";
    }
    o << "  </g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace

std::string export_diagram(const StratifiedSurface& s, const FlowStructure& f, DiagramFormat format) {
  if (f.regions.size() != s.two_cells.size()) throw DomainError("flow does not cover every region");
  return format == DiagramFormat::Dot ? dot(s, f) : svg(s, f);
}

}  // namespace stratflow
