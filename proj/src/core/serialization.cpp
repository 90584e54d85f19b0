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

#include "core/serialization.hpp"

#include "core/errors.hpp"

namespace stratflow {

namespace {

std::string cell_image(const std::pair<CellLabel, bool>& v) {
  return std::string(1, v.first) + (v.second ? "'" : "");
}

Json element_to_json(const SymmetryElement& e) {
  Json j;
  j["name"] = e.name;
  j["order"] = element_order(e);
  Json angles = Json::object();
  for (Angle a = 1; a <= kAngleCount; ++a) angles[std::to_string(a)] = e.angle_map[a];
  j["angles"] = angles;
  Json cells = Json::object();
  for (const auto& [c, v] : e.cell_map) cells[std::string(1, c)] = cell_image(v);
  j["cells"] = cells;
  Json regions = Json::object();
  for (const auto& [r, v] : e.region_map) regions[r] = v;
  j["twoCells"] = regions;
  Json labels = Json::object();
  for (const auto& [l, v] : e.label_map) labels[std::string(1, l)] = std::string(1, v);
  j["markedPoints"] = labels;
  j["reversesOrientation"] = e.reverses_reading;
  return j;
}

std::string kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Boundary: return "boundary";
    case VertexKind::Sink: return "sink";
    case VertexKind::Source: return "source";
    case VertexKind::Saddle: return "saddle";
  }
  return "?";
}

VertexKind parse_kind(const std::string& s) {
  if (s == "boundary") return VertexKind::Boundary;
  if (s == "sink") return VertexKind::Sink;
  if (s == "source") return VertexKind::Source;
  if (s == "saddle") return VertexKind::Saddle;
  throw DomainError("unknown vertex kind '" + s + "'");
}

PointStatus parse_status(const std::string& s) {
  if (s == "node") return PointStatus::Node;
  if (s == "saddle") return PointStatus::Saddle;
  throw DomainError("unknown point status '" + s + "'");
}

Color parse_color(const std::string& s) {
  if (s == "G") return Color::Green;
  if (s == "R") return Color::Red;
  throw DomainError("unknown color '" + s + "'");
}

Json region_to_json(const FlowStructure& f, const RegionFlow& rf) {
  Json j;
  j["region"] = rf.boundary.region;
  Json items = Json::array();
  for (std::size_t i = 0; i < rf.boundary.items.size(); ++i) {
    const auto& it = rf.boundary.items[i];
    Json item;
    item["ref"] = it.ref();
    if (it.is_corner()) {
      item["role"] = to_string(it.role);
    } else {
      item["color"] = to_string(it.color);
      item["status"] = to_string(rf.statuses[i]);
    }
    items.push_back(item);
  }
  j["items"] = items;
  if (f.family == Family::OneFixedPoint) {
    j["classification"] = to_string(classify_simple_region(rf.boundary));
  }
  Json seps = Json::array();
  std::vector<Separatrix> all = rf.separatrices();
  for (const auto& sx : all) seps.push_back({rf.vertex_ref(sx.from), rf.vertex_ref(sx.to)});
  j["separatrices"] = seps;
  Json saddles = Json::array();
  for (VertexId v = static_cast<VertexId>(rf.boundary.items.size()); v < rf.diagram.vertex_count(); ++v) {
    if (rf.diagram.kind(v) != VertexKind::Saddle) continue;
    Json sj;
    sj["saddle"] = rf.vertex_ref(v);
    Json stable = Json::array(), unstable = Json::array();
    for (Dart d : rf.diagram.rotation(v)) {
      VertexId w = rf.diagram.dst(d);
      (rf.vertex_type(w) == FlowType::Source ? stable : unstable).push_back(rf.vertex_ref(w));
    }
    sj["stable"] = stable;
    sj["unstable"] = unstable;
    saddles.push_back(sj);
  }
  j["interiorSaddles"] = saddles;
  Json cells = Json::array();
  for (const auto& c : rf.cells) cells.push_back({{"source", rf.vertex_ref(c.source)}, {"sink", rf.vertex_ref(c.sink)}});
  j["activeCells"] = cells;
  Json map;
  Json kinds = Json::array();
  for (VertexId v = 0; v < rf.diagram.vertex_count(); ++v) kinds.push_back(kind_name(rf.diagram.kind(v)));
  map["vertexKinds"] = kinds;
  map["dartSources"] = rf.diagram.dart_sources();
  Json rot = Json::array();
  for (VertexId v = 0; v < rf.diagram.vertex_count(); ++v) rot.push_back(rf.diagram.rotation(v));
  map["rotations"] = rot;
  Json bd = Json::array();
  for (std::size_t k = 0; k < rf.diagram.boundary_size(); ++k) bd.push_back(rf.diagram.boundary_dart(k));
  map["boundaryDarts"] = bd;
  j["embedding"] = map;
  return j;
}

}  // namespace

Json surface_to_json(const StratifiedSurface& s) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["name"] = to_string(s.name);
  j["angles"] = s.angles;
  Json one = Json::object();
  for (const auto& [c, pairs] : s.one_cells) {
    Json list = Json::array();
    for (auto [a, b] : pairs) list.push_back({a, b});
    one[std::string(1, c)] = list;
  }
  j["oneCells"] = one;
  Json two = Json::array();
  for (const auto& tc : s.two_cells) two.push_back(tc.word.str());
  j["twoCells"] = two;
  Json regions = Json::array();
  for (const auto& tc : s.two_cells) {
    Json r;
    r["region"] = tc.region;
    r["word"] = tc.word.str();
    Json labels = Json::array();
    for (char l : tc.marked_points) labels.push_back(std::string(1, l));
    r["markedPoints"] = labels;
    regions.push_back(r);
  }
  j["regions"] = regions;
  Json classes = Json::array();
  for (const auto& cls : s.marked_point_classes) {
    Json c = Json::array();
    for (char l : cls) c.push_back(std::string(1, l));
    classes.push_back(c);
  }
  j["markedPointClasses"] = classes;
  j["sheets"] = s.sheets;
  j["symmetryOrder"] = s.symmetry.order();
  Json gens = Json::array();
  for (const auto& g : s.symmetry.generators) gens.push_back(element_to_json(g));
  j["symmetry"] = gens;
  return j;
}

Json validation_to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"passed", r.ok()}, {"checks", checks}};
}

Json planar_models_to_json(const StratifiedSurface& s, const std::vector<PlanarModel>& models) {
  const PullbackComplex p = pullback_complex(s);
  Json out = Json::array();
  for (const auto& m : models) {
    Json j;
    Json glued = Json::array();
    for (auto i : m.glued_lifts) glued.push_back(p.edges[i].name);
    j["glued"] = glued;
    Json boundary = Json::array();
    for (const auto& b : m.boundary) {
      Json side;
      side["lift"] = p.edges[b.lift].name;
      side["cell"] = std::string(1, p.edges[b.lift].cell) + (b.reversed ? "'" : "");
      if (b.marked_point) side["markedPoint"] = std::string(1, *b.marked_point);
      boundary.push_back(side);
    }
    j["boundary"] = boundary;
    out.push_back(j);
  }
  return out;
}

Json flow_to_json(const StratifiedSurface& s, const FlowStructure& f) {
  Json j;
  j["schemaVersion"] = kSchemaVersion;
  j["surface"] = to_string(f.surface);
  j["family"] = to_string(f.family);
  j["option"] = f.option;
  j["flipped"] = f.flipped;
  if (f.family != Family::OneFixedPoint) {
    Json c = Json::object();
    for (const auto& cls : s.marked_point_classes) {
      std::string key(cls.begin(), cls.end());
      auto it = f.coloring.colors.find(key);
      if (it != f.coloring.colors.end()) c[key] = to_string(it->second);
    }
    j["coloring"] = c;
  }
  if (!f.point_status.empty()) {
    Json st = Json::object();
    for (const auto& [k, v] : f.point_status) st[k] = to_string(v);
    j["pointStatus"] = st;
  }
  if (!f.cell_directions.empty()) {
    Json d = Json::object();
    for (const auto& [c, v] : f.cell_directions) d[std::string(1, c)] = v;
    j["cellDirections"] = d;
  }
  Json regions = Json::array();
  for (const auto& rf : f.regions) regions.push_back(region_to_json(f, rf));
  j["regions"] = regions;
  return j;
}

FlowStructure flow_from_json(const Json& j) {
  try {
    if (j.at("schemaVersion").get<int>() != kSchemaVersion) throw DomainError("unsupported schemaVersion");
    const auto s = build_surface(j.at("surface").get<std::string>());
    FlowStructure f;
    f.surface = s.name;
    f.family = parse_family(j.at("family").get<std::string>());
    f.option = j.at("option").get<int>();
    f.flipped = j.at("flipped").get<bool>();
    if (j.contains("coloring")) {
      for (const auto& [k, v] : j.at("coloring").items()) f.coloring.colors[k] = parse_color(v.get<std::string>());
    }
    if (j.contains("pointStatus")) {
      for (const auto& [k, v] : j.at("pointStatus").items()) f.point_status[k] = parse_status(v.get<std::string>());
    }
    if (j.contains("cellDirections")) {
      for (const auto& [k, v] : j.at("cellDirections").items()) {
        if (k.size() != 1) throw DomainError("cell names are single letters");
        f.cell_directions[k.front()] = v.get<int>();
      }
    }
    const auto& regions = j.at("regions");
    if (regions.size() != s.two_cells.size()) throw DomainError("one region entry per two-cell is required");
    for (std::size_t r = 0; r < regions.size(); ++r) {
      const auto& rj = regions[r];
      const std::string region = rj.at("region").get<std::string>();
      if (region != s.two_cells[r].region) throw DomainError("regions are out of order");
      RegionFlow rf;
      rf.boundary = structure_region_boundary(s, f, region);
      const auto& items = rj.at("items");
      if (items.size() != rf.boundary.items.size()) throw DomainError("item count mismatch in " + region);
      for (std::size_t i = 0; i < items.size(); ++i) {
        const auto& it = rf.boundary.items[i];
        if (items[i].at("ref").get<std::string>() != it.ref()) throw DomainError("item mismatch in " + region);
        if (it.is_corner()) {
          if (items[i].at("role").get<std::string>() != to_string(it.role)) throw DomainError("corner role mismatch");
          rf.statuses.push_back(PointStatus::Node);
        } else {
          if (parse_color(items[i].at("color").get<std::string>()) != it.color) throw DomainError("color mismatch");
          rf.statuses.push_back(parse_status(items[i].at("status").get<std::string>()));
        }
      }
      const auto& m = rj.at("embedding");
      std::vector<VertexKind> kinds;
      for (const auto& k : m.at("vertexKinds")) kinds.push_back(parse_kind(k.get<std::string>()));
      rf.diagram = PlanarMap::from_parts(rf.boundary.items.size(), std::move(kinds),
                                         m.at("dartSources").get<std::vector<VertexId>>(),
                                         m.at("rotations").get<std::vector<std::vector<Dart>>>(),
                                         m.at("boundaryDarts").get<std::vector<Dart>>());
      if (f.family != Family::OneFixedPoint && !assign_cells(rf)) {
        throw DomainError("region " + region + " does not have one active source and sink per face");
      }
      f.regions.push_back(std::move(rf));
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed flow document: ") + e.what());
  }
}

Json one_fixed_point_to_json(const OneFixedPointFlow& f) {
  Json j;
  Json d = Json::object();
  for (const auto& [c, v] : f.directions) d[std::string(1, c)] = v;
  j["cellDirections"] = d;
  Json r = Json::object();
  for (const auto& [k, v] : f.regions) r[k] = to_string(v);
  j["regions"] = r;
  return j;
}

}  // namespace stratflow
