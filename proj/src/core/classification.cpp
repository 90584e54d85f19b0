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

#include "core/classification.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>
#include <unordered_map>

#include "core/errors.hpp"

namespace stratflow {

GroupChoice parse_group(const std::string& text) {
  if (text == "reflection") return GroupChoice::Reflection;
  if (text == "full") return GroupChoice::Full;
  throw DomainError("unknown group '" + text + "'");
}

std::string to_string(GroupChoice g) { return g == GroupChoice::Reflection ? "reflection" : "full"; }

std::vector<SymmetryElement> acting_elements(const StratifiedSurface& s, GroupChoice g) {
  std::vector<SymmetryElement> out;
  for (const auto& e : s.symmetry.elements) {
    if (e.is_identity()) out.insert(out.begin(), e);
    else if (g == GroupChoice::Full) out.push_back(e);
  }
  if (g == GroupChoice::Reflection) {
    for (const auto& gen : s.symmetry.generators) {
      if (gen.reverses_reading) {
        out.push_back(gen);
        break;
      }
    }
  }
  if (out.empty() || !out.front().is_identity()) throw DomainError("symmetry group lacks the identity");
  return out;
}

namespace {

std::string map_key(const SymmetryElement& e, const std::string& key) {
  std::string out;
  for (char c : key) {
    auto it = e.label_map.find(c);
    if (it == e.label_map.end()) throw DomainError(std::string("symmetry does not act on label ") + c);
    out += it->second;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string image_ref(const SymmetryElement& e, const BoundaryItem& item) {
  if (item.is_corner()) return std::to_string(e.angle_map.at(static_cast<std::size_t>(item.angle)));
  return std::string(1, e.label_map.at(item.label));
}

}  // namespace

RegionFlow apply_symmetry(const StratifiedSurface&, const SymmetryElement& e, const RegionFlow& rf,
                          const RegionBoundary& target) {
  const std::size_t n = rf.boundary.items.size();
  if (target.items.size() != n) throw DomainError("symmetry maps a region onto one of different size");
  std::vector<VertexId> image(n);
  RegionFlow out;
  out.boundary = target;
  out.statuses.assign(n, PointStatus::Node);
  for (std::size_t p = 0; p < n; ++p) {
    auto q = target.index_of(image_ref(e, rf.boundary.items[p]));
    if (!q) throw DomainError("symmetry image of a boundary item is missing");
    image[p] = static_cast<VertexId>(*q);
    out.statuses[*q] = rf.statuses[p];
  }
  out.diagram = rf.diagram.transformed(image, e.reverses_reading);
  if (!rf.cells.empty() && !assign_cells(out)) throw DomainError("symmetry image is not a valid region flow");
  return out;
}

FlowStructure apply_symmetry(const StratifiedSurface& s, const SymmetryElement& e, const FlowStructure& f) {
  FlowStructure g = f;
  if (f.family != Family::OneFixedPoint) {
    g.coloring.colors.clear();
    for (const auto& [key, color] : f.coloring.colors) {
      g.coloring.colors[s.class_key(e.label_map.at(key.front()))] = color;
    }
  }
  g.point_status.clear();
  for (const auto& [key, st] : f.point_status) g.point_status[map_key(e, key)] = st;
  g.cell_directions.clear();
  for (const auto& [cell, dir] : f.cell_directions) {
    const auto& [img, reversed] = e.cell_map.at(cell);
    g.cell_directions[img] = reversed ? -dir : dir;
  }
  for (std::size_t r = 0; r < f.regions.size(); ++r) {
    const std::string& target = e.region_map.at(s.two_cells[r].region);
    const std::size_t j = s.face_index(target);
    g.regions[j] = apply_symmetry(s, e, f.regions[r], structure_region_boundary(s, g, target));
  }
  return g;
}

std::string structure_code(const FlowStructure& f) {
  std::string out = to_string(f.family) + "#" + option_tag(f) + "#";
  for (const auto& [k, v] : f.coloring.colors) out += k + "=" + to_string(v) + ",";
  out += "#";
  for (const auto& [k, v] : f.point_status) out += k + "=" + (v == PointStatus::Node ? "n," : "s,");
  out += "#";
  for (const auto& [k, v] : f.cell_directions) out += std::string(1, k) + (v > 0 ? "+" : "-");
  for (const auto& rf : f.regions) out += "#" + rf.boundary.region + ":" + rf.code();
  return out;
}

FlowClass canonical_form(const StratifiedSurface& s, const FlowStructure& f, GroupChoice g) {
  const auto elements = acting_elements(s, g);
  std::set<std::string> codes;
  for (const auto& e : elements) {
    codes.insert(structure_code(e.is_identity() ? f : apply_symmetry(s, e, f)));
  }
  FlowClass c;
  c.canonical_code = *codes.begin();
  c.representative = f;
  c.orbit_size = codes.size();
  c.symmetric = c.orbit_size < elements.size();
  return c;
}

std::vector<FlowClass> classify(const StratifiedSurface& s, const std::vector<FlowStructure>& flows,
                                GroupChoice g, unsigned threads) {
  std::vector<FlowClass> forms(flows.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < flows.size(); i += step) forms[i] = canonical_form(s, flows[i], g);
  };
  if (threads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, work, t, threads));
    for (auto& p : pool) p.get();
  }
  std::vector<FlowClass> classes;
  std::unordered_map<std::string, std::size_t> index;
  for (auto& fc : forms) {
    auto [it, inserted] = index.try_emplace(fc.canonical_code, classes.size());
    if (inserted) classes.push_back(std::move(fc));
    else classes[it->second].members++;
  }
  return classes;
}

CountReport count_report(const StratifiedSurface& s, Family family, const std::vector<FlowClass>& classes,
                         std::size_t labeled) {
  CountReport r;
  r.surface = s.name;
  r.family = family;
  r.labeled = labeled;
  r.n = classes.size();
  for (const auto& c : classes) {
    auto& po = r.per_option[option_tag(c.representative)];
    po.n++;
    if (c.symmetric) {
      r.n_s++;
      po.n_s++;
    }
    r.codes.push_back(c.canonical_code);
  }
  r.m = homotopy_count(static_cast<std::int64_t>(r.n), static_cast<std::int64_t>(r.n_s), s.name);
  return r;
}

RegionCounts region_counts(const StratifiedSurface& s, const Coloring& c) {
  const auto orientation = derive_orientations(s, c);
  const auto elements = acting_elements(s, GroupChoice::Reflection);
  const SymmetryElement* reflection = elements.size() > 1 ? &elements[1] : nullptr;

  bool invariant = reflection != nullptr;
  Coloring mirrored;
  if (reflection) {
    for (const auto& [key, color] : c.colors) {
      mirrored.colors[s.class_key(reflection->label_map.at(key.front()))] = color;
    }
    invariant = mirrored == c;
  }

  RegionCounts rc;
  auto count = [&](const std::string& region, std::size_t& total, std::optional<std::size_t>& sym,
                   std::optional<std::size_t>& free) {
    auto rb = region_boundary(s, region, orientation, c);
    auto flows = enumerate_region_flows(rb);
    total = flows.size();
    if (!invariant || reflection->region_map.at(region) != region) return;
    std::size_t fixed = 0;
    for (const auto& f : flows) {
      if (apply_symmetry(s, *reflection, f, rb).code() == f.code()) ++fixed;
    }
    sym = fixed;
    free = (total - fixed) / 2;
  };
  count("BR", rc.n_b, rc.b_s, rc.b_n);
  count("CR", rc.n_c, rc.c_s, rc.c_n);
  return rc;
}

std::int64_t burnside_combine(std::int64_t b_s, std::int64_t b_n, std::int64_t c_s, std::int64_t c_n) {
  if (b_s < 0 || b_n < 0 || c_s < 0 || c_n < 0) throw DomainError("region counts must be nonnegative");
  return b_s * c_s + b_s * c_n + b_n * c_s + 2 * b_n * c_n;
}

std::int64_t burnside_combine(const RegionCounts& rc) {
  if (!rc.b_s || !rc.b_n || !rc.c_s || !rc.c_n) {
    throw DomainError("symmetric counts need a reflection-invariant coloring");
  }
  return burnside_combine(static_cast<std::int64_t>(*rc.b_s), static_cast<std::int64_t>(*rc.b_n),
                          static_cast<std::int64_t>(*rc.c_s), static_cast<std::int64_t>(*rc.c_n));
}

std::int64_t homotopy_count(std::int64_t n, std::int64_t n_s, SurfaceName surface) {
  if (n < 0 || n_s < 0) throw DomainError("class counts must be nonnegative");
  if (n_s > n) throw DomainError("symmetric count exceeds the class count");
  const std::int64_t base = 2 * n - n_s;
  return surface == SurfaceName::Girls ? base : 3 * base;
}

std::optional<std::int64_t> infer_symmetric_count(std::int64_t n, std::int64_t m, SurfaceName surface) {
  const std::int64_t factor = surface == SurfaceName::Girls ? 1 : 3;
  if (m % factor != 0) return std::nullopt;
  const std::int64_t n_s = 2 * n - m / factor;
  if (n_s < 0 || n_s > n) return std::nullopt;
  return n_s;
}

std::vector<Table61Row> table61(std::optional<SurfaceName> surface, unsigned threads) {
  std::vector<Table61Row> rows;
  const Family families[] = {Family::OneFixedPoint, Family::MsOptimal, Family::Projective};
  if (!surface || *surface == SurfaceName::Girls) {
    const auto s = build_surface(SurfaceName::Girls);
    Table61Row row;
    row.surface = SurfaceName::Girls;
    for (Family fam : families) {
      auto flows = enumerate_family(s, fam, {threads});
      auto classes = classify(s, flows.flows, GroupChoice::Reflection, threads);
      auto rep = count_report(s, fam, classes, flows.flows.size());
      row.cells.push_back({fam, static_cast<std::int64_t>(rep.n), static_cast<std::int64_t>(rep.n_s), rep.m, true, true});
    }
    rows.push_back(std::move(row));
  }
  if (!surface || *surface == SurfaceName::Boys) {
    // Published values; the symmetric counts are inferred from the homotopy formula.
    const std::pair<std::int64_t, std::int64_t> published[] = {{18, 108}, {342, 2004}, {80, 438}};
    Table61Row row;
    row.surface = SurfaceName::Boys;
    for (std::size_t i = 0; i < 3; ++i) {
      Table61Cell cell;
      cell.family = families[i];
      cell.n = published[i].first;
      cell.m = published[i].second;
      auto ns = infer_symmetric_count(cell.n, cell.m, SurfaceName::Boys);
      cell.consistent = ns.has_value();
      cell.n_s = ns.value_or(-1);
      row.cells.push_back(cell);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace stratflow
