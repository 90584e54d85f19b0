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

#include "core/region_enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <future>
#include <set>
#include <tuple>

#include "core/errors.hpp"

namespace stratflow {

std::string to_string(PointStatus s) { return s == PointStatus::Node ? "node" : "saddle"; }

std::string to_string(Family f) {
  switch (f) {
    case Family::OneFixedPoint: return "one-fixed-point";
    case Family::MsOptimal: return "ms-optimal";
    case Family::Projective: return "projective";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  if (text == "one-fixed-point") return Family::OneFixedPoint;
  if (text == "ms-optimal") return Family::MsOptimal;
  if (text == "projective") return Family::Projective;
  throw DomainError("unknown family '" + text + "'");
}

FlowType flow_type(const BoundaryItem& item) {
  if (item.is_corner()) {
    if (item.role == CornerRole::Source) return FlowType::Source;
    if (item.role == CornerRole::Sink) return FlowType::Sink;
    return FlowType::None;
  }
  return item.color == Color::Green ? FlowType::Source : FlowType::Sink;
}

FlowType RegionFlow::vertex_type(VertexId v) const {
  if (v < boundary.items.size()) return flow_type(boundary.items[v]);
  switch (diagram.kind(v)) {
    case VertexKind::Sink: return FlowType::Sink;
    case VertexKind::Source: return FlowType::Source;
    default: return FlowType::None;
  }
}

bool RegionFlow::is_saddle(VertexId v) const {
  if (v < boundary.items.size()) return statuses[v] == PointStatus::Saddle;
  return diagram.kind(v) == VertexKind::Saddle;
}

std::string RegionFlow::vertex_ref(VertexId v) const {
  if (v < boundary.items.size()) return boundary.items[v].ref();
  const VertexKind k = diagram.kind(v);
  int index = 0;
  for (VertexId w = static_cast<VertexId>(boundary.items.size()); w < v; ++w) {
    if (diagram.kind(w) == k) ++index;
  }
  const char* prefix = k == VertexKind::Sink ? "K" : (k == VertexKind::Source ? "S" : "X");
  return prefix + std::to_string(index);
}

std::vector<Separatrix> RegionFlow::separatrices() const {
  std::vector<Separatrix> out;
  for (Dart d = 0; d < diagram.dart_count(); d += 2) {
    if (diagram.is_boundary_edge(d)) continue;
    VertexId u = diagram.src(d), w = diagram.dst(d);
    VertexId node = is_saddle(u) ? w : u;
    VertexId saddle = node == u ? w : u;
    if (vertex_type(node) == FlowType::Source) out.push_back({node, saddle});
    else out.push_back({saddle, node});
  }
  return out;
}

std::string RegionFlow::code() const {
  std::string s;
  for (auto st : statuses) s += st == PointStatus::Node ? 'n' : 's';
  return s + "|" + diagram.canonical_code();
}

namespace {

bool is_node(const RegionFlow& f, VertexId v) {
  return !f.is_saddle(v) && f.vertex_type(v) != FlowType::None;
}

}  // namespace

bool assign_cells(RegionFlow& flow) {
  flow.cells.clear();
  for (const auto& face : flow.diagram.inner_faces()) {
    std::set<VertexId> sources, sinks;
    for (Dart d : face) {
      VertexId v = flow.diagram.src(d);
      if (!is_node(flow, v)) continue;
      (flow.vertex_type(v) == FlowType::Source ? sources : sinks).insert(v);
    }
    if (sources.size() != 1 || sinks.size() != 1) return false;
    flow.cells.push_back({*sources.begin(), *sinks.begin()});
  }
  return true;
}

namespace {

FlowType opposite(FlowType t) { return t == FlowType::Source ? FlowType::Sink : FlowType::Source; }

VertexKind node_kind(FlowType t) { return t == FlowType::Source ? VertexKind::Source : VertexKind::Sink; }

// Grows separatrix diagrams edge by edge.  Boundary saddles are served first, in boundary
// order; interior saddles are then attached one at a time to an existing node and completed
// with alternating stable and unstable separatrices.  New interior nodes only appear as
// pendant endpoints, so the map stays connected throughout.
class RegionSearch {
 public:
  explicit RegionSearch(const RegionProblem& p) : problem_(p) {
    proto_.boundary = p.boundary;
    proto_.statuses = p.statuses;
    for (std::size_t i = 0; i < p.boundary.items.size(); ++i) {
      if (p.statuses[i] == PointStatus::Saddle) boundary_saddles_.push_back(static_cast<VertexId>(i));
    }
  }

  std::vector<RegionFlow> run() {
    Budget b{problem_.interior_sinks, problem_.interior_sources, problem_.interior_saddles};
    boundary_step(PlanarMap::disk(problem_.boundary.items.size()), 0, b);
    std::vector<std::pair<std::tuple<std::size_t, std::vector<std::pair<std::string, std::string>>, std::string>, RegionFlow>> keyed;
    for (auto& [code, flow] : found_) {
      std::vector<std::pair<std::string, std::string>> ends;
      for (const auto& sx : flow.separatrices()) ends.push_back({flow.vertex_ref(sx.from), flow.vertex_ref(sx.to)});
      std::sort(ends.begin(), ends.end());
      keyed.push_back({{ends.size(), ends, code}, std::move(flow)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<RegionFlow> out;
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
  }

 private:
  struct Budget {
    int sinks, sources, saddles;
    int& nodes(FlowType t) { return t == FlowType::Source ? sources : sinks; }
  };

  RegionFlow view(const PlanarMap& m) const {
    RegionFlow f = proto_;
    f.diagram = m;
    return f;
  }

  void boundary_step(const PlanarMap& m, std::size_t idx, Budget b) {
    if (idx == boundary_saddles_.size()) {
      interior_step(m, b);
      return;
    }
    const VertexId v = boundary_saddles_[idx];
    const FlowType t = flow_type(problem_.boundary.items[v]);
    if (t == FlowType::None) return;
    const Corner here{v, m.boundary_dart(v)};
    const RegionFlow f = view(m);
    for (Dart x : m.face(here.after)) {
      VertexId w = m.src(x);
      if (!is_node(f, w) || f.vertex_type(w) != t) continue;
      PlanarMap next = m;
      next.add_edge(here, {w, x});
      boundary_step(next, idx + 1, b);
    }
    if (b.nodes(t) > 0) {
      PlanarMap next = m;
      next.add_pendant(here, node_kind(t));
      Budget nb = b;
      nb.nodes(t)--;
      boundary_step(next, idx + 1, nb);
    }
  }

  void interior_step(const PlanarMap& m, Budget b) {
    if (b.saddles == 0) {
      if (b.sinks == 0 && b.sources == 0) record(m);
      return;
    }
    const RegionFlow f = view(m);
    for (const auto& face : m.inner_faces()) {
      for (Dart x : face) {
        VertexId w = m.src(x);
        if (!is_node(f, w)) continue;
        PlanarMap next = m;
        Dart d = next.add_pendant({w, x}, VertexKind::Saddle);
        Budget nb = b;
        nb.saddles--;
        fill_saddle(next, next.dst(d), PlanarMap::twin(d), opposite(f.vertex_type(w)), 1, nb);
      }
    }
  }

  void fill_saddle(const PlanarMap& m, VertexId saddle, Dart last, FlowType want, int done, Budget b) {
    if (done == 4) {
      interior_step(m, b);
      return;
    }
    const Corner here{saddle, last};
    const RegionFlow f = view(m);
    for (Dart y : m.face(last)) {
      VertexId w = m.src(y);
      if (!is_node(f, w) || f.vertex_type(w) != want) continue;
      PlanarMap next = m;
      Dart e = next.add_edge(here, {w, y});
      fill_saddle(next, saddle, e, opposite(want), done + 1, b);
    }
    if (b.nodes(want) > 0) {
      PlanarMap next = m;
      Dart e = next.add_pendant(here, node_kind(want));
      Budget nb = b;
      nb.nodes(want)--;
      fill_saddle(next, saddle, e, opposite(want), done + 1, nb);
    }
  }

  void record(const PlanarMap& m) {
    RegionFlow f = view(m);
    if (!assign_cells(f)) return;
    std::string code = f.code();
    found_.emplace(std::move(code), std::move(f));
  }

  const RegionProblem& problem_;
  RegionFlow proto_;
  std::vector<VertexId> boundary_saddles_;
  std::map<std::string, RegionFlow> found_;
};

}  // namespace

std::vector<RegionFlow> solve_region(const RegionProblem& problem) {
  if (problem.statuses.size() != problem.boundary.items.size()) {
    throw DomainError("one status per boundary item is required");
  }
  for (std::size_t i = 0; i < problem.statuses.size(); ++i) {
    if (problem.boundary.items[i].is_corner() && problem.statuses[i] != PointStatus::Node) {
      throw DomainError("corners cannot be saddles");
    }
  }
  if (problem.interior_sinks < 0 || problem.interior_sources < 0 || problem.interior_saddles < 0) {
    throw DomainError("interior counts must be nonnegative");
  }
  return RegionSearch(problem).run();
}

std::vector<RegionFlow> enumerate_region_flows(const RegionBoundary& rb, bool allow_interior_saddles) {
  std::vector<std::size_t> marked;
  for (std::size_t i = 0; i < rb.items.size(); ++i) {
    if (!rb.items[i].is_corner()) marked.push_back(i);
  }
  std::vector<RegionFlow> out;
  const int max_saddles = allow_interior_saddles ? 2 : 0;
  for (int saddles = 0; saddles <= max_saddles; ++saddles) {
    for (std::uint32_t mask = 0; mask < (1u << marked.size()); ++mask) {
      RegionProblem p;
      p.boundary = rb;
      p.statuses.assign(rb.items.size(), PointStatus::Node);
      for (std::size_t j = 0; j < marked.size(); ++j) {
        if ((mask >> j) & 1u) p.statuses[marked[j]] = PointStatus::Saddle;
      }
      p.interior_saddles = saddles;
      auto flows = solve_region(p);
      out.insert(out.end(), std::make_move_iterator(flows.begin()), std::make_move_iterator(flows.end()));
    }
  }
  return out;
}

std::string option_tag(const FlowStructure& f) {
  return std::to_string(f.option) + (f.flipped ? "-flipped" : "");
}

std::vector<Coloring> ms_option_colorings() {
  const Color G = Color::Green, R = Color::Red;
  return {
      Coloring{{{"cdg", G}, {"ae", R}, {"bf", G}}},
      Coloring{{{"cdg", G}, {"ae", R}, {"bf", R}}},
      Coloring{{{"cdg", G}, {"ae", G}, {"bf", G}}},
  };
}

namespace {

void require_girls(const StratifiedSurface& s, Family f) {
  if (s.name != SurfaceName::Girls) {
    throw UnsupportedError(to_string(f) + " enumeration is implemented for the Girl's surface only");
  }
}

// Runs independent jobs on up to `threads` workers; results keep the job order.
template <typename T>
std::vector<T> run_jobs(const std::vector<std::function<T()>>& jobs, unsigned threads) {
  std::vector<T> results(jobs.size());
  if (threads <= 1 || jobs.size() <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = jobs[i]();
  };
  std::vector<std::future<void>> pool;
  for (unsigned t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return results;
}

Coloring uniform_coloring(const StratifiedSurface& s, Color c) {
  Coloring out;
  for (const auto& cls : s.marked_point_classes) out.colors[std::string(cls.begin(), cls.end())] = c;
  return out;
}

void add_flipped_half(const StratifiedSurface& s, FlowFamily& fam) {
  const std::size_t half = fam.flows.size();
  for (std::size_t i = 0; i < half; ++i) fam.flows.push_back(flip_structure(s, fam.flows[i]));
  fam.per_option.clear();
  for (const auto& f : fam.flows) fam.per_option[option_tag(f)]++;
}

// Lifted fixed points on the 1-cells, keyed by their labels: "a", "cd", ...
std::vector<std::string> lift_point_keys(const StratifiedSurface& s) {
  const PullbackComplex p = pullback_complex_unchecked(s);
  std::vector<std::string> keys;
  for (const auto& l : p.edges) {
    std::string key;
    for (const auto& ref : l.sides) {
      const auto& labels = s.two_cells[ref.face].marked_points;
      if (labels.empty()) continue;
      if (key.find(labels[ref.side]) == std::string::npos) key += labels[ref.side];
    }
    std::sort(key.begin(), key.end());
    keys.push_back(key);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

PointStatus status_of(const std::map<std::string, PointStatus>& st, char label) {
  for (const auto& [k, v] : st) {
    if (k.find(label) != std::string::npos) return v;
  }
  throw DomainError(std::string("no status for point ") + label);
}

std::vector<std::vector<int>> compositions(int total, std::size_t parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == parts) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (parts > 0) rec(0, total);
  return out;
}

void cartesian(const std::vector<const std::vector<RegionFlow>*>& lists, const FlowStructure& proto,
               std::vector<FlowStructure>& out) {
  for (const auto* l : lists) {
    if (l->empty()) return;
  }
  std::vector<std::size_t> idx(lists.size(), 0);
  while (true) {
    FlowStructure f = proto;
    for (std::size_t r = 0; r < lists.size(); ++r) f.regions.push_back((*lists[r])[idx[r]]);
    out.push_back(std::move(f));
    std::size_t r = lists.size();
    while (r > 0) {
      --r;
      if (++idx[r] < lists[r]->size()) break;
      idx[r] = 0;
      if (r == 0) return;
    }
    if (lists.empty()) return;
  }
}

}  // namespace

RegionBoundary structure_region_boundary(const StratifiedSurface& s, const FlowStructure& f,
                                         const std::string& region) {
  if (f.family == Family::OneFixedPoint) {
    return region_boundary(s, region, orientations_from_cells(s, f.cell_directions));
  }
  return region_boundary(s, region, derive_orientations(s, f.coloring), f.coloring);
}

FlowFamily enumerate_one_fixed_point_family(const StratifiedSurface& s) {
  require_girls(s, Family::OneFixedPoint);
  FlowFamily fam;
  fam.family = Family::OneFixedPoint;
  for (const auto& flow : enumerate_one_fixed_point(s)) {
    FlowStructure f;
    f.surface = s.name;
    f.family = Family::OneFixedPoint;
    int a = flow.directions.at('A'), b = flow.directions.at('B');
    f.option = 1 + (a < 0 ? 1 : 0) + (b < 0 ? 2 : 0);
    f.cell_directions = flow.directions;
    for (const auto& tc : s.two_cells) {
      RegionFlow rf;
      rf.boundary = flow.boundaries.at(tc.region);
      rf.statuses.assign(rf.boundary.items.size(), PointStatus::Node);
      rf.diagram = PlanarMap::disk(rf.boundary.items.size());
      f.regions.push_back(std::move(rf));
    }
    fam.flows.push_back(std::move(f));
  }
  for (const auto& f : fam.flows) fam.per_option[option_tag(f)]++;
  return fam;
}

FlowFamily enumerate_ms_optimal(const StratifiedSurface& s, const EnumerationOptions& opts) {
  require_girls(s, Family::MsOptimal);
  const auto colorings = ms_option_colorings();
  const std::size_t nr = s.two_cells.size();
  std::vector<std::function<std::vector<RegionFlow>()>> jobs;
  for (const auto& c : colorings) {
    for (const auto& tc : s.two_cells) {
      jobs.push_back([&s, c, region = tc.region]() {
        return enumerate_region_flows(region_boundary(s, region, derive_orientations(s, c), c));
      });
    }
  }
  auto per_region = run_jobs(jobs, opts.threads);

  FlowFamily fam;
  fam.family = Family::MsOptimal;
  for (std::size_t o = 0; o < colorings.size(); ++o) {
    FlowStructure proto;
    proto.surface = s.name;
    proto.family = Family::MsOptimal;
    proto.option = static_cast<int>(o) + 1;
    proto.coloring = colorings[o];
    std::vector<const std::vector<RegionFlow>*> lists;
    for (std::size_t r = 0; r < nr; ++r) lists.push_back(&per_region[o * nr + r]);
    cartesian(lists, proto, fam.flows);
  }
  add_flipped_half(s, fam);
  return fam;
}

FlowFamily enumerate_projective(const StratifiedSurface& s, const EnumerationOptions& opts) {
  require_girls(s, Family::Projective);
  // Every lifted vertex is a source, so every marked point is of sink type.  The census of
  // three sources, three sinks and five saddles fixes the interior counts.
  const PullbackComplex p = pullback_complex_unchecked(s);
  const int vertex_sources = static_cast<int>(p.vertices.size());
  const int total_sinks = vertex_sources;
  const int total_saddles = static_cast<int>(p.edges.size()) - 1;
  const Coloring coloring = uniform_coloring(s, Color::Red);
  const auto orientation = derive_orientations(s, coloring);
  std::vector<RegionBoundary> boundaries;
  for (const auto& tc : s.two_cells) boundaries.push_back(region_boundary(s, tc.region, orientation, coloring));

  const auto keys = lift_point_keys(s);
  std::vector<std::string> free_keys;
  for (const auto& k : keys) {
    if (k != "e" && k != "f") free_keys.push_back(k);
  }
  const std::vector<std::pair<PointStatus, PointStatus>> options = {
      {PointStatus::Node, PointStatus::Node},
      {PointStatus::Node, PointStatus::Saddle},
      {PointStatus::Saddle, PointStatus::Saddle},
  };

  std::vector<std::function<std::vector<FlowStructure>()>> jobs;
  for (std::size_t o = 0; o < options.size(); ++o) {
    for (std::uint32_t mask = 0; mask < (1u << free_keys.size()); ++mask) {
      jobs.push_back([&, o, mask]() {
        std::map<std::string, PointStatus> st;
        st["e"] = options[o].first;
        st["f"] = options[o].second;
        for (std::size_t j = 0; j < free_keys.size(); ++j) {
          st[free_keys[j]] = (mask >> j) & 1u ? PointStatus::Saddle : PointStatus::Node;
        }
        int nodes = 0, saddles = 0;
        for (const auto& [k, v] : st) (v == PointStatus::Node ? nodes : saddles)++;
        std::vector<FlowStructure> out;
        const int need_sinks = total_sinks - nodes;
        const int need_saddles = total_saddles - saddles;
        if (need_sinks < 0 || need_saddles < 0) return out;

        FlowStructure proto;
        proto.surface = s.name;
        proto.family = Family::Projective;
        proto.option = static_cast<int>(o) + 1;
        proto.coloring = coloring;
        proto.point_status = st;

        std::map<std::tuple<std::size_t, int, int>, std::vector<RegionFlow>> memo;
        auto solve = [&](std::size_t r, int k, int x) -> const std::vector<RegionFlow>& {
          auto key = std::make_tuple(r, k, x);
          auto it = memo.find(key);
          if (it != memo.end()) return it->second;
          RegionProblem prob;
          prob.boundary = boundaries[r];
          for (const auto& item : prob.boundary.items) {
            prob.statuses.push_back(item.is_corner() ? PointStatus::Node : status_of(st, item.label));
          }
          prob.interior_sinks = k;
          prob.interior_saddles = x;
          return memo.emplace(key, solve_region(prob)).first->second;
        };
        const std::size_t nr = boundaries.size();
        for (const auto& ks : compositions(need_sinks, nr)) {
          for (const auto& xs : compositions(need_saddles, nr)) {
            std::vector<const std::vector<RegionFlow>*> lists;
            for (std::size_t r = 0; r < nr; ++r) lists.push_back(&solve(r, ks[r], xs[r]));
            cartesian(lists, proto, out);
          }
        }
        return out;
      });
    }
  }
  auto results = run_jobs(jobs, opts.threads);
  FlowFamily fam;
  fam.family = Family::Projective;
  for (auto& r : results) {
    fam.flows.insert(fam.flows.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  add_flipped_half(s, fam);
  return fam;
}

FlowFamily enumerate_family(const StratifiedSurface& s, Family family, const EnumerationOptions& opts) {
  switch (family) {
    case Family::OneFixedPoint: return enumerate_one_fixed_point_family(s);
    case Family::MsOptimal: return enumerate_ms_optimal(s, opts);
    case Family::Projective: return enumerate_projective(s, opts);
  }
  throw DomainError("unknown family");
}

FlowStructure flip_structure(const StratifiedSurface& s, const FlowStructure& f) {
  FlowStructure g = f;
  g.flipped = !f.flipped;
  if (f.family == Family::OneFixedPoint) {
    for (auto& [c, d] : g.cell_directions) d = -d;
  } else {
    g.coloring = f.coloring.flipped();
  }
  for (std::size_t r = 0; r < g.regions.size(); ++r) {
    auto& rf = g.regions[r];
    rf.boundary = structure_region_boundary(s, g, s.two_cells[r].region);
    rf.diagram = rf.diagram.with_kinds_swapped();
    if (f.family != Family::OneFixedPoint && !assign_cells(rf)) {
      throw DomainError("flipped region flow is invalid");
    }
  }
  return g;
}

FixedPointCensus fixed_point_census(const StratifiedSurface& s, const FlowStructure& f) {
  FixedPointCensus c;
  switch (f.family) {
    case Family::OneFixedPoint:
      c.surface_fixed_points = 1;
      return c;
    case Family::MsOptimal:
      // Fixed points on the immersed surface: the 0-cell and one per 1-cell class.
      c.surface_fixed_points = 1 + static_cast<int>(s.marked_point_classes.size());
      for (const auto& [k, v] : f.coloring.colors) (v == Color::Green ? c.sources : c.sinks)++;
      return c;
    case Family::Projective: break;
  }
  const PullbackComplex p = pullback_complex_unchecked(s);
  const int vertices = static_cast<int>(p.vertices.size());
  (f.flipped ? c.sinks : c.sources) += vertices;
  for (const auto& [k, st] : f.point_status) {
    if (st == PointStatus::Saddle) ++c.saddles;
    else (f.flipped ? c.sources : c.sinks)++;
  }
  int interior = 0;
  for (const auto& rf : f.regions) {
    for (VertexId v = static_cast<VertexId>(rf.boundary.items.size()); v < rf.diagram.vertex_count(); ++v) {
      ++interior;
      switch (rf.diagram.kind(v)) {
        case VertexKind::Sink: ++c.sinks; break;
        case VertexKind::Source: ++c.sources; break;
        case VertexKind::Saddle: ++c.saddles; break;
        default: break;
      }
    }
  }
  c.surface_fixed_points = 1 + static_cast<int>(s.marked_point_classes.size()) + interior;
  return c;
}

}  // namespace stratflow
