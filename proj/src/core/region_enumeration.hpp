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

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/cw_complex.hpp"
#include "core/flow_model.hpp"
#include "core/planar_map.hpp"

namespace stratflow {

enum class PointStatus { Node, Saddle };
// Source type: joined to saddles by outgoing separatrices.  Sink type: incoming.
enum class FlowType { Source, Sink, None };

std::string to_string(PointStatus s);

FlowType flow_type(const BoundaryItem& item);

struct FaceCell {
  VertexId source = 0;
  VertexId sink = 0;
  friend bool operator==(const FaceCell&, const FaceCell&) = default;
};

struct Separatrix {
  VertexId from = 0;
  VertexId to = 0;
};

struct RegionFlow {
  RegionBoundary boundary;
  // One entry per boundary item; corners are always nodes.
  std::vector<PointStatus> statuses;
  PlanarMap diagram;
  // Active source and sink of every complementary face, in inner-face order.
  std::vector<FaceCell> cells;

  // Type of vertex v: boundary items follow their color or role, interior vertices their kind.
  FlowType vertex_type(VertexId v) const;
  bool is_saddle(VertexId v) const;
  std::string vertex_ref(VertexId v) const;
  // Edges that are not boundary arcs, oriented along the flow.
  std::vector<Separatrix> separatrices() const;
  std::string code() const;

  friend bool operator==(const RegionFlow&, const RegionFlow&) = default;
};

struct RegionProblem {
  RegionBoundary boundary;
  std::vector<PointStatus> statuses;
  int interior_sinks = 0;
  int interior_sources = 0;
  int interior_saddles = 0;
};

// All diagrams for fixed statuses and exact interior counts, in deterministic order.
std::vector<RegionFlow> solve_region(const RegionProblem& problem);

// Every status choice for the marked points.  With the flag, up to two interior saddles.
std::vector<RegionFlow> enumerate_region_flows(const RegionBoundary& rb, bool allow_interior_saddles = false);

// Recomputes the active source/sink of each face; false when some face has no unique pair.
bool assign_cells(RegionFlow& flow);

enum class Family { OneFixedPoint, MsOptimal, Projective };

std::string to_string(Family f);
Family parse_family(const std::string& text);

struct FlowStructure {
  SurfaceName surface = SurfaceName::Girls;
  Family family = Family::MsOptimal;
  int option = 0;
  bool flipped = false;
  Coloring coloring;
  // Projective family: status of each fixed point on the 1-cell lifts, keyed by its labels.
  std::map<std::string, PointStatus> point_status;
  // One-fixed-point family: direction of each cell.
  std::map<CellLabel, int> cell_directions;
  // Indexed like the surface's two-cells.
  std::vector<RegionFlow> regions;

  friend bool operator==(const FlowStructure&, const FlowStructure&) = default;
};

struct EnumerationOptions {
  unsigned threads = 1;
};

struct FlowFamily {
  Family family = Family::MsOptimal;
  std::vector<FlowStructure> flows;
  // Labeled structures per option tag, e.g. "1" and "1-flipped".
  std::map<std::string, std::size_t> per_option;
};

std::string option_tag(const FlowStructure& f);

// The three optimal Morse-Smale colorings with {c,d,g} Green, in option order.
std::vector<Coloring> ms_option_colorings();

FlowFamily enumerate_one_fixed_point_family(const StratifiedSurface& s);
FlowFamily enumerate_ms_optimal(const StratifiedSurface& s, const EnumerationOptions& opts = {});
FlowFamily enumerate_projective(const StratifiedSurface& s, const EnumerationOptions& opts = {});
FlowFamily enumerate_family(const StratifiedSurface& s, Family family, const EnumerationOptions& opts = {});

// Swaps sources and sinks everywhere.
FlowStructure flip_structure(const StratifiedSurface& s, const FlowStructure& f);

struct FixedPointCensus {
  int sources = 0;
  int sinks = 0;
  int saddles = 0;
  int surface_fixed_points = 0;
  int index_sum() const { return sources - saddles + sinks; }
};

FixedPointCensus fixed_point_census(const StratifiedSurface& s, const FlowStructure& f);

// Recomputes boundaries for the structure's coloring or orientation (used after decoding).
RegionBoundary structure_region_boundary(const StratifiedSurface& s, const FlowStructure& f,
                                         const std::string& region);

}  // namespace stratflow
