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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/cw_complex.hpp"

namespace stratflow {

enum class Color { Green, Red };

std::string to_string(Color c);

// Color per marked-point class, keyed by the class labels concatenated ("cdg", "bf", "ae").
struct Coloring {
  std::map<std::string, Color> colors;

  Color of(const StratifiedSurface& s, char label) const;
  Coloring flipped() const;
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

enum class CornerRole { Source, Sink, Transit };

std::string to_string(CornerRole r);

// Flow direction on the two halves of a side: whether each half runs into its corner.
struct HalfArcs {
  bool into_start = false;
  bool into_end = false;
};

struct OrientationAssignment {
  // Set for whole-cell orientations: +1 follows the normalized cell direction.
  std::map<CellLabel, int> cell_directions;
  std::vector<std::vector<HalfArcs>> sides;
};

// Cell direction sign that sends the C trajectory from angle 12 to angle 2 on the Girl's surface.
inline constexpr int kNormalizedC = 1;

OrientationAssignment orientations_from_cells(const StratifiedSurface& s,
                                              const std::map<CellLabel, int>& directions);
OrientationAssignment derive_orientations(const StratifiedSurface& s, const Coloring& c);

std::map<Angle, CornerRole> corner_roles(const StratifiedSurface& s, const OrientationAssignment& o);

struct BoundaryItem {
  enum class Kind { Corner, Marked };
  Kind kind = Kind::Corner;
  Angle angle = 0;
  CornerRole role = CornerRole::Transit;
  char label = 0;
  Color color = Color::Green;

  bool is_corner() const { return kind == Kind::Corner; }
  // "7" for a corner, "a" for a marked point.
  std::string ref() const;
  friend bool operator==(const BoundaryItem&, const BoundaryItem&) = default;
};

struct RegionBoundary {
  std::string region;
  std::vector<BoundaryItem> items;

  std::optional<std::size_t> index_of(const std::string& ref) const;
  friend bool operator==(const RegionBoundary&, const RegionBoundary&) = default;
};

RegionBoundary region_boundary(const StratifiedSurface& s, const std::string& region,
                               const OrientationAssignment& o,
                               const std::optional<Coloring>& c = std::nullopt);

enum class SimpleRegionKind { Elliptic, Polar, RequiresSeparatrix };

std::string to_string(SimpleRegionKind k);

SimpleRegionKind classify_simple_region(const RegionBoundary& rb);

struct OneFixedPointFlow {
  std::map<CellLabel, int> directions;
  std::map<std::string, SimpleRegionKind> regions;
  std::map<std::string, RegionBoundary> boundaries;
};

// Orientation cases with C normalized; only flows whose regions are all elliptic or polar.
std::vector<OneFixedPointFlow> enumerate_one_fixed_point(const StratifiedSurface& s);
// Same search with both directions of C.
std::vector<OneFixedPointFlow> enumerate_one_fixed_point_labeled(const StratifiedSurface& s);

}  // namespace stratflow
