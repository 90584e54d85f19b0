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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace stratflow {

enum class SurfaceName { Boys, Girls };

SurfaceName parse_surface_name(std::string_view text);
std::string to_string(SurfaceName name);
std::string display_name(SurfaceName name);

using Angle = int;
using CellLabel = char;

inline constexpr Angle kAngleCount = 12;

// One side of a two-cell: the cell token between two consecutive angles of a word.
struct Side {
  Angle start = 0;
  CellLabel cell = 0;
  bool primed = false;
  Angle end = 0;
  friend bool operator==(const Side&, const Side&) = default;
};

// Cyclic boundary word such as 1A6C'5C'8B11C1.  The closing angle repeats the first.
class BoundaryWord {
 public:
  BoundaryWord() = default;
  explicit BoundaryWord(std::vector<Side> sides);

  static BoundaryWord parse(std::string_view text);

  const std::vector<Side>& sides() const { return sides_; }
  std::size_t size() const { return sides_.size(); }
  std::string str() const;

  friend bool operator==(const BoundaryWord&, const BoundaryWord&) = default;

 private:
  std::vector<Side> sides_;
};

struct TwoCell {
  std::string region;
  BoundaryWord word;
  // One marked-point label per side, or empty when the surface carries no labels.
  std::vector<char> marked_points;
};

struct SymmetryElement {
  std::string name;
  std::array<Angle, kAngleCount + 1> angle_map{};
  // Image cell and whether its direction is reversed.
  std::map<CellLabel, std::pair<CellLabel, bool>> cell_map;
  std::map<std::string, std::string> region_map;
  std::map<char, char> label_map;
  bool reverses_reading = false;

  bool is_identity() const;
  friend bool operator==(const SymmetryElement&, const SymmetryElement&) = default;
};

SymmetryElement compose(const SymmetryElement& outer, const SymmetryElement& inner);
int element_order(const SymmetryElement& e);

struct SymmetryGroup {
  std::vector<SymmetryElement> generators;
  std::vector<SymmetryElement> elements;
  std::size_t order() const { return elements.size(); }
};

struct StratifiedSurface {
  SurfaceName name = SurfaceName::Girls;
  std::vector<Angle> angles;
  std::map<CellLabel, std::vector<std::pair<Angle, Angle>>> one_cells;
  std::vector<TwoCell> two_cells;
  std::vector<std::vector<char>> marked_point_classes;
  // Angles grouped by the preimage of the null point they belong to.
  std::vector<std::vector<Angle>> sheets;
  SymmetryGroup symmetry;

  const TwoCell& two_cell(std::string_view region) const;
  std::size_t face_index(std::string_view region) const;
  int sheet_of(Angle a) const;
  std::string class_key(char label) const;
};

StratifiedSurface build_surface(SurfaceName name);
StratifiedSurface build_surface(std::string_view name);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  const ValidationCheck* find(std::string_view name) const;
};

ValidationReport validate_complex(const StratifiedSurface& s);

struct SideRef {
  std::size_t face = 0;
  std::size_t side = 0;
  friend auto operator<=>(const SideRef&, const SideRef&) = default;
};

// An edge of the pullback complex: two sides of the same one-cell glued together.
struct Lift {
  std::string name;
  CellLabel cell = 0;
  std::array<SideRef, 2> sides{};
  // True when the two sides are glued with their reading directions aligned.
  bool parallel = false;
  std::size_t tail = 0;
  std::size_t head = 0;
};

struct PullbackComplex {
  std::vector<std::vector<Angle>> vertices;
  std::vector<Lift> edges;
  std::vector<std::string> faces;
  // +1 or -1 per face: the reading direction that makes cell directions agree across lifts.
  std::vector<int> face_signs;

  long euler_characteristic() const;
  std::size_t vertex_of(Angle a) const;
  std::size_t lift_of(SideRef side) const;
};

PullbackComplex pullback_complex(const StratifiedSurface& s);
// Same construction without the validation pass; throws DomainError when the sides cannot be paired.
PullbackComplex pullback_complex_unchecked(const StratifiedSurface& s);

// Effective direction of a side after face normalization: +1 when the cell runs start to end.
int effective_sign(const StratifiedSurface& s, const PullbackComplex& p, SideRef side);

struct BoundarySide {
  std::size_t lift = 0;
  bool reversed = false;
  std::optional<char> marked_point;
  friend bool operator==(const BoundarySide&, const BoundarySide&) = default;
};

struct GluingAssessment {
  std::uint32_t mask = 0;
  bool connected = false;
  bool orientable = false;
  long euler = 0;
  std::size_t boundary_components = 0;
  bool antipodal = false;
  bool admissible = false;
  std::string reason;
  std::vector<BoundarySide> boundary;
};

struct PlanarModel {
  std::uint32_t glued_mask = 0;
  std::vector<std::size_t> glued_lifts;
  std::vector<BoundarySide> boundary;
};

GluingAssessment assess_gluing(const StratifiedSurface& s, std::uint32_t mask);
std::vector<PlanarModel> enumerate_planar_gluings(const StratifiedSurface& s);

}  // namespace stratflow
