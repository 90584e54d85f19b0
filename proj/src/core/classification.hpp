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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/region_enumeration.hpp"

namespace stratflow {

enum class GroupChoice { Reflection, Full };

GroupChoice parse_group(const std::string& text);
std::string to_string(GroupChoice g);

// Group elements used for classification, identity first.
std::vector<SymmetryElement> acting_elements(const StratifiedSurface& s, GroupChoice g);

RegionFlow apply_symmetry(const StratifiedSurface& s, const SymmetryElement& e, const RegionFlow& rf,
                          const RegionBoundary& target);
FlowStructure apply_symmetry(const StratifiedSurface& s, const SymmetryElement& e, const FlowStructure& f);

// Serialization used for canonical forms: option tag, colors, statuses, then per-region codes.
std::string structure_code(const FlowStructure& f);

struct FlowClass {
  std::string canonical_code;
  FlowStructure representative;
  std::size_t orbit_size = 1;
  bool symmetric = false;
  std::size_t members = 1;
};

FlowClass canonical_form(const StratifiedSurface& s, const FlowStructure& f, GroupChoice g = GroupChoice::Reflection);

std::vector<FlowClass> classify(const StratifiedSurface& s, const std::vector<FlowStructure>& flows,
                                GroupChoice g = GroupChoice::Reflection, unsigned threads = 1);

struct OptionCount {
  std::size_t n = 0;
  std::size_t n_s = 0;
};

struct CountReport {
  SurfaceName surface = SurfaceName::Girls;
  Family family = Family::MsOptimal;
  std::size_t labeled = 0;
  std::size_t n = 0;
  std::size_t n_s = 0;
  std::int64_t m = 0;
  std::map<std::string, OptionCount> per_option;
  std::vector<std::string> codes;
};

CountReport count_report(const StratifiedSurface& s, Family family, const std::vector<FlowClass>& classes,
                         std::size_t labeled);

struct RegionCounts {
  std::size_t n_b = 0;
  std::size_t n_c = 0;
  // Present only when the coloring is carried to itself by the reflection.
  std::optional<std::size_t> b_s, b_n, c_s, c_n;
};

RegionCounts region_counts(const StratifiedSurface& s, const Coloring& c);

std::int64_t burnside_combine(std::int64_t b_s, std::int64_t b_n, std::int64_t c_s, std::int64_t c_n);
std::int64_t burnside_combine(const RegionCounts& rc);

std::int64_t homotopy_count(std::int64_t n, std::int64_t n_s, SurfaceName surface);

// Symmetric count implied by a published (n, m) pair; nullopt when no integer solution fits.
std::optional<std::int64_t> infer_symmetric_count(std::int64_t n, std::int64_t m, SurfaceName surface);

struct Table61Cell {
  Family family = Family::OneFixedPoint;
  std::int64_t n = 0;
  std::int64_t n_s = 0;
  std::int64_t m = 0;
  bool computed = false;
  bool consistent = true;
};

struct Table61Row {
  SurfaceName surface = SurfaceName::Girls;
  std::vector<Table61Cell> cells;
};

std::vector<Table61Row> table61(std::optional<SurfaceName> surface = std::nullopt, unsigned threads = 1);

}  // namespace stratflow
