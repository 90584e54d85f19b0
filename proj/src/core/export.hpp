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

#include <string>

#include "core/region_enumeration.hpp"

namespace stratflow {

enum class DiagramFormat { Dot, Svg };

std::string export_diagram(const StratifiedSurface& s, const FlowStructure& f, DiagramFormat format);

// Layout constants shared with tests.
inline constexpr double kSvgWidth = 900.0;
inline constexpr double kSvgHeight = 640.0;

}  // namespace stratflow
