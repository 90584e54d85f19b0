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

#include <json.hpp>

#include "core/classification.hpp"

namespace stratflow {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json surface_to_json(const StratifiedSurface& s);
Json validation_to_json(const ValidationReport& r);
Json planar_models_to_json(const StratifiedSurface& s, const std::vector<PlanarModel>& models);

Json flow_to_json(const StratifiedSurface& s, const FlowStructure& f);
// Rebuilds a structure from its JSON form.  Derived data (roles, colors, cells) is recomputed
// and checked against the document.
FlowStructure flow_from_json(const Json& j);

Json one_fixed_point_to_json(const OneFixedPointFlow& f);

}  // namespace stratflow
