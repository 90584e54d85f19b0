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
#include <vector>

#include "core/classification.hpp"

namespace stratflow {

enum class OutputFormat { Json, Csv, Table, Dot, Svg };

OutputFormat parse_format(const std::string& text);
std::string to_string(OutputFormat f);

std::string format_surfaces(const std::vector<StratifiedSurface>& surfaces, OutputFormat fmt);
// Json yields one compact document per line.
std::string format_flows(const StratifiedSurface& s, const FlowFamily& family, OutputFormat fmt);
std::string format_flow(const StratifiedSurface& s, const FlowStructure& f, OutputFormat fmt);
std::string format_count_report(const CountReport& r, OutputFormat fmt);
std::string format_table61(const std::vector<Table61Row>& rows, OutputFormat fmt);
std::string format_region_counts(const StratifiedSurface& s, OutputFormat fmt);

}  // namespace stratflow
