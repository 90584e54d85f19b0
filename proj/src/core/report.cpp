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

#include "core/report.hpp"

#include <iomanip>
#include <sstream>

#include "core/errors.hpp"
#include "core/export.hpp"
#include "core/serialization.hpp"

namespace stratflow {

OutputFormat parse_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "table") return OutputFormat::Table;
  if (text == "dot") return OutputFormat::Dot;
  if (text == "svg") return OutputFormat::Svg;
  throw DomainError("unknown format '" + text + "'");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Table: return "table";
    case OutputFormat::Dot: return "dot";
    case OutputFormat::Svg: return "svg";
  }
  return "?";
}

namespace {

void unsupported(OutputFormat f, const std::string& what) {
  throw DomainError("format " + to_string(f) + " is not available for " + what);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string coloring_text(const FlowStructure& f) {
  std::string out;
  for (const auto& [k, v] : f.coloring.colors) out += (out.empty() ? "" : " ") + k + "=" + to_string(v);
  return out;
}

std::string region_summary(const RegionFlow& rf) {
  std::string out;
  for (const auto& sx : rf.separatrices()) {
    out += (out.empty() ? "" : " ") + rf.vertex_ref(sx.from) + ">" + rf.vertex_ref(sx.to);
  }
  return out.empty() ? "-" : out;
}

std::string status_text(const FlowStructure& f) {
  std::string out;
  for (const auto& [k, v] : f.point_status) out += (out.empty() ? "" : " ") + k + "=" + to_string(v);
  for (const auto& [c, d] : f.cell_directions) {
    out += (out.empty() ? "" : " ") + std::string(d > 0 ? "" : "-") + std::string(1, c);
  }
  return out;
}

}  // namespace

std::string format_surfaces(const std::vector<StratifiedSurface>& surfaces, OutputFormat fmt) {
  std::ostringstream o;
  if (fmt == OutputFormat::Json) {
    Json list = Json::array();
    for (const auto& s : surfaces) {
      Json j = surface_to_json(s);
      const auto report = validate_complex(s);
      j["validation"] = validation_to_json(report);
      if (report.ok()) {
        const auto p = pullback_complex(s);
        j["pullback"] = {{"vertices", p.vertices.size()},
                         {"edges", p.edges.size()},
                         {"faces", p.faces.size()},
                         {"eulerCharacteristic", p.euler_characteristic()}};
        j["planarGluings"] = planar_models_to_json(s, enumerate_planar_gluings(s));
      }
      list.push_back(j);
    }
    Json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["surfaces"] = list;
    o << doc.dump(2) << "\n";
  } else if (fmt == OutputFormat::Csv) {
    o << "surface,check,passed,detail\n";
    for (const auto& s : surfaces) {
      for (const auto& c : validate_complex(s).checks) {
        o << to_string(s.name) << "," << c.name << "," << (c.passed ? "true" : "false") << "," << csv_field(c.detail)
          << "\n";
      }
    }
  } else if (fmt == OutputFormat::Table) {
    for (const auto& s : surfaces) {
      o << display_name(s.name) << " surface\n";
      for (const auto& tc : s.two_cells) {
        o << "  " << std::left << std::setw(4) << tc.region << tc.word.str();
        if (!tc.marked_points.empty()) o << "  points " << std::string(tc.marked_points.begin(), tc.marked_points.end());
        o << "\n";
      }
      o << "  symmetry group of order " << s.symmetry.order() << "\n";
      const auto report = validate_complex(s);
      for (const auto& c : report.checks) {
        o << "  [" << (c.passed ? "pass" : "FAIL") << "] " << std::left << std::setw(32) << c.name << c.detail << "\n";
      }
      if (report.ok()) {
        const auto p = pullback_complex(s);
        const auto models = enumerate_planar_gluings(s);
        o << "  planar models: " << models.size() << "\n";
        for (const auto& m : models) {
          o << "    boundary";
          for (const auto& b : m.boundary) o << " " << p.edges[b.lift].cell << (b.reversed ? "'" : "");
          o << "\n";
        }
      }
    }
  } else {
    unsupported(fmt, "surfaces");
  }
  return o.str();
}

std::string format_flows(const StratifiedSurface& s, const FlowFamily& family, OutputFormat fmt) {
  std::ostringstream o;
  if (fmt == OutputFormat::Json) {
    for (const auto& f : family.flows) o << flow_to_json(s, f).dump() << "\n";
  } else if (fmt == OutputFormat::Csv) {
    o << "index,family,option,coloring,status";
    for (const auto& tc : s.two_cells) o << "," << tc.region;
    o << "\n";
    for (std::size_t i = 0; i < family.flows.size(); ++i) {
      const auto& f = family.flows[i];
      o << i << "," << to_string(f.family) << "," << option_tag(f) << "," << csv_field(coloring_text(f)) << ","
        << csv_field(status_text(f));
      for (const auto& rf : f.regions) o << "," << csv_field(region_summary(rf));
      o << "\n";
    }
  } else if (fmt == OutputFormat::Table) {
    o << display_name(s.name) << " " << to_string(family.family) << ": " << family.flows.size()
      << " labeled structures\n";
    for (const auto& [tag, count] : family.per_option) o << "  option " << std::left << std::setw(10) << tag << count << "\n";
  } else {
    unsupported(fmt, "flow listings");
  }
  return o.str();
}

std::string format_flow(const StratifiedSurface& s, const FlowStructure& f, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: return flow_to_json(s, f).dump(2) + "\n";
    case OutputFormat::Dot: return export_diagram(s, f, DiagramFormat::Dot);
    case OutputFormat::Svg: return export_diagram(s, f, DiagramFormat::Svg);
    default: unsupported(fmt, "a single flow");
  }
  return {};
}

std::string format_count_report(const CountReport& r, OutputFormat fmt) {
  std::ostringstream o;
  if (fmt == OutputFormat::Json) {
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["surface"] = to_string(r.surface);
    j["family"] = to_string(r.family);
    j["labeled"] = r.labeled;
    j["n"] = r.n;
    j["n_s"] = r.n_s;
    j["m"] = r.m;
    Json po = Json::object();
    for (const auto& [tag, c] : r.per_option) po[tag] = {{"n", c.n}, {"n_s", c.n_s}};
    j["perOption"] = po;
    j["canonicalCodes"] = r.codes;
    o << j.dump(2) << "\n";
  } else if (fmt == OutputFormat::Csv) {
    o << "surface,family,option,n,n_s\n";
    for (const auto& [tag, c] : r.per_option) {
      o << to_string(r.surface) << "," << to_string(r.family) << "," << tag << "," << c.n << "," << c.n_s << "\n";
    }
    o << to_string(r.surface) << "," << to_string(r.family) << ",all," << r.n << "," << r.n_s << "\n";
  } else if (fmt == OutputFormat::Table) {
    o << display_name(r.surface) << " " << to_string(r.family) << "\n";
    o << "  labeled structures  " << r.labeled << "\n";
    o << "  classes (n)         " << r.n << "\n";
    o << "  symmetric (n_s)     " << r.n_s << "\n";
    o << "  homotopy (m)        " << r.m << "\n";
    for (const auto& [tag, c] : r.per_option) {
      o << "  option " << std::left << std::setw(12) << tag << " n=" << c.n << " n_s=" << c.n_s << "\n";
    }
  } else {
    unsupported(fmt, "class reports");
  }
  return o.str();
}

std::string format_table61(const std::vector<Table61Row>& rows, OutputFormat fmt) {
  std::ostringstream o;
  auto cell_text = [](const Table61Cell& c) { return std::to_string(c.n) + "/" + std::to_string(c.m); };
  if (fmt == OutputFormat::Json) {
    Json list = Json::array();
    for (const auto& row : rows) {
      Json cells = Json::array();
      for (const auto& c : row.cells) {
        cells.push_back({{"family", to_string(c.family)},
                         {"n", c.n},
                         {"n_s", c.n_s},
                         {"m", c.m},
                         {"source", c.computed ? "enumerated" : "published"},
                         {"consistent", c.consistent}});
      }
      list.push_back({{"surface", to_string(row.surface)}, {"cells", cells}});
    }
    Json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["rows"] = list;
    o << doc.dump(2) << "\n";
  } else if (fmt == OutputFormat::Csv) {
    o << "surface,one-fixed-point,ms-optimal,projective\n";
    for (const auto& row : rows) {
      o << to_string(row.surface);
      for (const auto& c : row.cells) o << "," << cell_text(c);
      o << "\n";
    }
  } else if (fmt == OutputFormat::Table) {
    o << std::left << std::setw(10) << "surface" << std::setw(18) << "one-fixed-point" << std::setw(18)
      << "ms-optimal" << std::setw(18) << "projective" << "\n";
    for (const auto& row : rows) {
      o << std::left << std::setw(10) << display_name(row.surface);
      for (const auto& c : row.cells) o << std::setw(18) << cell_text(c);
      o << "\n";
    }
    for (const auto& row : rows) {
      o << display_name(row.surface) << " n_s:";
      for (const auto& c : row.cells) {
        o << " " << c.n_s << (c.computed ? " (enumerated)" : (c.consistent ? " (inferred)" : " (inconsistent)"));
      }
      o << "\n";
    }
  } else {
    unsupported(fmt, "table61");
  }
  return o.str();
}

std::string format_region_counts(const StratifiedSurface& s, OutputFormat fmt) {
  const auto colorings = ms_option_colorings();
  std::vector<RegionCounts> counts;
  for (const auto& c : colorings) counts.push_back(region_counts(s, c));
  auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
  std::ostringstream o;
  if (fmt == OutputFormat::Json) {
    Json list = Json::array();
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const auto& rc = counts[i];
      Json j;
      j["option"] = i + 1;
      Json col = Json::object();
      for (const auto& [k, v] : colorings[i].colors) col[k] = to_string(v);
      j["coloring"] = col;
      j["n_b"] = rc.n_b;
      j["n_c"] = rc.n_c;
      if (rc.b_s) {
        j["b_s"] = *rc.b_s;
        j["b_n"] = *rc.b_n;
        j["c_s"] = *rc.c_s;
        j["c_n"] = *rc.c_n;
        j["classes"] = burnside_combine(rc);
      } else {
        j["classes"] = rc.n_b * rc.n_c;
      }
      list.push_back(j);
    }
    Json doc;
    doc["schemaVersion"] = kSchemaVersion;
    doc["surface"] = to_string(s.name);
    doc["options"] = list;
    o << doc.dump(2) << "\n";
  } else if (fmt == OutputFormat::Csv || fmt == OutputFormat::Table) {
    const char* sep = fmt == OutputFormat::Csv ? "," : "\t";
    o << "option" << sep << "n_b" << sep << "n_c" << sep << "b_s" << sep << "b_n" << sep << "c_s" << sep << "c_n" << sep
      << "classes\n";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const auto& rc = counts[i];
      std::size_t classes = rc.b_s ? static_cast<std::size_t>(burnside_combine(rc)) : rc.n_b * rc.n_c;
      o << i + 1 << sep << rc.n_b << sep << rc.n_c << sep << opt(rc.b_s) << sep << opt(rc.b_n) << sep << opt(rc.c_s)
        << sep << opt(rc.c_n) << sep << classes << "\n";
    }
  } else {
    unsupported(fmt, "region counts");
  }
  return o.str();
}

}  // namespace stratflow
