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

#include "stratflow.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/classification.hpp"
#include "core/errors.hpp"
#include "core/report.hpp"

struct sf_surface {
  stratflow::StratifiedSurface surface;
};

struct sf_flow_set {
  stratflow::StratifiedSurface surface;
  stratflow::FlowFamily family;
};

struct sf_class_report {
  stratflow::CountReport report;
};

namespace {

thread_local std::string g_last_error;

sf_status fail(sf_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

// Maps exceptions escaping the core onto status codes.
template <typename F>
sf_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const stratflow::UnsupportedError& e) {
    return fail(SF_ERR_UNSUPPORTED, e.what());
  } catch (const stratflow::DomainError& e) {
    return fail(SF_ERR_DOMAIN, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SF_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SF_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(SF_ERR_INTERNAL, "unknown error");
  }
}

sf_status emit(const std::string& text, char** out) {
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (!buf) return fail(SF_ERR_INTERNAL, "out of memory");
  std::memcpy(buf, text.c_str(), text.size() + 1);
  *out = buf;
  return SF_OK;
}

stratflow::OutputFormat to_core(sf_format f) {
  switch (f) {
    case SF_FORMAT_JSON: return stratflow::OutputFormat::Json;
    case SF_FORMAT_CSV: return stratflow::OutputFormat::Csv;
    case SF_FORMAT_TABLE: return stratflow::OutputFormat::Table;
    case SF_FORMAT_DOT: return stratflow::OutputFormat::Dot;
    case SF_FORMAT_SVG: return stratflow::OutputFormat::Svg;
  }
  throw stratflow::DomainError("unknown format code");
}

// Name parsing failures are argument errors rather than domain errors.
template <typename T, typename P>
bool parse_name(const char* text, P parser, T& out) {
  try {
    out = parser(std::string(text));
    return true;
  } catch (const stratflow::DomainError& e) {
    g_last_error = e.what();
    return false;
  }
}

stratflow::SurfaceName parse_surface(const std::string& s) { return stratflow::parse_surface_name(s); }

}  // namespace

extern "C" {

const char* sf_version(void) { return "1.0.0"; }

const char* sf_last_error(void) { return g_last_error.c_str(); }

const char* sf_status_name(sf_status status) {
  switch (status) {
    case SF_OK: return "ok";
    case SF_ERR_NULL_ARGUMENT: return "null argument";
    case SF_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SF_ERR_DOMAIN: return "domain error";
    case SF_ERR_UNSUPPORTED: return "unsupported";
    case SF_ERR_OUT_OF_RANGE: return "out of range";
    case SF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void sf_string_free(char* s) { std::free(s); }

sf_status sf_parse_format(const char* name, sf_format* out) {
  if (!name || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  stratflow::OutputFormat f;
  if (!parse_name(name, stratflow::parse_format, f)) return SF_ERR_INVALID_ARGUMENT;
  switch (f) {
    case stratflow::OutputFormat::Json: *out = SF_FORMAT_JSON; break;
    case stratflow::OutputFormat::Csv: *out = SF_FORMAT_CSV; break;
    case stratflow::OutputFormat::Table: *out = SF_FORMAT_TABLE; break;
    case stratflow::OutputFormat::Dot: *out = SF_FORMAT_DOT; break;
    case stratflow::OutputFormat::Svg: *out = SF_FORMAT_SVG; break;
  }
  return SF_OK;
}

sf_status sf_surface_create(const char* name, sf_surface** out) {
  if (!name || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  stratflow::SurfaceName n;
  if (!parse_name(name, parse_surface, n)) return SF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *out = new sf_surface{stratflow::build_surface(n)};
    return SF_OK;
  });
}

void sf_surface_destroy(sf_surface* s) { delete s; }

sf_status sf_surface_validate(const sf_surface* s, int* all_passed) {
  if (!s || !all_passed) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *all_passed = stratflow::validate_complex(s->surface).ok() ? 1 : 0;
    return SF_OK;
  });
}

sf_status sf_surface_pullback(const sf_surface* s, size_t* vertices, size_t* edges, size_t* faces, long* euler) {
  if (!s || !vertices || !edges || !faces || !euler) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    auto p = stratflow::pullback_complex(s->surface);
    *vertices = p.vertices.size();
    *edges = p.edges.size();
    *faces = p.faces.size();
    *euler = p.euler_characteristic();
    return SF_OK;
  });
}

sf_status sf_surface_planar_gluings(const sf_surface* s, size_t* count) {
  if (!s || !count) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *count = stratflow::enumerate_planar_gluings(s->surface).size();
    return SF_OK;
  });
}

sf_status sf_surface_symmetry_order(const sf_surface* s, size_t* order) {
  if (!s || !order) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  *order = s->surface.symmetry.order();
  return SF_OK;
}

sf_status sf_surface_describe(const sf_surface* s, sf_format format, char** out) {
  if (!s || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { return emit(stratflow::format_surfaces({s->surface}, to_core(format)), out); });
}

sf_status sf_describe_surfaces(const char* name, sf_format format, char** out) {
  if (!out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  std::vector<stratflow::SurfaceName> names;
  if (name) {
    stratflow::SurfaceName n;
    if (!parse_name(name, parse_surface, n)) return SF_ERR_INVALID_ARGUMENT;
    names.push_back(n);
  } else {
    names = {stratflow::SurfaceName::Boys, stratflow::SurfaceName::Girls};
  }
  return guarded([&] {
    std::vector<stratflow::StratifiedSurface> surfaces;
    for (auto n : names) surfaces.push_back(stratflow::build_surface(n));
    return emit(stratflow::format_surfaces(surfaces, to_core(format)), out);
  });
}

sf_status sf_flow_set_enumerate(const sf_surface* s, const char* family, unsigned threads, sf_flow_set** out) {
  if (!s || !family || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  stratflow::Family fam;
  if (!parse_name(family, stratflow::parse_family, fam)) return SF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto flows = stratflow::enumerate_family(s->surface, fam, {threads == 0 ? 1u : threads});
    *out = new sf_flow_set{s->surface, std::move(flows)};
    return SF_OK;
  });
}

void sf_flow_set_destroy(sf_flow_set* set) { delete set; }

size_t sf_flow_set_size(const sf_flow_set* set) { return set ? set->family.flows.size() : 0; }

sf_status sf_flow_set_write(const sf_flow_set* set, sf_format format, char** out) {
  if (!set || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { return emit(stratflow::format_flows(set->surface, set->family, to_core(format)), out); });
}

sf_status sf_flow_set_item(const sf_flow_set* set, size_t index, sf_format format, char** out) {
  if (!set || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  if (index >= set->family.flows.size()) {
    return fail(SF_ERR_OUT_OF_RANGE, "index " + std::to_string(index) + " is outside [0, " +
                                         std::to_string(set->family.flows.size()) + ")");
  }
  return guarded([&] {
    return emit(stratflow::format_flow(set->surface, set->family.flows[index], to_core(format)), out);
  });
}

sf_status sf_classify(const sf_flow_set* set, const char* group, unsigned threads, sf_class_report** out) {
  if (!set || !group || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  stratflow::GroupChoice g;
  if (!parse_name(group, stratflow::parse_group, g)) return SF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    auto classes = stratflow::classify(set->surface, set->family.flows, g, threads == 0 ? 1u : threads);
    *out = new sf_class_report{
        stratflow::count_report(set->surface, set->family.family, classes, set->family.flows.size())};
    return SF_OK;
  });
}

void sf_class_report_destroy(sf_class_report* r) { delete r; }

sf_status sf_class_report_counts(const sf_class_report* r, int64_t* n, int64_t* n_s, int64_t* m) {
  if (!r || !n || !n_s || !m) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  *n = static_cast<int64_t>(r->report.n);
  *n_s = static_cast<int64_t>(r->report.n_s);
  *m = r->report.m;
  return SF_OK;
}

sf_status sf_class_report_write(const sf_class_report* r, sf_format format, char** out) {
  if (!r || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] { return emit(stratflow::format_count_report(r->report, to_core(format)), out); });
}

sf_status sf_report(const char* name, const char* surface, sf_format format, unsigned threads, char** out) {
  if (!name || !out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  std::optional<stratflow::SurfaceName> which;
  if (surface) {
    stratflow::SurfaceName n;
    if (!parse_name(surface, parse_surface, n)) return SF_ERR_INVALID_ARGUMENT;
    which = n;
  }
  const std::string report(name);
  if (report != "table61" && report != "regions") {
    return fail(SF_ERR_INVALID_ARGUMENT, "unknown report '" + report + "'");
  }
  return guarded([&] {
    if (report == "table61") {
      return emit(stratflow::format_table61(stratflow::table61(which, threads == 0 ? 1u : threads), to_core(format)),
                  out);
    }
    if (which && *which != stratflow::SurfaceName::Girls) {
      throw stratflow::UnsupportedError("region counts are implemented for the Girl's surface only");
    }
    return emit(stratflow::format_region_counts(stratflow::build_surface(stratflow::SurfaceName::Girls),
                                                to_core(format)),
                out);
  });
}

sf_status sf_homotopy_count(int64_t n, int64_t n_s, const char* surface, int64_t* m) {
  if (!surface || !m) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  stratflow::SurfaceName s;
  if (!parse_name(surface, parse_surface, s)) return SF_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    *m = stratflow::homotopy_count(n, n_s, s);
    return SF_OK;
  });
}

sf_status sf_burnside_combine(int64_t b_s, int64_t b_n, int64_t c_s, int64_t c_n, int64_t* out) {
  if (!out) return fail(SF_ERR_NULL_ARGUMENT, "null argument");
  return guarded([&] {
    *out = stratflow::burnside_combine(b_s, b_n, c_s, c_n);
    return SF_OK;
  });
}

}  // extern "C"
