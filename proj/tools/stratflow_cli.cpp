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

// Command-line front end.  Links only against the C API in stratflow.h.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "stratflow.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string surface;
  std::string family;
  std::string format;
  std::string group = "reflection";
  std::string output;
  std::string report;
  bool count = false;
  bool seedless = false;
  unsigned threads = 1;
  std::size_t index = 0;
};

using SurfacePtr = std::unique_ptr<sf_surface, decltype(&sf_surface_destroy)>;
using FlowSetPtr = std::unique_ptr<sf_flow_set, decltype(&sf_flow_set_destroy)>;
using ReportPtr = std::unique_ptr<sf_class_report, decltype(&sf_class_report_destroy)>;

class Failure {
 public:
  explicit Failure(sf_status s) : status(s), message(sf_last_error()) {}
  sf_status status;
  std::string message;
};

void check(sf_status s) {
  if (s != SF_OK) throw Failure(s);
}

int exit_code(sf_status s) {
  switch (s) {
    case SF_ERR_NULL_ARGUMENT:
    case SF_ERR_INVALID_ARGUMENT:
    case SF_ERR_OUT_OF_RANGE:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

std::string take(char* text) {
  std::string out(text ? text : "");
  sf_string_free(text);
  return out;
}

sf_format format_of(const Options& o, const char* fallback) {
  sf_format f;
  check(sf_parse_format(o.format.empty() ? fallback : o.format.c_str(), &f));
  return f;
}

SurfacePtr open_surface(const std::string& name) {
  sf_surface* s = nullptr;
  check(sf_surface_create(name.c_str(), &s));
  return SurfacePtr(s, sf_surface_destroy);
}

FlowSetPtr enumerate(const Options& o) {
  auto s = open_surface(o.surface);
  sf_flow_set* set = nullptr;
  check(sf_flow_set_enumerate(s.get(), o.family.c_str(), o.threads, &set));
  return FlowSetPtr(set, sf_flow_set_destroy);
}

ReportPtr classify(const sf_flow_set* set, const Options& o) {
  sf_class_report* r = nullptr;
  check(sf_classify(set, o.group.c_str(), o.threads, &r));
  return ReportPtr(r, sf_class_report_destroy);
}

std::string with_newline(std::string text) {
  if (!text.empty() && text.back() != '\n') text.push_back('\n');
  return text;
}

std::string run_surfaces(const Options& o) {
  char* out = nullptr;
  check(sf_describe_surfaces(o.surface.empty() ? nullptr : o.surface.c_str(), format_of(o, "json"), &out));
  return with_newline(take(out));
}

std::string run_enumerate(const Options& o) {
  auto set = enumerate(o);
  if (o.count) {
    auto r = classify(set.get(), o);
    int64_t n = 0, n_s = 0, m = 0;
    check(sf_class_report_counts(r.get(), &n, &n_s, &m));
    return std::to_string(n) + "\n";
  }
  char* out = nullptr;
  check(sf_flow_set_write(set.get(), format_of(o, "json"), &out));
  return with_newline(take(out));
}

std::string run_classify(const Options& o) {
  auto set = enumerate(o);
  auto r = classify(set.get(), o);
  char* out = nullptr;
  check(sf_class_report_write(r.get(), format_of(o, "json"), &out));
  return with_newline(take(out));
}

std::string run_report(const Options& o) {
  char* out = nullptr;
  check(sf_report(o.report.c_str(), o.surface.empty() ? nullptr : o.surface.c_str(), format_of(o, "table"),
                  o.threads, &out));
  return with_newline(take(out));
}

std::string run_export(const Options& o) {
  const sf_format f = format_of(o, "svg");
  auto set = enumerate(o);
  char* out = nullptr;
  check(sf_flow_set_item(set.get(), o.index, f, &out));
  return with_newline(take(out));
}

int write_result(const std::string& text, const Options& o) {
  if (o.output.empty()) {
    std::cout << text;
    std::cout.flush();
    return kExitOk;
  }
  std::ofstream file(o.output, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open " << o.output << " for writing\n";
    return kExitFailure;
  }
  file << text;
  return file ? kExitOk : kExitFailure;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format: json, csv, table, dot or svg");
  cmd->add_option("--output", o.output, "Write the result to this path instead of standard output");
  cmd->add_option("--threads", o.threads, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  cmd->add_flag("--seedless", o.seedless, "Accepted for reproducibility; enumeration never uses randomness");
}

void add_flow_selection(CLI::App* cmd, Options& o) {
  cmd->add_option("--surface", o.surface, "Surface: boys or girls")->required();
  cmd->add_option("--family", o.family, "Family: one-fixed-point, ms-optimal or projective")->required();
  cmd->add_option("--group", o.group, "Symmetry group for classification: reflection or full");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerate and classify flow structures on Boy's and Girl's surfaces", "stratflow"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sf_version()));
  Options o;

  auto* surfaces = app.add_subcommand("surfaces", "Describe and validate the surface complexes");
  surfaces->add_option("--surface", o.surface, "Surface: boys or girls (default: both)");
  add_common(surfaces, o);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate labeled flow structures");
  add_flow_selection(enumerate_cmd, o);
  enumerate_cmd->add_flag("--count", o.count, "Print only the number of non-homeomorphic classes");
  add_common(enumerate_cmd, o);

  auto* classify_cmd = app.add_subcommand("classify", "Count homeomorphism and homotopy classes");
  add_flow_selection(classify_cmd, o);
  add_common(classify_cmd, o);

  auto* report = app.add_subcommand("report", "Print a summary report");
  report->add_option("name", o.report, "Report: table61 or regions")->required();
  report->add_option("--surface", o.surface, "Restrict to one surface");
  add_common(report, o);

  auto* export_cmd = app.add_subcommand("export", "Render one enumerated flow structure");
  add_flow_selection(export_cmd, o);
  export_cmd->add_option("--index", o.index, "Position of the flow in enumeration order")->required();
  add_common(export_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    std::string text;
    if (*surfaces) text = run_surfaces(o);
    else if (*enumerate_cmd) text = run_enumerate(o);
    else if (*classify_cmd) text = run_classify(o);
    else if (*report) text = run_report(o);
    else text = run_export(o);
    return write_result(text, o);
  } catch (const Failure& f) {
    std::cerr << "error: " << (f.message.empty() ? sf_status_name(f.status) : f.message) << "\n";
    return exit_code(f.status);
  }
}
