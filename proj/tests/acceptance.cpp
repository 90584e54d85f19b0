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

// Acceptance checks.  Prints one PASS/FAIL line per criterion and exits nonzero on any failure.

#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "core/classification.hpp"
#include "core/report.hpp"
#include "core/serialization.hpp"

using namespace stratflow;

namespace {

// Collects mismatches for one criterion.
class Check {
 public:
  template <typename A, typename B>
  void eq(const std::string& what, const A& actual, const B& expected) {
    if (actual == expected) return;
    std::ostringstream o;
    o << what << ": got " << actual << ", expected " << expected;
    failures_.push_back(o.str());
  }
  void that(const std::string& what, bool ok) {
    if (!ok) failures_.push_back(what);
  }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  std::vector<std::string> failures_;
};

const StratifiedSurface& girls() {
  static const StratifiedSurface s = build_surface(SurfaceName::Girls);
  return s;
}

CountReport counts(Family family, unsigned threads = 1) {
  auto fam = enumerate_family(girls(), family, {threads});
  return count_report(girls(), family, classify(girls(), fam.flows, GroupChoice::Reflection, threads),
                      fam.flows.size());
}

void one_fixed_point(Check& c) {
  auto r = counts(Family::OneFixedPoint);
  c.eq("classes", r.n, 3u);
  c.eq("symmetric classes", r.n_s, 0u);
  c.eq("homotopy count", homotopy_count(static_cast<std::int64_t>(r.n), static_cast<std::int64_t>(r.n_s),
                                        SurfaceName::Girls),
       6);
}

void region_enumeration(Check& c) {
  auto opts = ms_option_colorings();
  auto r1 = region_counts(girls(), opts[0]);
  c.eq("option 1 n_b", r1.n_b, 14u);
  c.eq("option 1 n_c", r1.n_c, 12u);
  auto r2 = region_counts(girls(), opts[1]);
  auto r3 = region_counts(girls(), opts[2]);
  c.that("option 2 has symmetric counts", r2.b_s && r2.b_n && r2.c_s && r2.c_n);
  c.that("option 3 has symmetric counts", r3.b_s && r3.b_n && r3.c_s && r3.c_n);
  if (!c.failures().empty()) return;
  c.eq("option 2 b_s", *r2.b_s, 2u);
  c.eq("option 2 b_n", *r2.b_n, 5u);
  c.eq("option 2 c_s", *r2.c_s, 2u);
  c.eq("option 2 c_n", *r2.c_n, 6u);
  c.eq("option 3 b_s", *r3.b_s, 1u);
  c.eq("option 3 b_n", *r3.b_n, 2u);
  c.eq("option 3 c_s", *r3.c_s, 1u);
  c.eq("option 3 c_n", *r3.c_n, 2u);
}

void ms_classes(Check& c) {
  auto r = counts(Family::MsOptimal, 4);
  c.eq("option 1", r.per_option.at("1").n, 168u);
  c.eq("option 2", r.per_option.at("2").n, 86u);
  c.eq("option 3", r.per_option.at("3").n, 13u);
  c.eq("half total", r.per_option.at("1").n + r.per_option.at("2").n + r.per_option.at("3").n, 267u);
  c.eq("total", r.n, 534u);
}

void burnside_oracle(Check& c) {
  auto r = counts(Family::MsOptimal);
  auto opts = ms_option_colorings();
  c.eq("option 2 formula vs orbits", burnside_combine(region_counts(girls(), opts[1])),
       static_cast<std::int64_t>(r.per_option.at("2").n));
  c.eq("option 3 formula vs orbits", burnside_combine(region_counts(girls(), opts[2])),
       static_cast<std::int64_t>(r.per_option.at("3").n));
}

void ms_symmetric(Check& c) {
  auto r = counts(Family::MsOptimal);
  c.eq("symmetric classes", r.n_s, 10u);
  c.eq("homotopy_count(534, 10)", homotopy_count(534, 10, SurfaceName::Girls), 1058);
  c.eq("m from enumeration", r.m, 1058);
}

void projective(Check& c) {
  auto r = counts(Family::Projective, 4);
  c.eq("option 1", r.per_option.at("1").n, 38u);
  c.eq("option 1 symmetric", r.per_option.at("1").n_s, 2u);
  c.eq("option 2", r.per_option.at("2").n, 19u);
  c.eq("option 3", r.per_option.at("3").n, 2u);
  c.eq("option 3 symmetric", r.per_option.at("3").n_s, 1u);
  c.eq("total", r.n, 118u);
  c.eq("symmetric", r.n_s, 6u);
  c.eq("homotopy_count(118, 6)", homotopy_count(118, 6, SurfaceName::Girls), 230);
}

void census(Check& c) {
  auto fam = enumerate_projective(girls());
  c.that("family is nonempty", !fam.flows.empty());
  std::size_t bad = 0;
  for (const auto& f : fam.flows) {
    auto k = fixed_point_census(girls(), f);
    if (k.sources != 3 || k.sinks != 3 || k.saddles != 5 || k.index_sum() != 1) ++bad;
  }
  c.eq("structures off (3, 3, 5)", bad, 0u);
}

void cw_validation(Check& c) {
  for (auto n : {SurfaceName::Girls, SurfaceName::Boys}) {
    auto s = build_surface(n);
    auto v = validate_complex(s);
    const auto* occ = v.find("angle-double-occurrence");
    const auto* chi = v.find("image-euler-characteristic");
    c.that(display_name(n) + " angle-double-occurrence", occ && occ->passed);
    c.that(display_name(n) + " image Euler characteristic 2", chi && chi->passed);
    c.eq(display_name(n) + " pullback Euler characteristic", pullback_complex(s).euler_characteristic(), 1L);
    c.eq(display_name(n) + " admissible gluings", enumerate_planar_gluings(s).size(), 1u);
  }
  auto p = pullback_complex(girls());
  std::uint32_t all = (1u << p.edges.size()) - 1;
  auto a = assess_gluing(girls(), all);
  c.that("gluing C'C' is rejected", !a.admissible);
  c.that("rejection detects a Moebius band", !a.orientable && a.reason.find("Moebius") != std::string::npos);
}

void boys_formula(Check& c) {
  const std::int64_t n[] = {18, 342, 80}, m[] = {108, 2004, 438}, expected[] = {0, 16, 14};
  for (int i = 0; i < 3; ++i) {
    auto ns = infer_symmetric_count(n[i], m[i], SurfaceName::Boys);
    c.that("integer solution for " + std::to_string(n[i]) + "/" + std::to_string(m[i]), ns.has_value());
    if (!ns) continue;
    c.eq("n_s for " + std::to_string(n[i]), *ns, expected[i]);
    c.that("0 <= n_s <= n", *ns >= 0 && *ns <= n[i]);
  }
}

std::string pipeline(unsigned threads) {
  std::string out;
  for (auto fam : {Family::OneFixedPoint, Family::MsOptimal, Family::Projective}) {
    auto flows = enumerate_family(girls(), fam, {threads});
    auto report = count_report(girls(), fam, classify(girls(), flows.flows, GroupChoice::Reflection, threads),
                               flows.flows.size());
    out += format_flows(girls(), flows, OutputFormat::Json);
    out += format_flows(girls(), flows, OutputFormat::Csv);
    out += format_count_report(report, OutputFormat::Json);
    out += format_count_report(report, OutputFormat::Csv);
  }
  out += format_table61(table61(std::nullopt, threads), OutputFormat::Json);
  out += format_table61(table61(std::nullopt, threads), OutputFormat::Csv);
  return out;
}

void determinism(Check& c) {
  auto a = pipeline(1);
  auto b = pipeline(4);
  auto d = pipeline(4);
  c.that("output is nonempty", !a.empty());
  c.that("1 thread vs 4 threads byte-identical", a == b);
  c.that("repeated 4-thread runs byte-identical", b == d);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"one-fixed-point: 3 classes, n_s = 0, m = 6", one_fixed_point},
      {"region counts per option", region_enumeration},
      {"ms-optimal classes 168/86/13, 267, 534", ms_classes},
      {"burnside formula equals orbit count (options 2, 3)", burnside_oracle},
      {"ms-optimal n_s = 10, m = 1058", ms_symmetric},
      {"projective 38/19/2, 118 classes, n_s = 6, m = 230", projective},
      {"projective census (3, 3, 5), index sum 1", census},
      {"CW validation and planar gluing", cw_validation},
      {"Boy's n_s inferred as 0, 16, 14", boys_formula},
      {"deterministic JSON and CSV across thread counts", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.that(std::string("exception: ") + e.what(), false);
    }
    const bool ok = c.failures().empty();
    std::printf("criterion %zu: %s - %s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].first.c_str());
    for (const auto& f : c.failures()) std::printf("    %s\n", f.c_str());
    failed += ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
