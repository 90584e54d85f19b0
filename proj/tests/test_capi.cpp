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

#include <doctest.h>

#include <string>
#include <thread>
#include <vector>

#include "stratflow.h"

namespace {

std::string take(char* s) {
  std::string out(s ? s : "");
  sf_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(sf_version()).size() > 0);
  CHECK(std::string(sf_status_name(SF_OK)) == "ok");
  CHECK(std::string(sf_status_name(SF_ERR_UNSUPPORTED)) == "unsupported");
  sf_format f;
  CHECK(sf_parse_format("svg", &f) == SF_OK);
  CHECK(f == SF_FORMAT_SVG);
  CHECK(sf_parse_format("gif", &f) == SF_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sf_last_error()).find("gif") != std::string::npos);
  CHECK(sf_parse_format(nullptr, &f) == SF_ERR_NULL_ARGUMENT);
}

TEST_CASE("surface handles") {
  sf_surface* s = nullptr;
  CHECK(sf_surface_create("torus", &s) == SF_ERR_INVALID_ARGUMENT);
  CHECK(s == nullptr);
  REQUIRE(sf_surface_create("girls", &s) == SF_OK);
  int ok = 0;
  CHECK(sf_surface_validate(s, &ok) == SF_OK);
  CHECK(ok == 1);
  size_t v = 0, e = 0, f = 0, count = 0, order = 0;
  long chi = 0;
  CHECK(sf_surface_pullback(s, &v, &e, &f, &chi) == SF_OK);
  CHECK(v == 3);
  CHECK(e == 6);
  CHECK(f == 4);
  CHECK(chi == 1);
  CHECK(sf_surface_planar_gluings(s, &count) == SF_OK);
  CHECK(count == 1);
  CHECK(sf_surface_symmetry_order(s, &order) == SF_OK);
  CHECK(order == 2);
  char* json = nullptr;
  CHECK(sf_surface_describe(s, SF_FORMAT_JSON, &json) == SF_OK);
  CHECK(take(json).find("2C12A'10B7A4B'2") != std::string::npos);
  sf_surface_destroy(s);
  sf_surface_destroy(nullptr);

  char* both = nullptr;
  CHECK(sf_describe_surfaces(nullptr, SF_FORMAT_TABLE, &both) == SF_OK);
  auto text = take(both);
  CHECK(text.find("Girl's") != std::string::npos);
  CHECK(text.find("Boy's") != std::string::npos);
}

TEST_CASE("enumerate, classify and export through the C API") {
  sf_surface* s = nullptr;
  REQUIRE(sf_surface_create("girls", &s) == SF_OK);
  sf_flow_set* set = nullptr;
  CHECK(sf_flow_set_enumerate(s, "mystery", 1, &set) == SF_ERR_INVALID_ARGUMENT);
  REQUIRE(sf_flow_set_enumerate(s, "ms-optimal", 2, &set) == SF_OK);
  CHECK(sf_flow_set_size(set) == 722);

  sf_class_report* r = nullptr;
  CHECK(sf_classify(set, "diagonal", 1, &r) == SF_ERR_INVALID_ARGUMENT);
  REQUIRE(sf_classify(set, "reflection", 2, &r) == SF_OK);
  int64_t n = 0, ns = 0, m = 0;
  CHECK(sf_class_report_counts(r, &n, &ns, &m) == SF_OK);
  CHECK(n == 534);
  CHECK(ns == 10);
  CHECK(m == 1058);
  char* csv = nullptr;
  CHECK(sf_class_report_write(r, SF_FORMAT_CSV, &csv) == SF_OK);
  CHECK(take(csv).find("girls,ms-optimal,all,534,10") != std::string::npos);
  sf_class_report_destroy(r);

  char* svg = nullptr;
  CHECK(sf_flow_set_item(set, 0, SF_FORMAT_SVG, &svg) == SF_OK);
  CHECK(take(svg).rfind("<svg", 0) == 0);
  char* oob = nullptr;
  CHECK(sf_flow_set_item(set, 722, SF_FORMAT_SVG, &oob) == SF_ERR_OUT_OF_RANGE);
  CHECK(oob == nullptr);
  sf_flow_set_destroy(set);

  sf_surface* boys = nullptr;
  REQUIRE(sf_surface_create("boys", &boys) == SF_OK);
  sf_flow_set* none = nullptr;
  CHECK(sf_flow_set_enumerate(boys, "ms-optimal", 1, &none) == SF_ERR_UNSUPPORTED);
  CHECK(none == nullptr);
  CHECK(std::string(sf_last_error()).size() > 0);
  sf_surface_destroy(boys);
  sf_surface_destroy(s);
}

TEST_CASE("reports and formulas through the C API") {
  char* out = nullptr;
  REQUIRE(sf_report("table61", nullptr, SF_FORMAT_CSV, 2, &out) == SF_OK);
  CHECK(take(out).find("girls,3/6,534/1058,118/230") != std::string::npos);
  CHECK(sf_report("table62", nullptr, SF_FORMAT_CSV, 1, &out) == SF_ERR_INVALID_ARGUMENT);
  CHECK(sf_report("regions", "boys", SF_FORMAT_CSV, 1, &out) == SF_ERR_UNSUPPORTED);
  REQUIRE(sf_report("regions", "girls", SF_FORMAT_JSON, 1, &out) == SF_OK);
  CHECK(take(out).find("\"c_n\"") != std::string::npos);

  int64_t m = 0;
  CHECK(sf_homotopy_count(534, 10, "girls", &m) == SF_OK);
  CHECK(m == 1058);
  CHECK(sf_homotopy_count(80, 14, "boys", &m) == SF_OK);
  CHECK(m == 438);
  CHECK(sf_homotopy_count(3, 5, "girls", &m) == SF_ERR_DOMAIN);
  CHECK(sf_homotopy_count(3, 0, "plane", &m) == SF_ERR_INVALID_ARGUMENT);
  int64_t b = 0;
  CHECK(sf_burnside_combine(2, 5, 2, 6, &b) == SF_OK);
  CHECK(b == 86);
  CHECK(sf_burnside_combine(-1, 5, 2, 6, &b) == SF_ERR_DOMAIN);
}

TEST_CASE("null arguments") {
  CHECK(sf_surface_create(nullptr, nullptr) == SF_ERR_NULL_ARGUMENT);
  CHECK(sf_flow_set_size(nullptr) == 0);
  CHECK(sf_classify(nullptr, "reflection", 1, nullptr) == SF_ERR_NULL_ARGUMENT);
  CHECK(sf_report(nullptr, nullptr, SF_FORMAT_CSV, 1, nullptr) == SF_ERR_NULL_ARGUMENT);
}

TEST_CASE("errors are kept per thread") {
  sf_format f;
  REQUIRE(sf_parse_format("bmp", &f) == SF_ERR_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] { other = sf_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK(std::string(sf_last_error()).find("bmp") != std::string::npos);
}
