/* Copyright 2026 The stratflow Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the stratflow library.
 *
 * Handles are opaque.  Every fallible call returns an sf_status; on failure a message is
 * available from sf_last_error() on the calling thread.  Strings returned through char**
 * out-parameters are owned by the caller and released with sf_string_free(). */

#ifndef STRATFLOW_H
#define STRATFLOW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SF_API __declspec(dllexport)
#else
#define SF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sf_status {
  SF_OK = 0,
  SF_ERR_NULL_ARGUMENT = 1,
  SF_ERR_INVALID_ARGUMENT = 2, /* unknown surface, family, group, format or report name */
  SF_ERR_DOMAIN = 3,           /* input violates a structural precondition */
  SF_ERR_UNSUPPORTED = 4,      /* valid request not implemented for this surface */
  SF_ERR_OUT_OF_RANGE = 5,
  SF_ERR_INTERNAL = 6
} sf_status;

typedef enum sf_format {
  SF_FORMAT_JSON = 0,
  SF_FORMAT_CSV = 1,
  SF_FORMAT_TABLE = 2,
  SF_FORMAT_DOT = 3,
  SF_FORMAT_SVG = 4
} sf_format;

typedef struct sf_surface sf_surface;
typedef struct sf_flow_set sf_flow_set;
typedef struct sf_class_report sf_class_report;

SF_API const char* sf_version(void);
SF_API const char* sf_last_error(void);
SF_API const char* sf_status_name(sf_status status);
SF_API void sf_string_free(char* s);

SF_API sf_status sf_parse_format(const char* name, sf_format* out);

/* Surfaces: "girls" or "boys". */
SF_API sf_status sf_surface_create(const char* name, sf_surface** out);
SF_API void sf_surface_destroy(sf_surface* s);
SF_API sf_status sf_surface_validate(const sf_surface* s, int* all_passed);
SF_API sf_status sf_surface_pullback(const sf_surface* s, size_t* vertices, size_t* edges, size_t* faces,
                                     long* euler);
SF_API sf_status sf_surface_planar_gluings(const sf_surface* s, size_t* count);
SF_API sf_status sf_surface_symmetry_order(const sf_surface* s, size_t* order);
/* JSON, CSV or TABLE description including validation results. */
SF_API sf_status sf_surface_describe(const sf_surface* s, sf_format format, char** out);
/* Same for a list of surfaces; a NULL name describes both. */
SF_API sf_status sf_describe_surfaces(const char* name, sf_format format, char** out);

/* Families: "one-fixed-point", "ms-optimal", "projective". */
SF_API sf_status sf_flow_set_enumerate(const sf_surface* s, const char* family, unsigned threads,
                                       sf_flow_set** out);
SF_API void sf_flow_set_destroy(sf_flow_set* set);
SF_API size_t sf_flow_set_size(const sf_flow_set* set);
/* JSON yields newline-delimited documents, one per structure. */
SF_API sf_status sf_flow_set_write(const sf_flow_set* set, sf_format format, char** out);
/* JSON, DOT or SVG rendering of one structure. */
SF_API sf_status sf_flow_set_item(const sf_flow_set* set, size_t index, sf_format format, char** out);

/* Groups: "reflection" or "full". */
SF_API sf_status sf_classify(const sf_flow_set* set, const char* group, unsigned threads, sf_class_report** out);
SF_API void sf_class_report_destroy(sf_class_report* r);
SF_API sf_status sf_class_report_counts(const sf_class_report* r, int64_t* n, int64_t* n_s, int64_t* m);
SF_API sf_status sf_class_report_write(const sf_class_report* r, sf_format format, char** out);

/* Reports: "table61" (surface may be NULL for both rows) or "regions". */
SF_API sf_status sf_report(const char* name, const char* surface, sf_format format, unsigned threads, char** out);

SF_API sf_status sf_homotopy_count(int64_t n, int64_t n_s, const char* surface, int64_t* m);
SF_API sf_status sf_burnside_combine(int64_t b_s, int64_t b_n, int64_t c_s, int64_t c_n, int64_t* out);

#ifdef __cplusplus
}
#endif

#endif /* STRATFLOW_H */
