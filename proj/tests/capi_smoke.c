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

/* Compiles the public header as C and exercises the basic call sequence. */

#include <stdio.h>
#include <string.h>

#include "stratflow.h"

int main(void) {
  sf_surface* s = NULL;
  sf_surface* other = NULL;
  sf_flow_set* set = NULL;
  sf_class_report* r = NULL;
  int64_t n = 0, n_s = 0, m = 0;
  char* text = NULL;
  int failures = 0;

  if (sf_surface_create("girls", &s) != SF_OK) return 1;
  if (sf_flow_set_enumerate(s, "one-fixed-point", 1, &set) != SF_OK) return 1;
  if (sf_classify(set, "reflection", 1, &r) != SF_OK) return 1;
  sf_class_report_counts(r, &n, &n_s, &m);
  if (n != 3 || n_s != 0 || m != 6) {
    fprintf(stderr, "unexpected counts %lld %lld %lld\n", (long long)n, (long long)n_s, (long long)m);
    ++failures;
  }
  if (sf_flow_set_item(set, 0, SF_FORMAT_DOT, &text) != SF_OK || strncmp(text, "digraph", 7) != 0) ++failures;
  sf_string_free(text);
  if (sf_surface_create("mobius", &other) != SF_ERR_INVALID_ARGUMENT || other != NULL) ++failures;
  sf_class_report_destroy(r);
  sf_flow_set_destroy(set);
  sf_surface_destroy(s);
  return failures == 0 ? 0 : 1;
}
