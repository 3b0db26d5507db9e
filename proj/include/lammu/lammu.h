/* Copyright 2026 The lammu Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C interface to the lambda-mu workbench. All strings are UTF-8 and
 * NUL-terminated. Functions returning lammu_status never throw; on any status
 * other than LAMMU_OK a diagnostic is available from lammu_last_error() on
 * the calling thread. */

#ifndef LAMMU_H_
#define LAMMU_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LAMMU_API __declspec(dllexport)
#else
#define LAMMU_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as process exit codes for the command-line tool. */
typedef enum {
  LAMMU_OK = 0,
  /* Invalid derivation, untypable term, search miss, failing suite. */
  LAMMU_INVALID = 1,
  /* Malformed input text, certificate or argument. */
  LAMMU_PARSE_ERROR = 2,
  /* Fuel ran out, or a search miss where the budget cut some branch. */
  LAMMU_BUDGET_EXHAUSTED = 3,
  LAMMU_INTERNAL_ERROR = 4
} lammu_status;

typedef enum { LAMMU_LANG_CURRY = 0, LAMMU_LANG_IU = 1 } lammu_language;

typedef struct lammu_term lammu_term;
typedef struct lammu_output lammu_output;

LAMMU_API const char* lammu_version(void);
LAMMU_API const char* lammu_status_name(lammu_status s);
/* Valid until the next failing call on the same thread. */
LAMMU_API const char* lammu_last_error(void);

/* Terms */
LAMMU_API lammu_status lammu_term_parse(const char* text, lammu_term** out);
LAMMU_API void lammu_term_free(lammu_term* t);
/* Caller frees the result with lammu_string_free. */
LAMMU_API char* lammu_term_print(const lammu_term* t);
LAMMU_API size_t lammu_term_size(const lammu_term* t);
LAMMU_API int lammu_term_alpha_eq(const lammu_term* a, const lammu_term* b);
LAMMU_API void lammu_string_free(char* s);

/* Outputs carry the primary text result and, for commands that produce a
 * derivation, its certificate (empty string when there is none). */
LAMMU_API const char* lammu_output_text(const lammu_output* o);
LAMMU_API const char* lammu_output_certificate(const lammu_output* o);
LAMMU_API void lammu_output_free(lammu_output* o);

/* Commands. `*out` is set whenever the status is LAMMU_OK, LAMMU_INVALID or
 * LAMMU_BUDGET_EXHAUSTED, and left NULL otherwise. */

/* Pretty-prints a judgment (text containing "|-"), a term, or a type.
 * canonical != 0 prints types in canonical form. */
LAMMU_API lammu_status lammu_fmt(const char* text, int canonical,
                                 lammu_output** out);

/* rules: comma-separated subset of beta,mu,renaming,erasing,eta_mu.
 * trace != 0 prints one line per step and then the final term. */
LAMMU_API lammu_status lammu_reduce(const lammu_term* t, const char* rules,
                                    size_t fuel, int trace,
                                    lammu_output** out);

LAMMU_API lammu_status lammu_check_simple(const char* judgment,
                                          lammu_output** out);
LAMMU_API lammu_status lammu_infer_simple(const lammu_term* t,
                                          lammu_output** out);
LAMMU_API lammu_status lammu_check_iu(const char* judgment, size_t depth,
                                      size_t width, lammu_output** out);
LAMMU_API lammu_status lammu_verify(const char* certificate,
                                    lammu_output** out);

/* suite: subject-reduction, subject-expansion, term-subst, struct-subst,
 * erasing or all. depth is the search budget; max_size 0 keeps the
 * generator default. */
LAMMU_API lammu_status lammu_metatheory(const char* suite, uint64_t seed,
                                        size_t cases, size_t depth,
                                        size_t max_size, lammu_output** out);
LAMMU_API uint64_t lammu_default_seed(void);

/* Comma-separated list of bundled example names. */
LAMMU_API const char* lammu_example_names(void);
LAMMU_API lammu_status lammu_example(const char* name, lammu_output** out);

#ifdef __cplusplus
}
#endif

#endif /* LAMMU_H_ */
