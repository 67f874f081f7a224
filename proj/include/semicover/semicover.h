/*
 * Copyright 2026 The semicover Authors
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

/*
 * C interface to libsemicover.
 *
 * Every function returns an sc_status. Strings returned through char** out
 * parameters are owned by the caller and released with sc_string_free. On
 * failure, sc_last_error() describes the problem; the message is
 * thread-local and valid until the next call on the same thread.
 */

#ifndef SEMICOVER_SEMICOVER_H_
#define SEMICOVER_SEMICOVER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SC_API __declspec(dllexport)
#else
#define SC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sc_semigroup sc_semigroup;

typedef enum sc_status {
  SC_OK = 0,
  SC_ERR_PARSE = 1,            /* malformed input text */
  SC_ERR_INVALID_INPUT = 2,    /* well-formed but not a valid semigroup */
  SC_ERR_NOT_APPLICABLE = 3,   /* e.g. inverse kind on a non-inverse carrier */
  SC_ERR_CAP_EXCEEDED = 4,     /* order above the enumeration cap */
  SC_ERR_VERIFY_FAILED = 5,    /* certificate rejected */
  SC_ERR_IO = 6,
  SC_ERR_NULL_ARGUMENT = 7,
  SC_ERR_INTERNAL = 8
} sc_status;

typedef enum sc_kind {
  SC_KIND_S = 0,     /* subsemigroups */
  SC_KIND_I = 1,     /* inverse subsemigroups */
  SC_KIND_M = 2,     /* submonoids */
  SC_KIND_MSTAR = 3, /* monoidal subsemigroups */
  SC_KIND_G = 4      /* subgroups */
} sc_kind;

SC_API const char* sc_version(void);
SC_API const char* sc_last_error(void);
SC_API void        sc_string_free(char* s);

/* Parses a document in any supported text format. */
SC_API sc_status sc_semigroup_parse(const char* text, sc_semigroup** out);

/* Row-major n*n table; validated for range and associativity. */
SC_API sc_status sc_semigroup_from_table(size_t          n,
                                         const uint32_t* table,
                                         sc_semigroup**  out);

SC_API void   sc_semigroup_free(sc_semigroup* s);
SC_API size_t sc_semigroup_order(const sc_semigroup* s);
SC_API uint32_t sc_semigroup_product(const sc_semigroup* s, uint32_t a, uint32_t b);

/* Canonical re-emission of the parsed document (empty for tables). */
SC_API sc_status sc_semigroup_emit(const sc_semigroup* s, char** out);

SC_API sc_status sc_analyze(const sc_semigroup* s, char** json_out);

/* Structural covering number with certificate. */
SC_API sc_status sc_cover(const sc_semigroup* s, sc_kind kind, char** json_out);

/* Exhaustive ground truth. cap = 0 selects the default cap (16); caps above
 * 16 require allow_large != 0 and never exceed 24. */
SC_API sc_status sc_oracle(const sc_semigroup* s,
                           sc_kind             kind,
                           size_t              cap,
                           int                 allow_large,
                           char**              json_out);

/* Re-checks a certificate document. Returns SC_OK if valid and
 * SC_ERR_VERIFY_FAILED otherwise; report_out always receives a JSON verdict
 * when it is non-null. */
SC_API sc_status sc_verify(const sc_semigroup* s,
                           sc_kind             kind,
                           const char*         certificate_json,
                           char**              report_out);

/* Tabulates covering numbers over every file of a directory. */
SC_API sc_status sc_census(const char* dir, sc_kind kind, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SEMICOVER_SEMICOVER_H_ */
