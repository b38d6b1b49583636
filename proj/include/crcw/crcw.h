/*
 * Copyright 2026 The crcweight Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to crcweight: exact weight distributions of CRC codes over
 * finite fields.
 *
 * Every fallible call returns a crcw_status. On failure a message is
 * available from crcw_last_error() on the calling thread until the next
 * call on that thread. Handles are opaque, owned by the caller, and must be
 * released with the matching *_destroy function; destroy accepts NULL.
 * Strings returned by accessors stay valid while their handle lives.
 */

#ifndef CRCW_CRCW_H_
#define CRCW_CRCW_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CRCW_API __declspec(dllexport)
#elif defined(__GNUC__)
#define CRCW_API __attribute__((visibility("default")))
#else
#define CRCW_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum crcw_status {
  CRCW_OK = 0,
  CRCW_MISMATCH = 1, /* verification found a spectrum mismatch */
  CRCW_INVALID = 2,  /* malformed or out-of-domain input */
  CRCW_RESOURCE = 3, /* a size guard was exceeded */
  CRCW_INTERNAL = 4  /* an internal consistency check failed */
} crcw_status;

typedef struct crcw_field crcw_field;
typedef struct crcw_code crcw_code;
typedef struct crcw_job crcw_job;
typedef struct crcw_result crcw_result;

CRCW_API const char* crcw_version(void);
CRCW_API const char* crcw_last_error(void);

/* GF(p^delta). modulus_text is NULL for the default modulus, otherwise
 * "c0,...,c_delta" over F_p. */
CRCW_API crcw_status crcw_field_create(uint32_t p, uint32_t delta, const char* modulus_text,
                                       crcw_field** out);
CRCW_API void crcw_field_destroy(crcw_field* field);
CRCW_API uint32_t crcw_field_order(const crcw_field* field);

/* poly_text is "c0,...,cr" or, over GF(2), "0x..." together with a
 * nonzero hex_width. Pass hex_width = 0 for the coefficient list form. */
CRCW_API crcw_status crcw_code_create(const crcw_field* field, const char* poly_text,
                                      uint32_t hex_width, uint64_t n, crcw_code** out);
CRCW_API void crcw_code_destroy(crcw_code* code);
CRCW_API uint32_t crcw_code_degree(const crcw_code* code);
CRCW_API uint64_t crcw_code_length(const crcw_code* code);
/* {"B": [...], "A": [...], "d_min": d} in *json_out; counts beyond 64 bits
 * are decimal strings. Release with crcw_string_free. */
CRCW_API crcw_status crcw_code_spectra_json(const crcw_code* code, unsigned threads,
                                            char** json_out);
CRCW_API void crcw_string_free(char* s);

/* A job runs one report per length in [n_first, n_last]. */
CRCW_API crcw_status crcw_job_create(crcw_job** out);
CRCW_API void crcw_job_destroy(crcw_job* job);
CRCW_API crcw_status crcw_job_set_field(crcw_job* job, uint32_t p, uint32_t delta,
                                        const char* modulus_text);
CRCW_API crcw_status crcw_job_set_poly(crcw_job* job, const char* poly_text);
CRCW_API crcw_status crcw_job_set_hex(crcw_job* job, const char* hex_text, uint32_t width);
CRCW_API crcw_status crcw_job_set_lengths(crcw_job* job, uint64_t n_first, uint64_t n_last);
CRCW_API crcw_status crcw_job_set_length_text(crcw_job* job, const char* text);
/* "compute", "brute" or "verify" */
CRCW_API crcw_status crcw_job_set_mode(crcw_job* job, const char* mode);
CRCW_API crcw_status crcw_job_add_epsilon(crcw_job* job, double epsilon);
CRCW_API crcw_status crcw_job_set_threads(crcw_job* job, unsigned threads);
CRCW_API crcw_status crcw_job_set_max_exhaustive(crcw_job* job, uint64_t max_exhaustive);

/* Returns CRCW_MISMATCH with a valid *out when verification disagrees. */
CRCW_API crcw_status crcw_job_run(const crcw_job* job, crcw_result** out);
CRCW_API void crcw_result_destroy(crcw_result* result);
CRCW_API size_t crcw_result_count(const crcw_result* result);
CRCW_API int crcw_result_all_match(const crcw_result* result);
/* JSON Lines, one object per length. */
CRCW_API const char* crcw_result_json(const crcw_result* result);
CRCW_API const char* crcw_result_csv(const crcw_result* result);

#ifdef __cplusplus
}
#endif

#endif /* CRCW_CRCW_H_ */
