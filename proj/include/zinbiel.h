/*
  Copyright 2026 the zinbiel authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

/* C interface to the zinbiel shared library.
 *
 * All objects are opaque handles owned by the library; release them with
 * the matching *_free function. Functions return ZB_OK on success; on any
 * other status zb_last_error() describes the failure (the message is
 * thread-local and valid until the next failing call on that thread).
 * Strings returned through char** out-parameters are heap-allocated and
 * must be released with zb_string_free.
 */

#ifndef ZINBIEL_H
#define ZINBIEL_H

#include <stddef.h>

#if defined(_WIN32)
#define ZB_API __declspec(dllexport)
#else
#define ZB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zb_status {
    ZB_OK = 0,
    ZB_ERR_PARSE = 1,            /* syntax error; see zb_last_error */
    ZB_ERR_INVALID_ARGUMENT = 2, /* null handle or domain violation */
    ZB_ERR_INTERNAL = 3
} zb_status;

typedef enum zb_format {
    ZB_FORMAT_TEXT = 0,
    ZB_FORMAT_JSON = 1
} zb_format;

/* Parsed expression tree. */
typedef struct zb_expr zb_expr;
/* Canonical element of the free algebra. */
typedef struct zb_element zb_element;

ZB_API const char* zb_version(void);
ZB_API const char* zb_last_error(void);
ZB_API void zb_string_free(char* s);

/* --- expressions ------------------------------------------------------ */

ZB_API zb_status zb_parse(const char* text, zb_expr** out);
ZB_API void zb_expr_free(zb_expr* e);

/* Rewrites the expression to its canonical form in the word basis. */
ZB_API zb_status zb_expr_reduce(const zb_expr* e, zb_element** out);

/* --- elements ---------------------------------------------------------- */

ZB_API void zb_element_free(zb_element* e);

/* 1 / 0; -1 on a null handle. */
ZB_API int zb_element_is_zero(const zb_element* e);
ZB_API int zb_element_equal(const zb_element* a, const zb_element* b);

ZB_API zb_status zb_element_mul(const zb_element* a, const zb_element* b, zb_element** out);
ZB_API zb_status zb_element_star(const zb_element* a, const zb_element* b, zb_element** out);
/* exponent >= 1 */
ZB_API zb_status zb_element_power(const zb_element* a, unsigned exponent, zb_element** out);

ZB_API zb_status zb_element_format(const zb_element* e, zb_format fmt, char** out);

/* --- verification procedures ------------------------------------------ */

/* Structural + evaluation identity test in the one-generated free algebra.
 * is_identity receives the structural verdict; inconclusive is 1 when the
 * witness enumeration exhausted on a nonzero component (raise max_weight).
 */
ZB_API zb_status zb_identity_check_onegen(const zb_expr* e, unsigned max_weight,
                                          zb_format fmt, char** report,
                                          int* is_identity, int* inconclusive);

/* Rank certificate for the absence of degree-n multilinear identities;
 * the weight bound grows geometrically up to max_weight_cap. */
ZB_API zb_status zb_theorem1_verify(unsigned degree, unsigned max_weight_cap,
                                    zb_format fmt, char** report, int* certified);

/* Descent step for the weight prefix (lambda_1, ..., lambda_{n-1}). */
ZB_API zb_status zb_descent_check(const unsigned* prefix, size_t prefix_len,
                                  zb_format fmt, char** report, int* ok);

/* Consequence dimensions of x^nil_index = 0 up to max_degree. reached is 1
 * when some degree attains the full multilinear dimension; that degree is
 * stored in nilpotency_degree. */
ZB_API zb_status zb_nil_lab(unsigned nil_index, unsigned max_degree,
                            zb_format fmt, char** report,
                            int* reached, unsigned* nilpotency_degree);

/* Commutativity / associativity sweep for the symmetrized product. */
ZB_API zb_status zb_symmetrization_check(unsigned max_degree, zb_format fmt,
                                         char** report, int* ok);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZINBIEL_H */
