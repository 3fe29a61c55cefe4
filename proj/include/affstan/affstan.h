/* Copyright 2026 The affstan Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef AFFSTAN_AFFSTAN_H
#define AFFSTAN_AFFSTAN_H

/* C interface to the affstan library. Objects are opaque handles owned by
 * the caller and released with the matching *_free function. Every
 * function returning affstan_status leaves its output untouched on
 * failure; affstan_last_error() then describes the failure for the
 * calling thread. */

#if defined(__GNUC__)
#define AFFSTAN_API __attribute__((visibility("default")))
#else
#define AFFSTAN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  AFFSTAN_OK = 0,
  AFFSTAN_ERR_INVALID = 1,  /* malformed or out-of-range input */
  AFFSTAN_ERR_DOMAIN = 2,   /* input outside a required subset */
  AFFSTAN_ERR_CONTRACT = 3, /* an internal consistency check failed */
  AFFSTAN_ERR_INTERNAL = 4,
  AFFSTAN_ERR_NULL = 5,     /* a required pointer was NULL */
  AFFSTAN_ERR_CAP = 6       /* input exceeds the configured caps */
} affstan_status;

typedef struct affstan_perm affstan_perm;
typedef struct affstan_affperm affstan_affperm;
typedef struct affstan_value affstan_value;

/* Resource caps checked by the computing functions. A value <= 0 disables
 * that cap; all caps are disabled until affstan_set_caps is called. */
typedef struct {
  int max_rank_finite;
  int max_rank_affine;
  int max_degree;
} affstan_caps;

AFFSTAN_API const char* affstan_version(void);
AFFSTAN_API const char* affstan_last_error(void);
AFFSTAN_API void affstan_set_caps(const affstan_caps* caps);
AFFSTAN_API void affstan_get_caps(affstan_caps* caps);

/* One-line notation, either a digit string ("2431") or a list
 * ("[2,4,3,1]" or "2,4,3,1"). */
AFFSTAN_API affstan_status affstan_perm_parse(const char* text, affstan_perm** out);
AFFSTAN_API void affstan_perm_free(affstan_perm* w);
AFFSTAN_API int affstan_perm_rank(const affstan_perm* w);
AFFSTAN_API int affstan_perm_length(const affstan_perm* w);

/* as is "word", "window" or NULL. With NULL, text starting with '[' is a
 * window and anything else a word in the generators 0..n-1. */
AFFSTAN_API affstan_status affstan_affperm_parse(int n, const char* text, const char* as,
                                                 affstan_affperm** out);
AFFSTAN_API void affstan_affperm_free(affstan_affperm* w);
AFFSTAN_API int affstan_affperm_rank(const affstan_affperm* w);
AFFSTAN_API int affstan_affperm_length(const affstan_affperm* w);

/* method is "original", "decreasing", "quasisym" or NULL (decreasing). */
AFFSTAN_API affstan_status affstan_stanley(const affstan_perm* w, const char* method,
                                           affstan_value** out);
AFFSTAN_API affstan_status affstan_schur_expand(const affstan_perm* w, affstan_value** out);
AFFSTAN_API affstan_status affstan_reduced_words(const affstan_perm* w, affstan_value** out);
AFFSTAN_API affstan_status affstan_affine_stanley(const affstan_affperm* w,
                                                  affstan_value** out);
AFFSTAN_API affstan_status affstan_affine_schur_expand(const affstan_affperm* w,
                                                       affstan_value** out);
AFFSTAN_API affstan_status affstan_affine_reduced_words(const affstan_affperm* w,
                                                        affstan_value** out);

AFFSTAN_API affstan_status affstan_eg_insert(const char* word, affstan_value** out);
/* mark is a 1-based position in word. */
AFFSTAN_API affstan_status affstan_little_move(const char* word, int mark,
                                               affstan_value** out);

/* k-Schur function of rank n in the h basis, with its noncommutative
 * image in the affine nilCoxeter algebra. */
AFFSTAN_API affstan_status affstan_kschur(int n, const char* partition, affstan_value** out);
/* Constant-term j-basis element for the affine Grassmannian element of the
 * partition, with its finite projection. */
AFFSTAN_API affstan_status affstan_jbasis(int n, const char* partition, affstan_value** out);

/* Runs a verification suite. passed receives 1 or 0. */
AFFSTAN_API affstan_status affstan_verify(const char* suite, affstan_value** out,
                                          int* passed);

/* Renderings of a result. Release the strings with affstan_string_free. */
AFFSTAN_API char* affstan_value_json(const affstan_value* v);
AFFSTAN_API char* affstan_value_text(const affstan_value* v);
AFFSTAN_API void affstan_value_free(affstan_value* v);
AFFSTAN_API void affstan_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* AFFSTAN_AFFSTAN_H */
