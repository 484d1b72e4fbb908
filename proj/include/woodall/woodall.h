// Copyright 2026 The Woodall Packer Authors.
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

/* C interface to the woodall packer. Every function returns a wp_status;
 * on failure wp_last_error() describes the problem for the calling
 * thread. Handles are opaque and owned by the caller. */
#ifndef WOODALL_WOODALL_H_
#define WOODALL_WOODALL_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(WOODALL_BUILDING_LIBRARY)
#    define WP_API __declspec(dllexport)
#  else
#    define WP_API __declspec(dllimport)
#  endif
#else
#  define WP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wp_status {
  WP_OK = 0,
  WP_ERROR_NULL_POINTER = 1,
  WP_ERROR_INVALID_ARGUMENT = 2,
  WP_ERROR_IO = 3,
  WP_ERROR_PARSE = 4,
  WP_ERROR_INSUFFICIENT_BUFFER = 5,
  WP_ERROR_ACYCLIC_INPUT = 6,
  WP_ERROR_NOT_THREE_TREE = 7,
  WP_ERROR_CONSTRUCTION_FAILED = 8,
  WP_ERROR_BUDGET_EXHAUSTED = 9,
  WP_ERROR_RESAMPLE_EXHAUSTED = 10,
  WP_ERROR_NO_PACKING = 11,
  WP_ERROR_HOST_MISMATCH = 12,
  WP_ERROR_INTERNAL = 99
} wp_status;

typedef struct wp_instance wp_instance;

typedef struct wp_pack_stats {
  uint32_t base_cases;
  uint32_t separator_splits;
  uint32_t case2_assignments;
  uint32_t order_extensions;
  uint32_t acyclic_decompositions;
} wp_pack_stats;

WP_API const char* wp_status_string(int status);
/* Message for the last failure on this thread; never NULL. */
WP_API const char* wp_last_error(void);
/* Instance dump attached to the last WP_ERROR_CONSTRUCTION_FAILED on this
 * thread, or an empty string. */
WP_API const char* wp_last_failure_dump(void);

WP_API int wp_instance_create(uint32_t n, const uint32_t* tails,
                              const uint32_t* heads, size_t m,
                              wp_instance** out);
WP_API void wp_instance_destroy(wp_instance* instance);

WP_API int wp_instance_load(const char* path, wp_instance** out);
WP_API int wp_instance_parse(const char* text, size_t length,
                             wp_instance** out);
WP_API int wp_instance_save(const wp_instance* instance, const char* path);
/* On entry *length is the capacity of buf; on return it is the number of
 * bytes needed, including the terminating NUL. */
WP_API int wp_instance_serialize(const wp_instance* instance, char* buf,
                                 size_t* length);

WP_API int wp_instance_node_count(const wp_instance* instance, uint32_t* n);
WP_API int wp_instance_arc_count(const wp_instance* instance, size_t* m);
WP_API int wp_instance_arc(const wp_instance* instance, size_t index,
                           uint32_t* tail, uint32_t* head);
WP_API int wp_instance_has_sequence(const wp_instance* instance, int* yes);

/* Girth 0 means the digraph is acyclic. */
WP_API int wp_girth(const wp_instance* instance, uint32_t* girth);

WP_API int wp_generate(uint32_t n, uint64_t seed, double digon_probability,
                       int require_dicycle, uint32_t max_resamples,
                       wp_instance** out);

/* Packs the digraph and stores the packing in the instance. When the
 * instance carries a construction sequence whose 3-tree strictly contains
 * the digraph's underlying graph, the digraph is completed first and the
 * packing restricted back. stats may be NULL. */
WP_API int wp_pack(wp_instance* instance, wp_pack_stats* stats);

WP_API int wp_packing_size(const wp_instance* instance, size_t* k);
/* Arc count of transversal `index` (0-based). */
WP_API int wp_packing_transversal_size(const wp_instance* instance,
                                       size_t index, size_t* count);
WP_API int wp_packing_transversal_arc(const wp_instance* instance,
                                      size_t index, size_t position,
                                      uint32_t* tail, uint32_t* head);
/* Replaces the packing. classes[i] in [0, k) assigns arc (tails[i],
 * heads[i]) to a transversal. */
WP_API int wp_packing_set(wp_instance* instance, size_t k,
                          const uint32_t* classes, const uint32_t* tails,
                          const uint32_t* heads, size_t count);
WP_API int wp_packing_clear(wp_instance* instance);

/* Verifies the stored packing. *verdict is 1 or 0; report (may be NULL)
 * receives the JSON report with the same sizing rules as
 * wp_instance_serialize. Returns WP_ERROR_NO_PACKING without a packing. */
WP_API int wp_verify(const wp_instance* instance, int* verdict, char* report,
                     size_t* length);

/* Exact packing number. On WP_ERROR_BUDGET_EXHAUSTED *nu holds the best
 * lower bound. budget 0 allows no search nodes; UINT64_MAX is unlimited. */
WP_API int wp_exact_nu(const wp_instance* instance, uint64_t budget,
                       uint32_t* nu);

#ifdef __cplusplus
}
#endif

#endif /* WOODALL_WOODALL_H_ */
