/*
 * C interface to the coprimality-topology engine.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a cotop_status;
 * on failure the out-parameters are left untouched and
 * cotop_last_error() describes the problem for the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with cotop_string_free().
 */
#ifndef COTOP_COTOP_H
#define COTOP_COTOP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(COTOP_BUILDING)
#    define COTOP_API __declspec(dllexport)
#  else
#    define COTOP_API __declspec(dllimport)
#  endif
#else
#  define COTOP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cotop_status {
    COTOP_OK = 0,
    COTOP_ERR_RANGE = 1,
    COTOP_ERR_PRECONDITION = 2,
    COTOP_ERR_PARSE = 3,
    COTOP_ERR_SEMANTIC = 4,
    COTOP_ERR_IO = 5,
    COTOP_ERR_NULL_ARGUMENT = 6,
    COTOP_ERR_INTERNAL = 7
} cotop_status;

typedef enum cotop_level { COTOP_LEVEL_QUICK = 0, COTOP_LEVEL_FULL = 1 } cotop_level;

typedef struct cotop_set cotop_set;
typedef struct cotop_family cotop_family;
typedef struct cotop_witness_table cotop_witness_table;

typedef struct cotop_classification {
    int is_open;
    int is_closed;
    int is_dense;
    int is_nowhere_dense;
} cotop_classification;

/* Errors and strings */
COTOP_API const char* cotop_last_error(void);
/* Byte offset of the last parse or semantic error, or (size_t)-1. */
COTOP_API size_t cotop_last_error_offset(void);
COTOP_API const char* cotop_status_name(cotop_status status);
COTOP_API void cotop_string_free(char* s);

/* Eventually periodic sets */
COTOP_API cotop_status cotop_set_parse(const char* text, cotop_set** out);
COTOP_API cotop_status cotop_set_from_json(const char* json, cotop_set** out);
COTOP_API cotop_status cotop_set_periodic(uint64_t m, const uint64_t* residues, size_t count,
                                          cotop_set** out);
COTOP_API cotop_status cotop_set_explicit(const uint64_t* elems, size_t count, cotop_set** out);
COTOP_API cotop_status cotop_set_clone(const cotop_set* s, cotop_set** out);
COTOP_API void cotop_set_free(cotop_set* s);

COTOP_API cotop_status cotop_set_complement(const cotop_set* s, cotop_set** out);
COTOP_API cotop_status cotop_set_intersect(const cotop_set* s, const cotop_set* t, cotop_set** out);
COTOP_API cotop_status cotop_set_union(const cotop_set* s, const cotop_set* t, cotop_set** out);
COTOP_API cotop_status cotop_set_difference(const cotop_set* s, const cotop_set* t, cotop_set** out);

COTOP_API cotop_status cotop_set_contains(const cotop_set* s, uint64_t x, int* out);
COTOP_API cotop_status cotop_set_equals(const cotop_set* s, const cotop_set* t, int* out);
COTOP_API cotop_status cotop_set_is_empty(const cotop_set* s, int* out);
COTOP_API cotop_status cotop_set_is_finite(const cotop_set* s, int* out);
/* Writes the min(k, |s|) smallest elements to buf. */
COTOP_API cotop_status cotop_set_enumerate(const cotop_set* s, uint64_t* buf, size_t k, size_t* written);
COTOP_API cotop_status cotop_set_density(const cotop_set* s, uint64_t* numerator, uint64_t* denominator);
COTOP_API cotop_status cotop_set_render(const cotop_set* s, char** out);
COTOP_API cotop_status cotop_set_json(const cotop_set* s, char** out);

/* Coprimality topology */
COTOP_API cotop_status cotop_sigma(uint64_t n, cotop_set** out);
COTOP_API cotop_status cotop_sigma_decomposition_json(uint64_t n, char** out);
COTOP_API cotop_status cotop_closure_singleton(uint64_t n, cotop_set** out);
COTOP_API cotop_status cotop_closure(const cotop_set* s, cotop_set** out);
COTOP_API cotop_status cotop_interior(const cotop_set* s, cotop_set** out);
COTOP_API cotop_status cotop_boundary(const cotop_set* s, cotop_set** out);
COTOP_API cotop_status cotop_classify(const cotop_set* s, cotop_classification* out);
COTOP_API cotop_status cotop_classify_json(const cotop_set* s, char** out);

/* Golomb comparison */
COTOP_API cotop_status cotop_golomb_basic(uint64_t a, uint64_t b, cotop_set** out);
COTOP_API cotop_status cotop_is_golomb_open(const cotop_set* s, int* out);
COTOP_API cotop_status cotop_coarseness_json(uint64_t n_max, char** out, int* demonstrated);

/* Prime families and probes */
COTOP_API cotop_status cotop_family_from_name(const char* name, cotop_family** out);
COTOP_API cotop_status cotop_family_load(const char* path, cotop_family** out);
COTOP_API void cotop_family_free(cotop_family* f);
COTOP_API cotop_status cotop_family_enumerate(const cotop_family* f, uint64_t* buf, size_t count,
                                              size_t* written, int* exhausted);
COTOP_API cotop_status cotop_probe(const cotop_family* f, uint64_t n_max, uint64_t search_bound,
                                   cotop_witness_table** out);
COTOP_API void cotop_witness_table_free(cotop_witness_table* t);
COTOP_API cotop_status cotop_witness_table_size(const cotop_witness_table* t, size_t* out);
COTOP_API cotop_status cotop_witness_table_row(const cotop_witness_table* t, size_t index, uint64_t* n,
                                               uint64_t* witness, int* resolved, uint64_t* bound);
COTOP_API cotop_status cotop_witness_table_json(const cotop_witness_table* t, char** out);
COTOP_API cotop_status cotop_next_new_prime(const uint64_t* known, size_t count, uint64_t* out);
COTOP_API cotop_status cotop_partition_check(uint64_t n, int* out);

/* Verification */
COTOP_API cotop_status cotop_oracle_closure_json(const cotop_set* s, uint64_t window, uint64_t prime_bound,
                                                 size_t subset_size, char** out, int* agrees);
COTOP_API cotop_status cotop_oracle_open_json(const cotop_set* s, size_t sample, uint64_t n_bound,
                                              char** out, int* agrees);
COTOP_API cotop_status cotop_oracle_golomb_json(const cotop_set* s, size_t sample, uint64_t b_bound,
                                                char** out, int* agrees);
/* Identity chain plus the curated oracle suite (10 cases quick, 50 full). */
COTOP_API cotop_status cotop_verify_json(cotop_level level, char** out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* COTOP_COTOP_H */
