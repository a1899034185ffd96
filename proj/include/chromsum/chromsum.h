/*
 * chromsum C API.
 *
 * Opaque handles own immutable values; every function returns a cs_status
 * and writes results through out-parameters. Strings returned through
 * `char **` are heap allocated, NUL terminated JSON and must be released
 * with cs_free_string. On failure the out-parameters are left untouched
 * and cs_last_error() describes the problem for the calling thread.
 *
 * Big counts and caps are passed as decimal strings (NULL = no cap).
 */
#ifndef CHROMSUM_H
#define CHROMSUM_H

#include <stddef.h>
#include <stdint.h>

#if defined(CHROMSUM_BUILDING_LIBRARY)
#define CHROMSUM_API __attribute__((visibility("default")))
#else
#define CHROMSUM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cs_status {
    CS_OK = 0,
    CS_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad length */
    CS_ERR_PARSE = 2,
    CS_ERR_EMPTY_SET = 3,
    CS_ERR_DIMENSION = 4,
    CS_ERR_NOT_NORMALIZED = 5,
    CS_ERR_DEGENERATE_TUPLE = 6,
    CS_ERR_DOMAIN = 7,
    CS_ERR_DEGENERATE_ALPHABET = 8,
    CS_ERR_BOUND = 9,
    CS_ERR_BUDGET = 10,
    CS_ERR_SEARCH_EXHAUSTED = 11,
    CS_ERR_COLOR_OVERLAP = 12,
    CS_ERR_VERIFICATION = 13,
    CS_ERR_OVERFLOW = 14,
    CS_ERR_INTERNAL = 15
} cs_status;

typedef enum cs_strategy {
    CS_STRATEGY_CONSTRUCTIVE = 0,
    CS_STRATEGY_EMPIRICAL = 1,
    /* constructive when it applies, empirical otherwise */
    CS_STRATEGY_AUTO = 2
} cs_strategy;

typedef struct cs_tuple cs_tuple;
typedef struct cs_structure cs_structure;

/* Stable identifier such as "DegenerateAlphabet"; "OK" for CS_OK. */
CHROMSUM_API const char *cs_status_name(cs_status status);
/* Message of the last failure on this thread; "" if none. */
CHROMSUM_API const char *cs_last_error(void);
CHROMSUM_API void cs_free_string(char *s);
CHROMSUM_API const char *cs_version(void);

/* ---- tuples ---------------------------------------------------------- */

/* {"sets": [[0,2,3],[0,1]], "labels": ["A1","A2"]} or [[0,2,3],[0,1]] */
CHROMSUM_API cs_status cs_tuple_from_json(const char *json, cs_tuple **out);
CHROMSUM_API cs_status cs_tuple_from_arrays(const int64_t *const *sets, const size_t *sizes, size_t q,
                                            cs_tuple **out);
CHROMSUM_API void cs_tuple_free(cs_tuple *tuple);
CHROMSUM_API size_t cs_tuple_q(const cs_tuple *tuple);
CHROMSUM_API int cs_tuple_is_normalized(const cs_tuple *tuple);
CHROMSUM_API cs_status cs_tuple_to_json(const cs_tuple *tuple, char **out_json);
/* Writes the normalized tuple and {"d": .., "offsets": [..]}. */
CHROMSUM_API cs_status cs_tuple_normalize(const cs_tuple *tuple, cs_tuple **normalized, char **record_json);
CHROMSUM_API cs_status cs_tuple_reflect(const cs_tuple *tuple, cs_tuple **out);

/* ---- counting -------------------------------------------------------- */

/* CountTable JSON {"offset": .., "cap": null|"t", "counts": ["1", ...]} */
CHROMSUM_API cs_status cs_count_table(const cs_tuple *tuple, const int64_t *h, size_t h_len, const char *cap,
                                      char **out_json);
CHROMSUM_API cs_status cs_inhomogeneous_count_table(const cs_tuple *tuple, const int64_t *h, size_t h_len,
                                                    const int64_t *b, size_t b_len, const char *cap,
                                                    char **out_json);
CHROMSUM_API cs_status cs_partition_count_table(const int64_t *parts, size_t parts_len, int64_t n_max,
                                                const char *cap, char **out_json);
CHROMSUM_API cs_status cs_oracle_count_table(const cs_tuple *tuple, const int64_t *h, size_t h_len,
                                             uint64_t budget, char **out_json);
/* (h.A)^(t) as a JSON array */
CHROMSUM_API cs_status cs_tfold_set(const cs_tuple *tuple, const int64_t *h, size_t h_len, int64_t t,
                                    char **out_json);
CHROMSUM_API cs_status cs_inhomogeneous_tfold_set(const cs_tuple *tuple, const int64_t *h, size_t h_len,
                                                  const int64_t *b, size_t b_len, int64_t t, char **out_json);

/* ---- structure ------------------------------------------------------- */

CHROMSUM_API cs_status cs_structure_compute(const cs_tuple *tuple, int64_t t, cs_strategy strategy, int64_t margin,
                                            cs_structure **out);
CHROMSUM_API cs_status cs_structure_compute_inhomogeneous(const cs_tuple *tuple, const int64_t *b, size_t b_len,
                                                          int64_t t, int64_t margin, cs_structure **out);
CHROMSUM_API cs_status cs_structure_from_json(const char *json, cs_structure **out);
CHROMSUM_API cs_status cs_structure_to_json(const cs_structure *s, char **out_json);
CHROMSUM_API void cs_structure_free(cs_structure *s);
CHROMSUM_API int64_t cs_structure_c(const cs_structure *s);
CHROMSUM_API int64_t cs_structure_d(const cs_structure *s);
/* Copies h_t into out (out_len must equal q). */
CHROMSUM_API cs_status cs_structure_threshold(const cs_structure *s, int64_t *out, size_t out_len);

/* *holds = 1 when the t-fold set at h equals the predicted set. */
CHROMSUM_API cs_status cs_structure_verify(const cs_tuple *tuple, int64_t t, const cs_structure *s,
                                           const int64_t *h, size_t h_len, int *holds);
CHROMSUM_API cs_status cs_structure_verify_inhomogeneous(const cs_tuple *tuple, const int64_t *b, size_t b_len,
                                                         int64_t t, const cs_structure *s, const int64_t *h,
                                                         size_t h_len, int *holds);

/* {"C": [..], "c": ..} from partition counts; cs_compute_dt mirrors it. */
CHROMSUM_API cs_status cs_compute_ct(const cs_tuple *tuple, int64_t t, char **out_json);
CHROMSUM_API cs_status cs_compute_dt(const cs_tuple *tuple, int64_t t, char **out_json);
CHROMSUM_API cs_status cs_certified_rep_bound(const cs_tuple *tuple, int64_t t, int64_t *out);
CHROMSUM_API cs_status cs_single_set_threshold(const int64_t *a, size_t a_len, int64_t t, int64_t *out);
CHROMSUM_API cs_status cs_witness(const cs_tuple *tuple, int64_t n, int64_t t, char **out_json);

/* JSON array of {"name", "status": "pass"|"fail"|"skipped", "detail"}.
 * b may be NULL (b_len 0) to use B = {0, 1}. *all_passed ignores skips. */
CHROMSUM_API cs_status cs_lemmas(const cs_tuple *tuple, const int64_t *h, size_t h_len, int64_t t,
                                 const int64_t *b, size_t b_len, uint64_t budget, char **out_json,
                                 int *all_passed);

#ifdef __cplusplus
}
#endif

#endif /* CHROMSUM_H */
