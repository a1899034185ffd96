/* Exercises the C API from plain C: handles, status codes, error text and
 * string ownership. */
#include <stdio.h>
#include <string.h>

#include "chromsum/chromsum.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
    do {                                                              \
        if (!(cond)) {                                                \
            fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
            ++failures;                                               \
        }                                                             \
    } while (0)

static void test_counts(void) {
    const int64_t a1[] = {0, 1};
    const int64_t a2[] = {0, 2};
    const int64_t *sets[] = {a1, a2};
    const size_t sizes[] = {2, 2};
    const int64_t h[] = {1, 1};
    cs_tuple *tuple = NULL;
    char *json = NULL;

    EXPECT(cs_tuple_from_arrays(sets, sizes, 2, &tuple) == CS_OK);
    EXPECT(cs_tuple_q(tuple) == 2);
    EXPECT(cs_tuple_is_normalized(tuple) == 1);
    EXPECT(cs_count_table(tuple, h, 2, NULL, &json) == CS_OK);
    EXPECT(json && strcmp(json, "{\"cap\":null,\"counts\":[\"1\",\"1\",\"1\",\"1\"],\"offset\":0}") == 0);
    cs_free_string(json);

    EXPECT(cs_tfold_set(tuple, h, 2, 1, &json) == CS_OK);
    EXPECT(json && strcmp(json, "[0,1,2,3]") == 0);
    cs_free_string(json);

    /* Wrong dimension leaves the out-parameter alone. */
    json = NULL;
    EXPECT(cs_count_table(tuple, h, 1, NULL, &json) == CS_ERR_DIMENSION);
    EXPECT(json == NULL);
    EXPECT(strlen(cs_last_error()) > 0);
    cs_tuple_free(tuple);
}

static void test_structure(void) {
    cs_tuple *tuple = NULL;
    cs_structure *s = NULL;
    int64_t ht[1] = {0};
    int holds = 0;
    char *json = NULL;

    EXPECT(cs_tuple_from_json("[[0,2,3]]", &tuple) == CS_OK);
    EXPECT(cs_structure_compute(tuple, 2, CS_STRATEGY_CONSTRUCTIVE, 3, &s) == CS_OK);
    EXPECT(cs_structure_c(s) == 8);
    EXPECT(cs_structure_d(s) == 3);
    EXPECT(cs_structure_threshold(s, ht, 1) == CS_OK);
    EXPECT(cs_structure_verify(tuple, 2, s, ht, 1, &holds) == CS_OK && holds == 1);
    EXPECT(cs_structure_threshold(s, ht, 2) == CS_ERR_INVALID_ARGUMENT);

    EXPECT(cs_structure_to_json(s, &json) == CS_OK);
    cs_structure *back = NULL;
    EXPECT(cs_structure_from_json(json, &back) == CS_OK);
    EXPECT(cs_structure_c(back) == 8);
    cs_structure_free(back);
    cs_free_string(json);
    cs_structure_free(s);

    {
        const int64_t a[] = {0, 2, 3};
        int64_t h1 = 0;
        EXPECT(cs_single_set_threshold(a, 3, 1, &h1) == CS_OK && h1 == 13);
    }
    cs_tuple_free(tuple);
}

static void test_errors(void) {
    cs_tuple *tuple = NULL;
    cs_structure *s = NULL;
    char *json = NULL;

    EXPECT(cs_tuple_from_json("[[0,1", &tuple) == CS_ERR_PARSE);
    EXPECT(tuple == NULL);
    EXPECT(cs_tuple_from_json("[[0],[]]", &tuple) == CS_ERR_EMPTY_SET);
    EXPECT(cs_tuple_from_json(NULL, &tuple) == CS_ERR_INVALID_ARGUMENT);

    EXPECT(cs_tuple_from_json("[[0,1]]", &tuple) == CS_OK);
    EXPECT(cs_structure_compute(tuple, 2, CS_STRATEGY_CONSTRUCTIVE, 3, &s) == CS_ERR_DEGENERATE_ALPHABET);
    EXPECT(cs_structure_compute(tuple, 2, CS_STRATEGY_AUTO, 3, &s) == CS_ERR_DEGENERATE_ALPHABET);
    EXPECT(s == NULL);
    EXPECT(strcmp(cs_status_name(CS_ERR_DEGENERATE_ALPHABET), "DegenerateAlphabet") == 0);
    cs_tuple_free(tuple);

    EXPECT(cs_tuple_from_json("{\"sets\": [[0,2],[0,3]]}", &tuple) == CS_OK);
    EXPECT(cs_witness(tuple, 29, 2, &json) == CS_ERR_BOUND);
    EXPECT(cs_witness(tuple, 30, 2, &json) == CS_OK);
    cs_free_string(json);
    cs_tuple_free(tuple);

    EXPECT(cs_tuple_from_json("[[1,2]]", &tuple) == CS_OK);
    EXPECT(cs_tuple_is_normalized(tuple) == 0);
    EXPECT(cs_structure_compute(tuple, 1, CS_STRATEGY_AUTO, 3, &s) == CS_ERR_NOT_NORMALIZED);
    cs_tuple_free(tuple);

    EXPECT(cs_tuple_from_json("[[0,7,8],[0,7]]", &tuple) == CS_OK);
    {
        const int64_t h[] = {30, 30};
        EXPECT(cs_oracle_count_table(tuple, h, 2, 100, &json) == CS_ERR_BUDGET);
    }
    cs_tuple_free(tuple);
}

static void test_auto_strategy(void) {
    cs_tuple *tuple = NULL;
    cs_structure *s = NULL;
    char *json = NULL;

    EXPECT(cs_tuple_from_json("[[0,1],[0,1]]", &tuple) == CS_OK);
    EXPECT(cs_structure_compute(tuple, 2, CS_STRATEGY_CONSTRUCTIVE, 3, &s) == CS_ERR_COLOR_OVERLAP);
    EXPECT(cs_structure_compute(tuple, 2, CS_STRATEGY_AUTO, 3, &s) == CS_OK);
    EXPECT(cs_structure_to_json(s, &json) == CS_OK);
    EXPECT(json && strstr(json, "\"strategy\":\"empirical\"") != NULL);
    cs_free_string(json);
    cs_structure_free(s);
    cs_tuple_free(tuple);
}

static void test_normalize(void) {
    cs_tuple *tuple = NULL;
    cs_tuple *norm = NULL;
    char *record = NULL;
    char *json = NULL;

    EXPECT(cs_tuple_from_json("[[6,10],[4,8]]", &tuple) == CS_OK);
    EXPECT(cs_tuple_normalize(tuple, &norm, &record) == CS_OK);
    EXPECT(record && strcmp(record, "{\"d\":4,\"offsets\":[6,4]}") == 0);
    EXPECT(cs_tuple_to_json(norm, &json) == CS_OK);
    EXPECT(json && strcmp(json, "{\"sets\":[[0,1],[0,1]]}") == 0);
    cs_free_string(json);
    cs_free_string(record);
    cs_tuple_free(norm);
    cs_tuple_free(tuple);
}

int main(void) {
    test_counts();
    test_structure();
    test_errors();
    test_auto_strategy();
    test_normalize();
    if (failures) {
        fprintf(stderr, "%d failure(s)\n", failures);
        return 1;
    }
    printf("capi smoke: ok\n");
    return 0;
}
