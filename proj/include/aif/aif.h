#ifndef AIF_AIF_H
#define AIF_AIF_H

/* C interface to the almost-intersecting families toolkit.
 *
 * Every call returns an aif_status. On failure aif_last_error() describes the
 * problem (per thread, valid until the next call on that thread). Strings
 * handed out through char** parameters are owned by the caller and released
 * with aif_string_free(); families with aif_family_free(). Structured results
 * are JSON documents. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define AIF_API __declspec(dllexport)
#else
#define AIF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum aif_status {
    AIF_OK = 0,
    AIF_ERR_PARAM = 1,                    /* bad arguments */
    AIF_ERR_PARSE = 2,                    /* malformed family JSON */
    AIF_ERR_NOT_ALMOST_INTERSECTING = 3,  /* needs an almost-intersecting family */
    AIF_ERR_RESOURCE = 4,                 /* instance too large */
    AIF_ERR_DOMAIN = 5,                   /* formula outside its range */
    AIF_ERR_UNSUPPORTED = 6,              /* not defined for these parameters */
    AIF_ERR_INTERNAL = 7
} aif_status;

typedef struct aif_family aif_family;

AIF_API const char* aif_version(void);
AIF_API const char* aif_last_error(void);
AIF_API const char* aif_status_name(aif_status status);
AIF_API void aif_string_free(char* s);

/* Families */
AIF_API aif_status aif_family_parse(const char* json, aif_family** out);
AIF_API aif_status aif_family_to_json(const aif_family* f, char** out);
AIF_API void aif_family_free(aif_family* f);
AIF_API size_t aif_family_size(const aif_family* f);

typedef struct aif_construct_args {
    const char* kind;   /* "star", "br", "hm", "bplus", "lex" */
    int n;
    int k;
    int x;              /* star centre */
    int r;              /* br */
    uint64_t m;         /* lex: number of sets, on the interval [1,n] */
    const int* extra;   /* bplus: k elements; NULL for the default extra set */
    size_t extra_len;
} aif_construct_args;

AIF_API aif_status aif_construct(const aif_construct_args* args, aif_family** out);
AIF_API aif_status aif_shadow(const aif_family* f, int b, aif_family** out);

/* Queries returning JSON */
AIF_API aif_status aif_check(const aif_family* f, char** json);
AIF_API aif_status aif_partition(const aif_family* f, char** json);
AIF_API aif_status aif_diagnose(const aif_family* f, char** json);
AIF_API aif_status aif_local_maximality(const aif_family* f, char** json);
AIF_API aif_status aif_cross(const aif_family* a, const aif_family* b, char** json);

typedef struct aif_search_args {
    int n;
    int k;
    int symmetry;     /* nonzero: fix the first disjoint pair */
    int k3_rules;     /* nonzero: k = 3 exclusions (symmetry mode) */
    uint64_t max_nodes;
    double max_seconds;
    int jobs;
} aif_search_args;

AIF_API void aif_search_args_init(aif_search_args* args);
/* summary: optimum, exhaustion, counts, per-rule statistics.
 * witnesses (may be NULL): one family per isomorphism class. */
AIF_API aif_status aif_search(const aif_search_args* args, char** summary, char** witnesses);

/* Exhaustive checks */
AIF_API aif_status aif_verify_lemma(const char* lemma, int k_lo, int k_hi, int jobs, char** json);
AIF_API aif_status aif_verify_formulas(int k_lo, int k_hi, int n_max, char** json);
AIF_API aif_status aif_bound_table(int k_lo, int k_hi, int n_lo, int n_hi, char** json);
AIF_API aif_status aif_compression_suite(int x, int a, int b, int trials, uint64_t seed, char** json);

#ifdef __cplusplus
}
#endif

#endif
