#ifndef OKBODY_H
#define OKBODY_H

/*
 * C interface to the Okounkov-body engine. A session wraps one validated
 * model/flag configuration; every computation returns a status code and, on
 * success, a malloc'd UTF-8 report in *out that the caller releases with
 * okb_string_free. On failure *err_msg (when non-NULL) receives a malloc'd
 * diagnostic.
 */

#if defined(_WIN32)
#define OKB_API __declspec(dllexport)
#else
#define OKB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct okb_session okb_session;

typedef enum okb_status {
    OKB_OK = 0,
    OKB_ERR_USAGE = 1,      /* bad arguments to the call itself */
    OKB_ERR_CONFIG = 2,     /* config parse/validation/contract failure */
    OKB_ERR_HYPOTHESIS = 3, /* flag outside the theorem's hypotheses */
    OKB_ERR_INTERNAL = 4    /* internal exactness guard tripped */
} okb_status;

/* format: "toml", "json", or "auto". */
OKB_API okb_status okb_session_open(const char* config_text, const char* format,
                                    okb_session** out_session, char** err_msg);
OKB_API void okb_session_close(okb_session* session);

/* Flag validation report for the session's configuration (JSON). */
OKB_API okb_status okb_validation_report(okb_session* session, char** json_out, char** err_msg);

/* Body approximation through max_level: polytope plus the raw sample (JSON). */
OKB_API okb_status okb_body(okb_session* session, int max_level, char** json_out, char** err_msg);

/* Containment/equality report against the predicted simplex (JSON). */
OKB_API okb_status okb_verify_theorem(okb_session* session, int max_level, char** json_out,
                                      char** err_msg);

/* Convex decomposition of the level-k sample point a (length a_len). */
OKB_API okb_status okb_decompose(okb_session* session, const long long* a, int a_len, long long k,
                                 char** json_out, char** err_msg);

/* Witness for the lemma's interval argument; c is an exact rational string. */
OKB_API okb_status okb_lemma_witness(okb_session* session, const char* c, int max_m,
                                     char** json_out, char** err_msg);

/* Compares the reindexed (bundle power m) body with the m-scaled base body. */
OKB_API okb_status okb_scaling_check(okb_session* session, int m, int max_level, char** json_out,
                                     char** err_msg);

/* Hilbert-dimension/volume table; as_csv selects CSV over JSON, decimal adds
 * display-only decimal columns. */
OKB_API okb_status okb_volume_table(okb_session* session, int max_level, int as_csv, int decimal,
                                    char** out, char** err_msg);

/* Randomized valuation-axiom check (JSON). */
OKB_API okb_status okb_axiom_check(okb_session* session, int trials, unsigned long long seed,
                                   int max_level, char** json_out, char** err_msg);

OKB_API void okb_string_free(char* s);
OKB_API const char* okb_version(void);

#ifdef __cplusplus
}
#endif

#endif
