/* C interface to the quantum Hopf bundle verification engine.
 *
 * All functions are thread-compatible on distinct engines; a single engine
 * must not be used from two threads at once. Strings returned through out
 * parameters are heap-allocated and must be released with qhopf_string_free.
 * On any failure the return code is nonzero and qhopf_last_error holds a
 * human-readable message until the next call on the same engine.
 */
#ifndef QHOPF_H
#define QHOPF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qhopf_engine qhopf_engine;

typedef enum qhopf_status {
    QHOPF_OK = 0,
    QHOPF_ERR_BAD_ARG = 1,  /* unknown name, out-of-range parameter */
    QHOPF_ERR_PARSE = 2,    /* expression syntax error */
    QHOPF_ERR_VERIFY = 3,   /* suite ran, at least one check failed */
    QHOPF_ERR_INTERNAL = 4
} qhopf_status;

/* Engine construction derives the sphere relations and certifies the frame
 * and projection; it fails only on internal inconsistency (returns NULL). */
qhopf_engine* qhopf_engine_new(void);
void qhopf_engine_free(qhopf_engine* eng);

const char* qhopf_last_error(const qhopf_engine* eng);
void qhopf_string_free(char* s);

/* Normalizes an expression in the chosen algebra: "s7", "su2" or "s4". */
qhopf_status qhopf_normalize(qhopf_engine* eng, const char* algebra, const char* expr,
                             char** out);

/* Derives one commutation family ("xx", "vv" or "xv") for n in {1, 2}.
 * as_json = 0 gives "lhs -> rhs" lines, otherwise a JSON object
 * {"family": ..., "rules": [{"lhs": ..., "rhs": ...}]}. */
qhopf_status qhopf_derive_relations(qhopf_engine* eng, int n, const char* family, int as_json,
                                    char** out);

typedef struct qhopf_options {
    double q0;
    int m;
    int n;
    long samples;
    double fd_step;
    unsigned long long seed;
    int max_degree;
    int inject_failure; /* negative control: corrupt one fixture */
} qhopf_options;

/* Fills the documented defaults (q0 = 0.5, m = n = 30, 2e6 samples,
 * fd_step = 1e-4, seed = 42, max_degree = 2). */
void qhopf_options_init(qhopf_options* opt);

/* Runs a named suite: "relations", "spheres", "bundle", "representation",
 * "classical", "properties" or "all". Writes the report (text or JSON) and
 * returns QHOPF_OK when every check passed, QHOPF_ERR_VERIFY otherwise. */
qhopf_status qhopf_run_suite(qhopf_engine* eng, const char* suite, const qhopf_options* opt,
                             int as_json, char** out_report);

/* Index pairing report at numeric q0 on the M x N truncation (JSON). */
qhopf_status qhopf_index_pairing(qhopf_engine* eng, double q0, int m, int n, int exact_mode,
                                 char** out_json);

/* Monte-Carlo second Chern number of the classical projection (JSON). */
qhopf_status qhopf_chern_classical(qhopf_engine* eng, long samples, double fd_step,
                                   unsigned long long seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* QHOPF_H */
