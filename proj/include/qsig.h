/* C interface to the q-skew sigma-differential verification library.
 *
 * All objects are opaque handles; every call returns a status code and the
 * last error message is retrievable per thread. The CLI links against this
 * interface only.
 */
#ifndef QSIG_H
#define QSIG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qsig_config qsig_config;
typedef struct qsig_report qsig_report;

typedef enum qsig_status {
    QSIG_OK = 0,
    QSIG_ERR_INVALID_ARGUMENT = 1,
    QSIG_ERR_CONFIG = 2,
    QSIG_ERR_RUNTIME = 3
} qsig_status;

/* thread-local message for the most recent failing call */
const char* qsig_last_error(void);

qsig_config* qsig_config_new(void);
void qsig_config_free(qsig_config* cfg);

/* keys: xdeg, horizon, wdeg, nildeg, seed */
qsig_status qsig_config_set_int(qsig_config* cfg, const char* key,
                                int64_t value);
/* keys: example (c_t|c_t_talpha|c_t_logt|all), qmode (symbolic|numeric),
 * format (text|json) */
qsig_status qsig_config_set_str(qsig_config* cfg, const char* key,
                                const char* value);
/* keys: q-num, s-num, lam-num; value is a rational literal like "3/2" */
qsig_status qsig_config_set_rational(qsig_config* cfg, const char* key,
                                     const char* value);

/* suites: axioms, hopf-morphism, hopf-algebra, quantum-groups, deformations,
 * lemmas, all */
qsig_status qsig_run_verify(const qsig_config* cfg, const char* suite,
                            qsig_report** out);
/* algebras: comm, qplane, taylor-diff */
qsig_status qsig_run_classify(const qsig_config* cfg, const char* algebra,
                              qsig_report** out);

void qsig_report_free(qsig_report* rep);
qsig_status qsig_report_counts(const qsig_report* rep, int* passed,
                               int* failed, int* evidence);
/* format: text | json; the returned string must be released with
 * qsig_string_free */
qsig_status qsig_report_render(const qsig_report* rep, const char* format,
                               char** out);
void qsig_string_free(char* s);

size_t qsig_report_size(const qsig_report* rep);
/* per-check accessors; index must be < qsig_report_size */
const char* qsig_report_check_name(const qsig_report* rep, size_t index);
/* "pass" | "fail" | "evidence" */
const char* qsig_report_check_status(const qsig_report* rep, size_t index);

#ifdef __cplusplus
}
#endif

#endif
