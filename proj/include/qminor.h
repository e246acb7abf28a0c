#ifndef QMINOR_H
#define QMINOR_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes returned by every entry point. */
typedef enum {
    QM_OK = 0,
    QM_ERR_PARSE = 1,
    QM_ERR_INVALID = 2,
    QM_ERR_IO = 3,
    QM_ERR_INTERNAL = 4
} qm_status;

/* Opaque commutation relation handle. */
typedef struct qm_relation qm_relation;

/* Human-readable message for the most recent error on this thread. */
const char* qm_last_error(void);

/* Generate (and oracle-verify) the commutation relation of two minors given
 * in "[3 4|1 3]" syntax inside M_n. On success *out owns the relation and
 * must be released with qm_relation_free. */
qm_status qm_commute(int n, const char* lhs, const char* rhs, qm_relation** out);

/* Parse a relation from its JSON form. */
qm_status qm_relation_from_json(const char* json, qm_relation** out);

/* Re-check the relation against the normal-form oracle. *ok receives 1/0;
 * when nonzero residual, *residual (optional, may be NULL) receives a
 * description that must be freed with qm_string_free. */
qm_status qm_relation_verify(qm_relation* rel, int* ok, char** residual);

/* Format: "plain", "latex" or "json". The returned string must be freed
 * with qm_string_free. */
qm_status qm_relation_format(const qm_relation* rel, const char* format, char** out);

/* Case tag ("4.4", "5.1", ... "7.3"); pointer owned by the relation. */
const char* qm_relation_case(const qm_relation* rel);
int qm_relation_verified(const qm_relation* rel);
int qm_relation_term_count(const qm_relation* rel);

/* Verify every ordered pair of minors with sizes <= max_size in M_n.
 * jobs <= 0 picks a default (QMINOR_JOBS env var, then hardware count).
 * output_path may be NULL (no file); *summary_json (optional) receives the
 * aggregate JSON line, to free with qm_string_free. *all_ok receives 1 when
 * every relation verified. */
qm_status qm_sweep(int n, int max_size, int jobs, const char* output_path,
                   char** summary_json, int* all_ok);

/* Run the stored golden-relation fixtures. *report receives a text table
 * (free with qm_string_free); *all_pass receives 1 on full success. */
qm_status qm_run_examples(char** report, int* all_pass);

/* Classical-limit (q = 1) specialization suite over the same sweep range. */
qm_status qm_q1_check(int n, int max_size, int jobs, char** report, int* all_pass);

void qm_relation_free(qm_relation* rel);
void qm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
