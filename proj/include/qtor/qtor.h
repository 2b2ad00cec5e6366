/* qtor - combinatorial invariants of characteristic pairs over simple
 * polytopes: local groups, retraction/divisiveness certificates, GKM-style
 * section checks and the piecewise-algebra equivalence.
 *
 * All functions are thread-safe on distinct handles; a qtor_pair is
 * immutable after parsing and may be shared across threads. Reports and
 * error messages are heap strings owned by the caller; release them with
 * qtor_string_free.
 */
#ifndef QTOR_H
#define QTOR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct qtor_pair qtor_pair;

typedef enum qtor_status {
  QTOR_OK = 0,
  QTOR_ERR_PARSE = 1,    /* malformed document */
  QTOR_ERR_INVALID = 2,  /* semantically bad input (non-polytope, bad names, ...) */
  QTOR_ERR_NULL = 3,     /* required argument was NULL */
  QTOR_ERR_INTERNAL = 4
} qtor_status;

/* verdict values used by qtor_divisive */
enum { QTOR_FALSE = 0, QTOR_TRUE = 1, QTOR_UNDECIDED = 2 };

const char* qtor_version(void);
void qtor_string_free(char* s);

/* Parses a pair document (dim / facets / vertices / lambda). On failure
 * returns a status and, when out_error is non-NULL, a message. */
qtor_status qtor_pair_parse(const char* json_text, qtor_pair** out_pair, char** out_error);
void qtor_pair_free(qtor_pair* pair);

/* Characteristic-function validity report; out_valid gets 0/1. */
qtor_status qtor_validate(const qtor_pair* pair, char** out_report, int* out_valid,
                          char** out_error);

/* Local groups of the given face (NULL means the whole polytope). */
qtor_status qtor_local_groups(const qtor_pair* pair, const char* face_name, char** out_report,
                              char** out_error);

/* Retraction sequences; enumerate_all = 0 emits the first one, cap = 0 means
 * no limit. */
qtor_status qtor_retract(const qtor_pair* pair, int enumerate_all, long cap, char** out_report,
                         char** out_error);

/* Divisiveness search. node_budget <= 0 picks the built-in default.
 * out_verdict: QTOR_TRUE certificate found, QTOR_FALSE none exists,
 * QTOR_UNDECIDED budget exhausted. */
qtor_status qtor_divisive(const qtor_pair* pair, long node_budget, char** out_report,
                          int* out_verdict, char** out_error);

/* GKM graph report (edge characters, coprimality, cell counts against the
 * h-vector). sequence_json may be NULL to use the first retraction found. */
qtor_status qtor_gkm(const qtor_pair* pair, const char* sequence_json, char** out_report,
                     int* out_ok, char** out_error);

/* theory is "K" or "H". out_ok gets the verdict (1 accepted / 0 rejected). */
qtor_status qtor_check_section(const qtor_pair* pair, const char* theory,
                               const char* section_json, char** out_report, int* out_ok,
                               char** out_error);
qtor_status qtor_check_piecewise(const qtor_pair* pair, const char* theory,
                                 const char* element_json, char** out_report, int* out_ok,
                                 char** out_error);

/* Runs the section check, builds the face-indexed element, re-checks it and
 * restricts back to the vertices; out_ok is 1 only when every stage agrees.
 * theory may be NULL or "" to use the document's own field (default K). */
qtor_status qtor_equiv_roundtrip(const qtor_pair* pair, const char* theory,
                                 const char* section_json, char** out_report, int* out_ok,
                                 char** out_error);

#ifdef __cplusplus
}
#endif

#endif /* QTOR_H */
