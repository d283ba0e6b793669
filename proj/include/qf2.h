/*
   Copyright 2026 The qf2 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface of the qf2 shared library: exact invariants and local-global
 * decisions for non-degenerate quadratic forms over F_{2^k}(t).
 *
 * All functions returning qf2_status leave a diagnostic retrievable through
 * qf2_last_error() on failure. Strings handed out through char** parameters
 * are heap-allocated and must be released with qf2_string_free(). Handles are
 * opaque; forms are bound to the field they were parsed with.
 */

#ifndef QF2_H
#define QF2_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qf2_status {
    QF2_OK = 0,
    QF2_ERR_NULL_ARGUMENT = 1,
    QF2_ERR_DIVISION_BY_ZERO = 2,
    QF2_ERR_MODULUS_MISMATCH = 3,
    QF2_ERR_ZERO_POLYNOMIAL = 4,
    QF2_ERR_ZERO_ELEMENT = 5,
    QF2_ERR_ZERO_SCALAR = 6,
    QF2_ERR_ZERO_MULT_SLOT = 7,
    QF2_ERR_DEGENERATE_FORM = 8,
    QF2_ERR_RANK_MISMATCH = 9,
    QF2_ERR_TWO_ODD_PARTS = 10,
    QF2_ERR_SINGULAR_MATRIX = 11,
    QF2_ERR_PARSE = 12,
    QF2_ERR_UNSUPPORTED_FIELD = 13,
    QF2_ERR_INVALID_ARGUMENT = 14,
    QF2_ERR_INTERNAL = 15
} qf2_status;

typedef struct qf2_field qf2_field;
typedef struct qf2_form qf2_form;

const char* qf2_version(void);

/* Thread-local message for the most recent failure in this thread. */
const char* qf2_last_error(void);

void qf2_string_free(char* s);

/* --- fields: F_{2^k}(t), 1 <= k <= 8 --- */
qf2_status qf2_field_create(int k, qf2_field** out);
void qf2_field_free(qf2_field* field);
int qf2_field_k(const qf2_field* field);

/* --- forms --- */
/* json_text: {"odd": "...", "binaries": [["a","b"],...]} or {"gram":[[...],...]};
 * gram inputs are normalized to the canonical shape (may fail with
 * QF2_ERR_DEGENERATE_FORM). */
qf2_status qf2_form_parse(const qf2_field* field, const char* json_text, qf2_form** out);
qf2_status qf2_form_to_json(const qf2_form* form, char** out_json);
void qf2_form_free(qf2_form* form);
int qf2_form_rank(const qf2_form* form);

/* a*q; expr is a rational expression over t and g. */
qf2_status qf2_form_scale(const qf2_form* form, const char* expr, qf2_form** out);

/* --- reports (JSON strings) --- */
qf2_status qf2_invariants(const qf2_form* form, char** out_json);

/* place: "π:<poly>", "pi:<poly>" or "inf". */
qf2_status qf2_local_profile(const qf2_form* form, const char* place, char** out_json);

qf2_status qf2_isometric(const qf2_form* f, const qf2_form* g, char** out_json);
qf2_status qf2_similar(const qf2_form* f, const qf2_form* g, int degree_bound, char** out_json);
qf2_status qf2_isotropic(const qf2_form* form, char** out_json);

/* Full job runner: parse a job document, execute, return the report and the
 * process exit code the CLI would use. */
qf2_status qf2_run_job(const char* job_json, char** out_report_json, int* out_exit_code);

#ifdef __cplusplus
}
#endif

#endif /* QF2_H */
