/* C interface to the HOHF decision-making library.
 *
 * All functions return a hohf_status; 0 is success. Output strings are
 * heap-allocated UTF-8 JSON and must be released with hohf_free().
 * On failure, hohf_last_error() returns a thread-local detail message.
 */
#ifndef HOHF_C_H
#define HOHF_C_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hohf_status {
  HOHF_OK = 0,
  HOHF_ERR_PARSE = 1,
  HOHF_ERR_SCHEMA = 2,
  HOHF_ERR_VALIDATION = 3,
  HOHF_ERR_TYPE_MISMATCH = 4,
  HOHF_ERR_CARDINALITY_MISMATCH = 5,
  HOHF_ERR_MIXED_TYPES = 6,
  HOHF_ERR_EMPTY_TERMS = 7,
  HOHF_ERR_NEGATIVE_LAMBDA = 8,
  HOHF_ERR_OUT_OF_RANGE = 9,
  HOHF_ERR_MISSING_SUBSET = 10,
  HOHF_ERR_BAD_BOUNDARY = 11,
  HOHF_ERR_MONOTONICITY_VIOLATION = 12,
  HOHF_ERR_VALUE_OUT_OF_RANGE = 13,
  HOHF_ERR_NOT_NORMALIZED = 14,
  HOHF_ERR_NO_ROOT = 15,
  HOHF_ERR_DIMENSION_MISMATCH = 16,
  HOHF_ERR_NEGATIVE_WEIGHT_UNSUPPORTED = 17,
  HOHF_ERR_LABEL_MISMATCH = 18,
  HOHF_ERR_NOT_A_TOTAL_ORDER = 19,
  HOHF_ERR_IO = 20,
  HOHF_ERR_INTERNAL = 21,
  HOHF_ERR_BAD_ARGUMENT = 22
} hohf_status;

/* Opaque parsed decision problem. */
typedef struct hohf_problem hohf_problem;

/* options_json may be NULL; recognized keys:
 *   "mode": "strict"|"lenient", "policy": "typewise"|"strict-uniform",
 *   "metric": "l1"|"maxmin", "format": "table"|"json".
 * Keys present override the file's own options block. */
hohf_status hohf_problem_open(const char* path, const char* options_json,
                              hohf_problem** out);
hohf_status hohf_problem_parse(const char* text, const char* options_json,
                               hohf_problem** out);
void hohf_problem_close(hohf_problem* p);

/* Canonical JSON serialization of the parsed problem (round-trips). */
hohf_status hohf_problem_to_json(const hohf_problem* p, char** out_json);

/* Validation report; *warning_count receives the number of lenient-mode
 * warnings attached to the problem. */
hohf_status hohf_problem_validate(const hohf_problem* p, char** report_json,
                                  int* warning_count);

/* Full aggregation + ranking report. */
hohf_status hohf_rank(const hohf_problem* p, char** report_json,
                      int* warning_count);

/* Like hohf_rank but restricted to one alternative label; alternative
 * may be NULL for all. */
hohf_status hohf_aggregate(const hohf_problem* p, const char* alternative,
                           char** report_json, int* warning_count);

/* Consensus comparison over a rankings file/text. metric may be NULL
 * ("l1" default) or "l1"/"maxmin". */
hohf_status hohf_compare(const char* rankings_text, const char* metric,
                         char** report_json);
hohf_status hohf_compare_file(const char* path, const char* metric,
                              char** report_json);

/* Solves the normalization rho for the given singleton weights and
 * returns the generated measure table. use_sugeno_plus selects the
 * plus-sign recurrence (default is the minus-sign form). */
hohf_status hohf_solve_rho(const double* singletons, size_t n,
                           int use_sugeno_plus, double* rho_out,
                           char** table_json);

void hohf_free(char* s);

const char* hohf_last_error(void);
const char* hohf_version(void);

#ifdef __cplusplus
}
#endif

#endif /* HOHF_C_H */
