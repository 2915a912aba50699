/* C interface of the wow library: nested optimal transport for laws of
 * random measures.
 *
 * All objects are owned by the library and reachable only through opaque
 * handles; strings returned through char** are allocated by the library and
 * must be released with wow_string_free(). Every entry point returns a
 * wow_status; on failure wow_last_error() carries a thread-local message.
 *
 * Handles are immutable once created, so sharing them across threads for
 * concurrent reads and solves is safe; creation and destruction of a handle
 * must not race with its use. Solver results are deterministic functions of
 * their inputs, the seed and nothing else (thread counts included).
 */
#ifndef WOW_H
#define WOW_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wow_status {
  WOW_OK = 0,
  WOW_FAIL_PROPERTY = 1, /* a verification suite reported failures */
  WOW_ERR_INPUT = 2,     /* parse error, invalid argument, size guard */
  WOW_ERR_SOLVER = 3     /* solver did not terminate / factorization failed */
} wow_status;

typedef struct wow_measure wow_measure;
typedef struct wow_law wow_law;

const char* wow_version(void);
const char* wow_last_error(void);
void wow_string_free(char* s);

/* --- measures ----------------------------------------------------------- */

/* {"points": [[..],..], "weights": [..]} */
wow_status wow_measure_from_json(const char* text, wow_measure** out);
wow_status wow_measure_to_json(const wow_measure* mu, char** out);
void wow_measure_free(wow_measure* mu);
int wow_measure_dim(const wow_measure* mu);
int wow_measure_size(const wow_measure* mu);
wow_status wow_measure_second_moment(const wow_measure* mu, double* m2sq);

/* --- laws of random measures -------------------------------------------- */

/* {"atoms": [<measure>...], "weights": [...]} */
wow_status wow_law_from_json(const char* text, wow_law** out);
wow_status wow_law_to_json(const wow_law* m, char** out);
void wow_law_free(wow_law* m);
int wow_law_dim(const wow_law* m);
int wow_law_size(const wow_law* m);
wow_status wow_law_big_moment(const wow_law* m, double* m2sq);

/* --- solvers -------------------------------------------------------------*/

/* Inner transport report: cost_w2sq, cost_mc, plan, duals,
 * decomposition_residual. tol <= 0 selects the default (1e-9). */
wow_status wow_ot_report(const wow_measure* mu, const wow_measure* nu,
                         double tol, char** report_json);

/* Nested transport report. options_json may be NULL or an object with
 * "geodesic_ts" (array), "extract_monge" (bool), "threads" (int),
 * "tol" (double). */
wow_status wow_nested_report(const wow_law* m, const wow_law* n,
                             const char* options_json, char** report_json);

/* Dual vectors of the w2^2 problem as CSV ("side,index,value"). */
wow_status wow_ot_duals_csv(const wow_measure* mu, const wow_measure* nu,
                            char** csv);

/* Outer dual potentials of the nested pairing problem as CSV. */
wow_status wow_nested_duals_csv(const wow_law* m, const wow_law* n,
                                int threads, char** csv);

/* Pairwise inner-cost matrix between two laws as CSV ("i,j,value");
 * kind is "w2sq" or "mc". */
wow_status wow_pairwise_matrix_csv(const wow_law* m, const wow_law* n,
                                   const char* kind, int threads, char** csv);

/* --- grid tables ---------------------------------------------------------*/

/* table_json: {"grid": [<measure>...], "values": [...]}.
 * Conjugate at nu over the table's grid: {"value": v, "argmax": g}. */
wow_status wow_grid_conjugate(const char* table_json, const wow_measure* nu,
                              char** out_json);

/* Moreau-Yosida value over the grid: {"value": v, "argmin": g}. */
wow_status wow_grid_moreau_yosida(const char* table_json, double tau,
                                  const wow_measure* mu, char** out_json);

/* Evaluate a functional given by name + parameters (see the README for the
 * schema) at a measure. Grid tables require a bit-equal grid member. */
wow_status wow_functional_evaluate(const char* functional_json,
                                   const wow_measure* mu, double* value);

/* --- Lagrangian maps -----------------------------------------------------*/

/* x_json: {"n": n, "values": [[..],..]}. Report holds the two laws, the
 * maximal pairing and squared distance with their optimal permutations
 * (Hungarian assignment). */
wow_status wow_lagrangian_pairing(const char* x1_json, const char* x2_json,
                                  char** report_json);

/* --- samplers ------------------------------------------------------------*/

/* Sample a law of Gaussian-generated random measures and build the
 * applicable regularity report. spec_json schema is documented in the
 * README; law_json/report_json receive the outputs. Sampling of distinct
 * atoms runs on `threads` workers with schedule-independent results. */
wow_status wow_lggrm_run(const char* spec_json, int samples, int threads,
                         char** law_json, char** report_json);

/* --- verification --------------------------------------------------------*/

/* Run one named property suite; WOW_FAIL_PROPERTY when checks fail.
 * tol <= 0 selects each invariant's default tolerance. summary_json
 * receives per-invariant counts. */
wow_status wow_verify_suite(const char* suite, uint64_t seed, int cases,
                            int threads, double tol, char** summary_json);

/* Newline-separated list of registered suite names. */
wow_status wow_verify_suite_names(char** names);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* WOW_H */
