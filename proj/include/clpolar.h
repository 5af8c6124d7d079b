/* C surface of the polar space toolkit. Every function returns a status code
 * and reports details through clp_last_error(); strings handed out by the
 * library are heap copies released with clp_string_free(). Handles are
 * opaque; a context owns the association scheme of one space and is the unit
 * of sharing for the membership checks and searches.
 *
 * Spaces are named either by shorthand "K:n:q" (kind, ambient projective
 * dimension, field) with K in {W, Q, Q+, Q-, H}, or by a json descriptor
 * {"kind": "W", "d": 3, "q": 2, "n": 5}. Formats are "text", "json" or
 * "csv"; tabular outputs honor all three where sensible.
 */
#ifndef CLPOLAR_H
#define CLPOLAR_H

#ifdef __cplusplus
extern "C" {
#endif

enum {
    CLP_OK = 0,
    CLP_ERR_INVALID = 1,  /* malformed input or unsupported arguments */
    CLP_ERR_CAPACITY = 2, /* instance rejected by a capacity guard */
    CLP_ERR_INTERNAL = 3  /* violated invariant; a bug, not user error */
};

typedef struct clp_space clp_space;     /* an enumerated polar space */
typedef struct clp_context clp_context; /* space + scheme + incidence data */

/* Message for the calling thread's most recent failure; never NULL. */
const char* clp_last_error(void);

void clp_string_free(char* s);

/* Caps the process-wide worker pool used by the bulk loops. 0 restores the
 * hardware default. Results never depend on the thread count. */
int clp_set_threads(unsigned n);

/* Closed-form facts only, no enumeration: counts, pencil size, the maximal
 * parameter, e, and the scheme type. */
int clp_space_stats(const char* space, const char* format, char** out);

int clp_space_build(const char* space, clp_space** out);
void clp_space_free(clp_space* sp);

/* Same fields as clp_space_stats plus enumerated counts; the build itself
 * verifies that enumeration and closed forms agree. */
int clp_space_build_stats(const clp_space* sp, const char* format, char** out);

/* Builds the generator association scheme and keeps it for later checks. */
int clp_context_build(const clp_space* sp, clp_context** out);
void clp_context_free(clp_context* c);

/* Closed-form eigenvalue matrix, rows j = 0..d. */
int clp_scheme_pmatrix(const char* space, const char* format, char** out);

/* Eigenvalue rows with their closed-form multiplicities. */
int clp_scheme_eigenspaces(const char* space, const char* format, char** out);

/* Coincidence pairs (j,i) with P_ji = P_1i, e.g. "(3,3)"; "none" if empty. */
int clp_scheme_coincidences(const char* space, const char* format, char** out);

/* Valuation table of relation i, rows j = 0..d. */
int clp_scheme_phi(const char* space, int i, const char* format, char** out);

/* Full membership report for a generator-set json document. The document's
 * space must match the context. verdict: 0 degree one, 3 Cameron-Liebler
 * only, 4 neither. */
int clp_check(const clp_context* c, const char* set_json, char** report_json,
              int* verdict);

/* Builds a named example family and returns it as a generator-set document.
 * spec_json: {"name": ..., ...parameters}. Names and their parameters:
 *   "pencil"              point (default 0)
 *   "base"                base generator index (default 0), rank 3 only
 *   "base-solid"          base generator index (default 0), rank 4 only
 *   "embedded-hyperbolic" index (default 0)
 *   "hyperbolic-class"    index (default 0), class (0 or 1)
 *   "pencil-family"       x, budget_ms (default 10000)
 *   "witness"             x, alpha, budget_ms (default 10000)
 *   "spread"              budget_ms (default 10000)
 * Bounded searches that find nothing in time return CLP_OK with *out = "null". */
int clp_construct(const clp_space* sp, const char* spec_json, char** out_set_json);

/* Exhaustive degree-one enumeration. options_json: {"x": <required>,
 * "pruned": bool, "node_budget": n, "threads": n, "resume": cursor}.
 * Returns {"space", "sets", "complete", "nodes", "cursor"}. */
int clp_search_exhaustive(const clp_context* c, const char* options_json, char** out_json);

/* Maximum pairwise-disjoint subfamily of the given set document. */
int clp_search_max_disjoint(const char* set_json, char** out_json);

/* Enumerates parameter-1 sets and matches them against the point pencils. */
int clp_search_classify_x1(const clp_context* c, char** out_json);

/* Runs the acceptance checks for a scope ("all", "q2", "table4",
 * "classification", "spectra", "counts", "routes", "spreads", or a number).
 * with_timings != 0 appends measured seconds, making output run-dependent.
 * *ok is 1 when no line reads fail (documented expected failures pass). */
int clp_verify(const char* scope, const char* format, int with_timings, char** out,
               int* ok);

#ifdef __cplusplus
}
#endif

#endif /* CLPOLAR_H */
