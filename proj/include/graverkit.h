/* graverkit: exact lattice toolkit - C interface.
 *
 * All functions return a gk_status code (GK_OK on success); outputs are
 * written through out-parameters.  After a failure, gk_error_message()
 * returns a thread-local description of what went wrong.  Strings returned
 * through char** out-parameters are heap-allocated and must be released
 * with gk_free_str(); handles must be released with their _free function.
 *
 * Matrices and vector sets travel as text in the common lattice format:
 * a header line "rows cols" followed by one whitespace-separated row per
 * line.  A single vector is a one-row matrix ("1 n" header).
 */
#ifndef GRAVERKIT_H
#define GRAVERKIT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gk_status {
  GK_OK = 0,
  GK_EINVAL = 1,       /* bad argument or violated precondition */
  GK_EPARSE = 2,       /* malformed input text (message carries line/column) */
  GK_ECAP = 3,         /* a resource cap was hit */
  GK_EUNSUPPORTED = 4, /* outside the engine's envelope */
  GK_EINTERNAL = 5     /* invariant breakage; always a bug */
} gk_status;

/* Resource caps; any field left 0 takes the built-in default. */
typedef struct gk_caps {
  uint64_t max_elements; /* completion: stored basis elements (default 1e6) */
  int64_t max_norm;      /* completion: 1-norm of stored elements (default 1e4) */
  uint64_t max_fiber;    /* fiber points / search states (default 1e6) */
  uint64_t max_queue;    /* completion: pending pair records (default 3e8) */
  int threads;           /* parallelism bound; 0 honors GRAVERKIT_THREADS */
} gk_caps;

typedef struct gk_matrix gk_matrix;   /* opaque: dense integer matrix */
typedef struct gk_vecset gk_vecset;   /* opaque: list of integer vectors */

/* Thread-local message for the most recent failure in this thread. */
const char* gk_error_message(void);
void gk_free_str(char* s);

/* ---- matrices ---------------------------------------------------------- */
int gk_matrix_parse(const char* text, gk_matrix** out);
int gk_matrix_read_file(const char* path, gk_matrix** out);
int gk_matrix_from_int64(int rows, int cols, const int64_t* row_major, gk_matrix** out);
int gk_matrix_rows(const gk_matrix* m);
int gk_matrix_cols(const gk_matrix* m);
int gk_matrix_to_text(const gk_matrix* m, char** out);
/* Higher lifting with the given number of copies (identity blocks on top,
 * block-diagonal m below). */
int gk_matrix_lift(const gk_matrix* m, int copies, gk_matrix** out);
int gk_matrix_is_unimodular(const gk_matrix* m, int* out);
void gk_matrix_free(gk_matrix* m);

/* ---- vector sets ------------------------------------------------------- */
uint64_t gk_vecset_size(const gk_vecset* s);
int gk_vecset_to_text(const gk_vecset* s, char** out);
/* Largest 1-norm in the set, as a decimal string ("0" for an empty set). */
int gk_vecset_max_norm1(const gk_vecset* s, char** out);
void gk_vecset_free(gk_vecset* s);

/* ---- core computations -------------------------------------------------- */
/* Graver basis: one canonically signed representative per +- pair, sorted
 * by (1-norm, lex); with full_symmetric nonzero, the whole +- closure. */
int gk_graver(const gk_matrix* m, int full_symmetric, const gk_caps* caps, gk_vecset** out);

/* Reduced Groebner basis of the lattice ideal of ker(m).  The order is an
 * optional rational cost row (text form "1 n", or NULL) compared first,
 * ties broken degrevlex when degrevlex_tie is nonzero and lex otherwise,
 * over an optional variable priority permutation perm (n entries, most
 * significant first; NULL = identity).  Elements are oriented with the
 * leading (positive) part first. */
int gk_groebner(const gk_matrix* m, const char* cost_text, int degrevlex_tie, const int* perm,
                const gk_caps* caps, gk_vecset** out);

/* All nonnegative integer solutions of m x = rhs (text form "1 d"). */
int gk_fiber(const gk_matrix* m, const char* rhs_text, const gk_caps* caps, gk_vecset** out);

/* Order-minimal point of the fiber through the given nonnegative point. */
int gk_normal_form(const gk_matrix* m, const char* cost_text, int degrevlex_tie, const int* perm,
                   const char* point_text, const gk_caps* caps, char** out);

/* Decide whether [z+, z-] is an edge of the convex hull of the fiber
 * through z+ (z a nonzero kernel element, text form "1 n").  *is_edge is
 * set to 1 or 0; *report (optional) receives a human-readable account,
 * including the certifying functional when the segment is an edge. */
int gk_edge_test(const gk_matrix* m, const char* z_text, const gk_caps* caps, int* is_edge,
                 char** report);

/* ---- reports ------------------------------------------------------------ */
/* Claim suite for the two-parameter family member (1 1 1 1; 0 a b a+b);
 * *all_pass (optional) is 1 when every claim held. */
int gk_report_ab(int64_t a, int64_t b, const gk_caps* caps, int* all_pass, char** out);
/* Graver complexity of an arbitrary matrix: both Graver stages plus the
 * attaining witness. */
int gk_report_complexity(const gk_matrix* m, const gk_caps* caps, char** out);
/* Partition-identity bound report for parts up to n. */
int gk_report_ppi(int n, const gk_caps* caps, char** out);

/* Bundled claim suite.  sections_csv: comma-separated subset of
 * 3x3,3x4,ab,ppi,complexity (NULL = all).  ab_pairs: semicolon-separated
 * "a,b" pairs (NULL = bundled defaults).  ppi_max_n: 0 = default (7).
 * data_dir: NULL = build-time default.  porcelain nonzero renders
 * machine-readable key=value lines.  *all_pass is 1 when every claim
 * passed. */
int gk_verify_claims(const char* sections_csv, const char* ab_pairs, int ppi_max_n,
                     const char* data_dir, const gk_caps* caps, int porcelain, int* all_pass,
                     char** out);

/* Stress scenarios ("gb-3x3-9", "g-3x4"): informational runs expected to
 * exhaust their caps; the report describes how far the run got. */
int gk_stress(const char* name, const char* data_dir, const gk_caps* caps, char** out);

#ifdef __cplusplus
}
#endif

#endif /* GRAVERKIT_H */
