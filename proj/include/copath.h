/* C interface of the copath shared library.
 *
 * Co-expressions describe directed co-graphs: leaves are vertices, `+` is
 * the disjoint union, `>` connects every left vertex to every right vertex,
 * `*` connects them in both directions.  Over such expressions the library
 * computes minimum directed Steiner path covers (fewest vertex-disjoint
 * directed paths through all marked terminals, then fewest non-terminals)
 * in linear time, plus Hamiltonian and Steiner paths as special cases.
 * Arbitrary digraphs are served by exhaustive oracles and by three integer
 * program formulations with an LP-format writer and a tiny exact solver.
 *
 * Every function returns a status code; COPATH_OK means success.  On any
 * failure copath_last_error() describes the problem (per thread).  Strings
 * returned through `char**` belong to the caller: release them with
 * copath_free_string().  Handles are released with the matching _free().
 */

#ifndef COPATH_H
#define COPATH_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define COPATH_OK 0
#define COPATH_EINVAL 1      /* invalid argument or input data */
#define COPATH_EPARSE 2      /* malformed input text */
#define COPATH_ETOOLARGE 3   /* instance exceeds a hard size cap */
#define COPATH_EINFEASIBLE 4 /* no such path / no solution */
#define COPATH_ENOMEM 5
#define COPATH_EINTERNAL 6

typedef struct copath_expr copath_expr;    /* co-expression tree */
typedef struct copath_graph copath_graph;  /* explicit digraph */
typedef struct copath_cover copath_cover;  /* set of directed paths */
typedef struct copath_model copath_model;  /* integer program */

const char* copath_last_error(void);
void copath_free_string(char* s);

/* ---- co-expressions ---------------------------------------------------- */

/* Grammar: names [A-Za-z_][A-Za-z0-9_]*; operators `+` < `>` < `*` by
 * precedence, all left-associative; parentheses; `#` line comments. */
int copath_expr_parse(const char* text, copath_expr** out);
void copath_expr_free(copath_expr* e);

/* Canonical text with minimal parentheses. */
int copath_expr_to_string(const copath_expr* e, char** out);

/* Vertex count and the edge count of the expansion (computed without
 * expanding). */
int copath_expr_counts(const copath_expr* e, int64_t* vertices, int64_t* edges);

/* Marks terminals by vertex name (n_names may be 0).  Replaces any previous
 * binding. */
int copath_expr_bind(copath_expr* e, const char* const* names, size_t n_names);
int copath_expr_bind_all(copath_expr* e);

/* Space-separated names of the currently bound terminals. */
int copath_expr_terminal_names(const copath_expr* e, char** out);

/* Optimal cover values of a bound expression: p = fewest paths, s = fewest
 * non-terminals among covers with p paths. */
int copath_expr_values(const copath_expr* e, int64_t* p, int64_t* s);

/* An optimal cover of a bound expression. */
int copath_expr_cover(const copath_expr* e, copath_cover** out);

/* Single-path answers: a directed path through all terminals (bound ones,
 * resp. every vertex).  COPATH_EINFEASIBLE when none exists; an empty
 * terminal set yields a cover with zero paths. */
int copath_expr_steiner_path(const copath_expr* e, copath_cover** out);
int copath_expr_ham_path(const copath_expr* e, copath_cover** out);

/* Expansion into an explicit digraph (vertex ids equal leaf ids). */
int copath_expr_graph(const copath_expr* e, copath_graph** out);

/* Normal-form report for a cover, judged at the root composition of `e`;
 * `violations` receives one line per finding (empty string when clean) and
 * `clean` the overall verdict.  Includes the side-order consequence for
 * series roots with strictly fewer terminals on one side. */
int copath_expr_check_normal_form(const copath_expr* e, const copath_cover* c,
                                  char** violations, int* clean);

/* Random co-expression over n vertices v0..v{n-1} with t terminals; split
 * kinds are drawn as union with probability union_prob, order with
 * order_prob (usually 0), series otherwise; `balanced` forces midpoint
 * splits.  Deterministic per seed.  The result comes back bound. */
int copath_expr_random(int t, int n, double union_prob, double order_prob,
                       int balanced, uint64_t seed, copath_expr** out);

/* (a0+...+a{n-1}) * (b0+...+b{m-1}). */
int copath_expr_bipartite(int n, int m, copath_expr** out);

/* ---- digraphs ---------------------------------------------------------- */

/* Edge-list text: `u v` or `u v weight` per line, one bare name introduces
 * an isolated vertex, `#` comments. */
int copath_graph_read(const char* text, copath_graph** out);
void copath_graph_free(copath_graph* g);
int copath_graph_write(const copath_graph* g, char** out);
int copath_graph_counts(const copath_graph* g, int64_t* vertices, int64_t* edges);

/* Random tournament; weights uniform in [1,100] when `weighted`. */
int copath_graph_tournament(int n, uint64_t seed, int weighted, copath_graph** out);

/* Change-over instance from board CSV text (rows of bits, `#` comments):
 * complete bidirected graph over b0 (all zeros) .. bN with Hamming-distance
 * weights.  capacity <= 0 means no tray limit beyond one part per board. */
int copath_graph_boards(const char* csv_text, int capacity, copath_graph** out);

int copath_graph_vertex_id(const copath_graph* g, const char* name, int* id);
int copath_graph_vertex_name(const copath_graph* g, int id, char** name);

/* ---- covers ------------------------------------------------------------ */

void copath_cover_free(copath_cover* c);
int copath_cover_stats(const copath_cover* c, int64_t* size, int64_t* steiner, double* cost);

/* {"paths": [[names...]], "size": k, "steiner": s, "cost": c} */
int copath_cover_to_json(const copath_cover* c, char** out);

/* One line per path, names space-separated. */
int copath_cover_to_text(const copath_cover* c, char** out);

/* Parses the JSON shape above against `g` (only "paths" is read; the stats
 * are recomputed on validation). */
int copath_cover_read_json(const copath_graph* g, const char* text, copath_cover** out);

/* Validates path structure, disjointness and terminal coverage; `verdict`
 * gets a one-line summary, `ok` the result.  COPATH_OK either way. */
int copath_cover_check(const copath_graph* g, const char* const* terminals,
                       size_t n_terminals, const copath_cover* c, char** verdict, int* ok);

/* ---- exhaustive oracles ------------------------------------------------ */

/* Lexicographic optimum over all covers; refuses graphs above `limit`
 * vertices (default 12 when limit <= 0). */
int copath_oracle_cover(const copath_graph* g, const char* const* terminals,
                        size_t n_terminals, int limit, copath_cover** out);

/* Cheapest Hamiltonian path; start >= 0 pins the first vertex.  Default
 * limit 10. */
int copath_oracle_ham(const copath_graph* g, int limit, int start,
                      copath_cover** out, double* cost);

/* Cheapest single path through all terminals.  Default limit 12. */
int copath_oracle_path(const copath_graph* g, const char* const* terminals,
                       size_t n_terminals, int limit, copath_cover** out, double* cost);

/* ---- integer programs -------------------------------------------------- */

/* Hamiltonian path model: edge binaries x_i_j, integer positions p_i;
 * start >= 0 pins p_start = 1. */
int copath_model_hp(const copath_graph* g, int start, copath_model** out);

/* Single Steiner path model (adds use binaries y_i). */
int copath_model_sp(const copath_graph* g, const char* const* terminals,
                    size_t n_terminals, copath_model** out);

/* Steiner path cover model over the graph extended by a source (vertex id
 * n) and sink (n+1) joined to every terminal with weight |V|*|E| (unit
 * weights) or |V|*max weight. */
int copath_model_spc(const copath_graph* g, const char* const* terminals,
                     size_t n_terminals, copath_model** out);

void copath_model_free(copath_model* m);

/* Deterministic LP text (Minimize / Subject To / Bounds / Generals /
 * Binaries / End). */
int copath_model_lp(const copath_model* m, char** out);

/* Exact optimum by exhaustive search over the binaries; refuses models with
 * more than max_binaries of them (default 30 when <= 0).  On success the
 * solution is decoded back into the covered paths (COPATH_EINFEASIBLE when
 * the model has no solution).  `decoded` may be NULL. */
int copath_model_solve(const copath_model* m, int max_binaries, double* objective,
                       copath_cover** decoded);

#ifdef __cplusplus
}
#endif

#endif
