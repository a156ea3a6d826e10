#ifndef PACHGAP_H
#define PACHGAP_H

#ifdef __cplusplus
extern "C" {
#endif

/*
 * C interface to the selection workbench. Every function returns a status
 * code; results come back through out parameters. Strings handed out must be
 * released with pg_string_free. Handles are opaque; each has its own _free.
 *
 * Rationals cross this boundary as "p/q" strings, points as space-separated
 * rationals ("1/2 -3/4"), JSON documents as UTF-8 text.
 */

typedef enum pg_status {
    PG_OK = 0,
    PG_ERR_PARAM = 1,        /* bad argument */
    PG_ERR_PRECONDITION = 2, /* contract not met (e.g. n below threshold) */
    PG_ERR_CAPACITY = 3,     /* an enumeration budget would be exceeded */
    PG_ERR_IO = 4,           /* file or format trouble */
    PG_ERR_VERIFY = 5,       /* a verification step failed */
    PG_ERR_INTERNAL = 6
} pg_status;

typedef struct pg_lattice pg_lattice;
typedef struct pg_map pg_map;
typedef struct pg_complex pg_complex;
typedef struct pg_hypergraph pg_hypergraph;

const char* pg_version(void);

/* Message for the most recent failure on this thread. Valid until the next
 * call; never free it. */
const char* pg_last_error(void);

void pg_string_free(char* s);

/* Scale every enumeration budget by a positive rational such as "2" or
 * "1/2". Applies process-wide. */
pg_status pg_budget_scale(const char* rational);

/* ---- graded lattices ---- */

pg_status pg_lattice_build(int r, long long q, pg_lattice** out);
pg_status pg_lattice_from_json(const char* text, pg_lattice** out);
pg_status pg_lattice_to_json(const pg_lattice* L, char** out_text);
pg_status pg_lattice_info(const pg_lattice* L, char** out_json);
pg_status pg_lattice_validate(const pg_lattice* L, unsigned long long seed, char** out_json);
void pg_lattice_free(pg_lattice* L);

/* ---- incidence expansion ---- */

/* Smallest admissible prime for (n, d); the JSON carries the window. */
pg_status pg_prime_window(long long n, int d, long long* out_q, char** out_json);

/* Exact minimum neighborhood sizes for m in [m_lo, m_hi]; as_csv selects the
 * CSV table over JSON. */
pg_status pg_expansion_table(const pg_lattice* L, long long m_lo, long long m_hi, int as_csv,
                             char** out_text);

pg_status pg_corradi_chain(long long m, long long q, int d, char** out_json);

/* ---- the piecewise linear map ---- */

/* Sample and verify a generic embedding; exhaustive != 0 demands the full
 * family sweep instead of sampling. */
pg_status pg_map_build(const pg_lattice* L, unsigned long long seed, int exhaustive,
                       pg_map** out);
pg_status pg_map_summary(const pg_map* M, char** out_json);

/* Covering coatoms of a point, with the carrier certificate. */
pg_status pg_map_cover(const pg_map* M, const char* point, char** out_json);

/* Membership of a point in the image of the closed face on the given atoms. */
pg_status pg_map_membership(const pg_map* M, const char* point, const int* atom_elems,
                            int n_atoms, char** out_json);
void pg_map_free(pg_map* M);

/* ---- selection numbers ---- */

pg_status pg_tau(const pg_map* M, int n, unsigned long long seed, char** out_json);

/* The size bound pipeline at (n, d): prime window, ratio and count steps, and
 * the final refutation. */
pg_status pg_bound_chain(long long n, int d, char** out_json);

/* ---- weighted complexes ---- */

pg_status pg_complex_parse(const char* text, pg_complex** out);
/* Join of discrete classes with the given sizes (length k). */
pg_status pg_complex_transversal(const int* sizes, int k, pg_complex** out);
pg_status pg_complex_info(const pg_complex* X, char** out_json);
/* Exhaustive cosystolic expansion in degree k. */
pg_status pg_complex_hk(const pg_complex* X, int k, char** out_json);
void pg_complex_free(pg_complex* X);

/* ---- multipartite hypergraphs ---- */

pg_status pg_hypergraph_parse(const char* text, pg_hypergraph** out);
pg_status pg_hypergraph_text(const pg_hypergraph* H, char** out_text);
pg_status pg_hypergraph_extract(const pg_hypergraph* H, int m, char** out_json);
pg_status pg_hypergraph_max_box(const pg_hypergraph* H, char** out_json);
void pg_hypergraph_free(pg_hypergraph* H);

/* ---- affine references ---- */

/* mode: "pach" or "first_selection". points_text: one class per line, points
 * whitespace-separated, coordinates comma-separated rationals. */
pg_status pg_baseline(const char* mode, const char* points_text, unsigned long long seed,
                      char** out_json);

/* ---- the whole pipeline ---- */

pg_status pg_run_all(unsigned long long seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
