/*
 * ramsey-workbench C API.
 *
 * Opaque handles + status codes over the C++ core. Every function that can
 * fail returns an rwb_status; on failure, rwb_last_error() carries a
 * human-readable message for the calling thread. Out-parameters are written
 * only on RWB_OK. Handles are freed with the matching *_free function;
 * strings returned through char** with rwb_string_free.
 *
 * Reports are JSON documents (UTF-8) with a stable field layout, plus a
 * suggested process exit code: 0 ok / verified-avoids, 2 counterexample
 * found, 3 budget exhausted, 4 internal inconsistency (a proved theorem's
 * checker reported a violation).
 */

#ifndef RAMSEY_WORKBENCH_H
#define RAMSEY_WORKBENCH_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rwb_status {
    RWB_OK = 0,
    RWB_ERROR_INVALID_ARGUMENT = 1,
    RWB_ERROR_PARSE = 2,
    RWB_ERROR_REGIME = 3,
    RWB_ERROR_SIZE_LIMIT = 4,
    RWB_ERROR_BUDGET_EXHAUSTED = 5,
    RWB_ERROR_IO = 6,
    RWB_ERROR_INCONSISTENT = 7,
    RWB_ERROR_UNSUPPORTED = 8,
    RWB_ERROR_INTERNAL = 9
} rwb_status;

typedef struct rwb_graph rwb_graph;       /* immutable simple graph */
typedef struct rwb_coloring rwb_coloring; /* red/blue coloring of K_n */
typedef struct rwb_report rwb_report;     /* JSON result document */

const char* rwb_version(void);
const char* rwb_status_name(rwb_status status);
/* Message for the most recent failure on this thread; empty if none. */
const char* rwb_last_error(void);

void rwb_string_free(char* s);
void rwb_graph_free(rwb_graph* g);
void rwb_coloring_free(rwb_coloring* c);
void rwb_report_free(rwb_report* r);

/* ---- graphs -------------------------------------------------------- */

rwb_status rwb_graph_from_graph6(const char* text, rwb_graph** out);
rwb_status rwb_graph_to_graph6(const rwb_graph* g, char** out);
rwb_status rwb_graph_complete(int n, rwb_graph** out);
/* endpoints: 2*edge_count ints, (u0,v0,u1,v1,...) */
rwb_status rwb_graph_from_edges(int n, const int* endpoints, size_t edge_count,
                                rwb_graph** out);
rwb_status rwb_graph_complement(const rwb_graph* g, rwb_graph** out);
int rwb_graph_order(const rwb_graph* g);
long long rwb_graph_edge_count(const rwb_graph* g);
/* 1 if adjacent, 0 if not, -1 on bad arguments */
int rwb_graph_has_edge(const rwb_graph* g, int u, int v);

/* ---- colorings (RAMSEY-COLORING v1 file format) -------------------- */

rwb_status rwb_coloring_from_red(const rwb_graph* red, rwb_coloring** out);
rwb_status rwb_coloring_parse(const char* text, rwb_coloring** out);
rwb_status rwb_coloring_format(const rwb_coloring* c, char** out);
rwb_status rwb_coloring_read_file(const char* path, rwb_coloring** out);
rwb_status rwb_coloring_write_file(const rwb_coloring* c, const char* path);
int rwb_coloring_order(const rwb_coloring* c);
rwb_status rwb_coloring_red_graph(const rwb_coloring* c, rwb_graph** out);
rwb_status rwb_coloring_blue_graph(const rwb_coloring* c, rwb_graph** out);

/* ---- extremal constructions and reference formulas ----------------- */

rwb_status rwb_floor_an(long long a_num, long long a_den, long long n, long long* out);
rwb_status rwb_lower_bound_value(long long a_num, long long a_den, long long n,
                                 long long* out);
rwb_status rwb_asymptotic_main_term(long long a_num, long long a_den, long long* out_num,
                                    long long* out_den);
/* family: "w1".."w5"; the ratio is ignored for w5 */
rwb_status rwb_build_witness(const char* family, long long a_num, long long a_den,
                             long long n, rwb_coloring** out);
rwb_status rwb_witness_targets(const char* family, long long a_num, long long a_den,
                               long long n, int* out_cycle, int* out_fan);
rwb_status rwb_witness_lower_bound(const char* family, long long a_num, long long a_den,
                                   long long n, long long* out);
rwb_status rwb_verify_coloring(const rwb_coloring* c, int cycle_len, int fan_blades,
                               rwb_report** out);
/* family: "c3-fan" (uses n), "odd-cycle-fan" (m, n), "cycle-vs-fan" (n, m),
 * "fan-fan" (m, n) */
rwb_status rwb_literature_value(const char* family, long long n, long long m,
                                rwb_report** out);
/* a_list_csv: comma-separated rationals, e.g. "1/2,3/4,1" */
rwb_status rwb_asymptotic_table(const char* a_list_csv, long long n, rwb_report** out);
rwb_status rwb_star_matching_ramsey(int k, int n1, int n2, int interpret_k_above_n1,
                                    long long* out);

/* ---- detectors ------------------------------------------------------ */

/* length_or_zero = 0: circumference; otherwise search for that exact length */
rwb_status rwb_detect_cycle(const rwb_graph* g, int length_or_zero, int allow_heuristic,
                            rwb_report** out);
rwb_status rwb_detect_fan(const rwb_graph* g, int blades_or_zero, rwb_report** out);
rwb_status rwb_detect_connected_matching(const rwb_graph* g, rwb_report** out);
rwb_status rwb_max_matching(const rwb_graph* g, rwb_report** out);
rwb_status rwb_berge_deficiency(const rwb_graph* g, rwb_report** out);

/* ---- exhaustive search ---------------------------------------------- */

/* budget_seconds < 0: unlimited. Paths may be NULL. */
rwb_status rwb_search_arrows(int n, int cycle_len, int fan_blades, double budget_seconds,
                             int threads, int enable_pruning, const char* resume_path,
                             const char* checkpoint_path, rwb_report** out);
rwb_status rwb_search_exact(int cycle_len, int fan_blades, int max_n, double budget_seconds,
                            int threads, rwb_report** out);
rwb_status rwb_random_audit(int n, int cycle_len, int fan_blades,
                            unsigned long long samples, unsigned long long seed,
                            int exhaustive, rwb_report** out);

/* ---- lemma checkers -------------------------------------------------- */

/* red must be a subgraph of host; absent pairs count in neither color */
rwb_status rwb_lemma_component(const rwb_graph* host, const rwb_graph* red,
                               rwb_report** out);
rwb_status rwb_lemma_figaj_luczak(const rwb_graph* g, const int* part1, size_t part1_len,
                                  const int* part2, size_t part2_len, long long eps_num,
                                  long long eps_den, rwb_report** out);
rwb_status rwb_lemma_star_matching(int k, int n1, int n2, double budget_seconds,
                                   rwb_report** out);
rwb_status rwb_lemma_dirac(const rwb_graph* g, rwb_report** out);
rwb_status rwb_lemma_bondy(const rwb_graph* g, rwb_report** out);
rwb_status rwb_lemma_dirac_chain(const rwb_graph* g, rwb_report** out);
/* regime: "partI" or "partII" */
rwb_status rwb_claims_audit(const rwb_graph* host, const rwb_graph* red, long long a_num,
                            long long a_den, long long beta_num, long long beta_den,
                            const char* regime, int max_defect, rwb_report** out);

/* ---- reports --------------------------------------------------------- */

const char* rwb_report_json(const rwb_report* r);
int rwb_report_exit_code(const rwb_report* r);

#ifdef __cplusplus
}
#endif

#endif /* RAMSEY_WORKBENCH_H */
