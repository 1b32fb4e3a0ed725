/* kuramoto.h - C API for the weighted Kuramoto fixed-point toolkit.
 *
 * The library simulates dtheta_i/dt = omega_i + k sum_j w_ij sin(theta_j - theta_i)
 * on small weighted graphs, locates and classifies frequency fixed points,
 * analyses their linear stability, solves the integer/Kuramoto/surd partition
 * problems, builds the partition reduction gadgets with their analytic stable
 * fixed points, and cross-checks that partition answers and non-zero stable
 * fixed points agree.
 *
 * All functions returning kur_status report KUR_OK on success; on failure a
 * thread-local message is available via kur_last_error().  Objects are
 * created through kur_*_new/parse functions and released with the matching
 * kur_*_free.  Handles are opaque.
 */

#ifndef KURAMOTO_H
#define KURAMOTO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef KUR_API
#if defined(_WIN32)
#define KUR_API
#else
#define KUR_API __attribute__((visibility("default")))
#endif
#endif

typedef enum kur_status {
    KUR_OK = 0,
    KUR_ERR_INVALID_ARGUMENT = 1, /* bad sizes, ranges, or preconditions */
    KUR_ERR_PARSE = 2,            /* malformed file content */
    KUR_ERR_IO = 3,               /* file not readable/writable */
    KUR_ERR_NUMERIC = 4,          /* divergence, singularity, non-finite state */
    KUR_ERR_INVALID_WITNESS = 5   /* claimed partition witness fails the residual check */
} kur_status;

typedef enum kur_verdict {
    KUR_VERDICT_STABLE = 0,
    KUR_VERDICT_UNSTABLE = 1,
    KUR_VERDICT_MARGINAL = 2
} kur_verdict;

typedef enum kur_classification {
    KUR_CLASS_ZERO = 0,   /* all phases equal up to a global rotation */
    KUR_CLASS_NONZERO = 1
} kur_classification;

typedef enum kur_edge_angles {
    KUR_EDGES_ALL_ACUTE = 0,
    KUR_EDGES_ALL_OBTUSE = 1,
    KUR_EDGES_MIXED = 2
} kur_edge_angles;

typedef enum kur_answer {
    KUR_ANSWER_YES = 0,
    KUR_ANSWER_NO = 1,
    KUR_ANSWER_NOT_FOUND = 2
} kur_answer;

typedef enum kur_partition_variant {
    KUR_PARTITION_INTEGER = 0,
    KUR_PARTITION_KURAMOTO = 1,
    KUR_PARTITION_SURD = 2
} kur_partition_variant;

typedef enum kur_gadget_kind {
    KUR_GADGET_WEIGHTED = 0,
    KUR_GADGET_UNWEIGHTED = 1
} kur_gadget_kind;

typedef struct kur_graph kur_graph;
typedef struct kur_state kur_state;
typedef struct kur_fp_list kur_fp_list;
typedef struct kur_gadget kur_gadget;
typedef struct kur_verify_report kur_verify_report;

/* Message describing the most recent failure on this thread ("" if none). */
KUR_API const char* kur_last_error(void);

/* Frees strings returned by the serialize functions. */
KUR_API void kur_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* Builds a graph from m undirected edges (is[e], js[e], ws[e]); indices must
 * satisfy 0 <= is[e] < js[e] < n, weights must be positive, no duplicates. */
KUR_API kur_status kur_graph_new(int n, int m, const int* is, const int* js, const double* ws,
                                 kur_graph** out);
KUR_API kur_status kur_graph_parse(const char* text, kur_graph** out);
KUR_API kur_status kur_graph_load(const char* path, kur_graph** out);
KUR_API kur_status kur_graph_serialize(const kur_graph* g, char** out_text);
KUR_API kur_status kur_graph_save(const kur_graph* g, const char* path);
KUR_API void kur_graph_free(kur_graph* g);

KUR_API int kur_graph_node_count(const kur_graph* g);
KUR_API int kur_graph_edge_count(const kur_graph* g);
KUR_API kur_status kur_graph_edge(const kur_graph* g, int e, int* i, int* j, double* w);
KUR_API int kur_graph_is_connected(const kur_graph* g);

/* ---- phase states ------------------------------------------------------ */

KUR_API kur_status kur_state_new(int n, const double* theta, kur_state** out);
KUR_API kur_status kur_state_parse(const char* text, kur_state** out);
KUR_API kur_status kur_state_load(const char* path, kur_state** out);
KUR_API kur_status kur_state_serialize(const kur_state* s, char** out_text);
KUR_API kur_status kur_state_save(const kur_state* s, const char* path);
KUR_API void kur_state_free(kur_state* s);

KUR_API int kur_state_size(const kur_state* s);
/* Copies the angles (normalized into [0, 2pi)) into out[0..n-1]. */
KUR_API kur_status kur_state_angles(const kur_state* s, double* out);
/* Uniform random phases; the stream is fully determined by the seed. */
KUR_API kur_status kur_state_random(int n, uint64_t seed, kur_state** out);
/* Rotates all angles so the anchor node sits at phase 0. */
KUR_API kur_status kur_state_canonical(const kur_state* s, int anchor, kur_state** out);
/* Distance modulo a global rotation: min over phi of max_i circdist. */
KUR_API kur_status kur_state_distance(const kur_state* a, const kur_state* b, double* out);

/* ---- dynamics ----------------------------------------------------------- */

/* omega may be NULL for the homogeneous (all-zero) case. */
KUR_API kur_status kur_rhs(const kur_graph* g, const kur_state* s, const double* omega, double k,
                           double* out);
KUR_API kur_status kur_energy(const kur_graph* g, const kur_state* s, double* out);
KUR_API kur_status kur_mean_frequency(const double* omega, int n, double* out);
KUR_API kur_status kur_step_rk4(const kur_graph* g, const kur_state* s, const double* omega, double k,
                                double h, kur_state** out);

/* Called once per integration step with (step, energy, max |freq - mean|). */
typedef void (*kur_trace_fn)(void* user, long step, double energy, double freq_dev);

/* Integrates until the frequency deviation drops below tol or max_steps is
 * reached; the final state is canonically rotated at node 0. */
KUR_API kur_status kur_integrate(const kur_graph* g, const kur_state* s0, const double* omega,
                                 double k, double h, double tol, long max_steps,
                                 kur_trace_fn trace, void* trace_user,
                                 kur_state** out_state, int* out_converged, long* out_steps);

/* ---- fixed points and stability ----------------------------------------- */

/* Fixed-point residual sum_j w_ij sin(theta_j - theta_i) - (mean - omega_i)/k. */
KUR_API kur_status kur_residual(const kur_graph* g, const kur_state* s, const double* omega, double k,
                                double* out);

/* Newton refinement with node 0 pinned; the result list holds one record. */
KUR_API kur_status kur_newton_refine(const kur_graph* g, const kur_state* s0, const double* omega,
                                     double k, double tol, int max_iter, kur_fp_list** out);

/* Seeded multistart search: random starts relaxed by the flow, polished by
 * Newton, deduplicated modulo global rotation.  Deterministic per seed. */
KUR_API kur_status kur_multistart(const kur_graph* g, const double* omega, double k, int samples,
                                  uint64_t seed, double tol, kur_fp_list** out);

KUR_API int kur_fp_count(const kur_fp_list* l);
KUR_API int kur_fp_dropped(const kur_fp_list* l);
KUR_API kur_status kur_fp_state(const kur_fp_list* l, int idx, kur_state** out);
KUR_API kur_status kur_fp_residual_norm(const kur_fp_list* l, int idx, double* out);
/* Copies the ascending Jacobian spectrum into out[0..n-1]. */
KUR_API kur_status kur_fp_spectrum(const kur_fp_list* l, int idx, double* out);
KUR_API kur_status kur_fp_verdict(const kur_fp_list* l, int idx, kur_verdict* out);
KUR_API kur_status kur_fp_classification(const kur_fp_list* l, int idx, kur_classification* out);
KUR_API void kur_fp_list_free(kur_fp_list* l);

/* Spectrum (optional, out_spectrum may be NULL), zero-mode count and verdict
 * of the stability matrix at s.  The graph must be connected. */
KUR_API kur_status kur_stability(const kur_graph* g, const kur_state* s, double tol,
                                 double* out_spectrum, int* out_zero_modes, kur_verdict* out_verdict);

/* Cut sums over ordered pairs (i in X, j outside): sum w sin(theta_j - theta_i)
 * and sum w cos(theta_j - theta_i).  X must be proper and nonempty. */
KUR_API kur_status kur_cut_check(const kur_graph* g, const kur_state* s, const int* x, int x_len,
                                 double* out_sin, double* out_cos);
KUR_API kur_status kur_edge_angle_check(const kur_graph* g, const kur_state* s, kur_edge_angles* out);

/* ---- partition problems ------------------------------------------------- */

/* Decides one of the three partition variants.
 *   integer:  values are the a_i; n_param ignored (pass 0).
 *   kuramoto: values are b_1..b_n with 2 <= b_i <= n; n_param = n = count.
 *   surd:     values are b_1..b_n with 1 <= b_i <= n; n_param = n = count.
 * Outputs (each pointer may be NULL): the answer, the witness subset indices
 * (buffer of at least 3*count for kuramoto, count otherwise), epsilon for the
 * kuramoto variant, and the achieved gap.  definitive reports whether a No is
 * exhaustive rather than a heuristic miss. */
KUR_API kur_status kur_partition_solve(kur_partition_variant variant, const long long* values,
                                       int count, int n_param, kur_answer* out_answer,
                                       int* out_subset, int* out_subset_len, double* out_epsilon,
                                       double* out_gap, int* out_definitive);

/* Largest-differencing heuristic on arbitrary positive reals. */
KUR_API kur_status kur_kk_differencing(const double* values, int count, int* out_subset,
                                       int* out_subset_len, double* out_gap);

/* One Kuramoto Partition summand sqrt(b^2(1-eps^2)/(1+b^2+-2b eps)). */
KUR_API kur_status kur_kuramoto_term(long long b, double eps, int in_subset, double* out);

/* ---- reduction gadgets --------------------------------------------------- */

/* Weighted gadget: values are the a_i, factor scales the v-y weights
 * (canonical construction uses 2), n_param ignored.  Unweighted gadget:
 * values are b_1..b_n, n_param = n, factor ignored. */
KUR_API kur_status kur_gadget_build(kur_gadget_kind kind, const long long* values, int count,
                                    int n_param, double factor, kur_gadget** out);

/* Unit-weight emulation of the weighted gadget: each u_i/v_i becomes an
 * a_i-clique inheriting its adjacencies, corresponding cliques joined
 * completely.  Returns a plain graph (no role descriptor). */
KUR_API kur_status kur_blowup_build(const long long* values, int count, kur_graph** out);
KUR_API void kur_gadget_free(kur_gadget* g);

/* Borrowed pointer, valid for the gadget's lifetime. */
KUR_API const kur_graph* kur_gadget_graph(const kur_gadget* g);
/* Graph file text followed by '# role ...' descriptor comment lines. */
KUR_API kur_status kur_gadget_serialize(const kur_gadget* g, char** out_text);

KUR_API int kur_gadget_group_count(const kur_gadget* g);  /* m or 3n */
KUR_API int kur_gadget_x(const kur_gadget* g);
KUR_API int kur_gadget_y(const kur_gadget* g);
KUR_API kur_status kur_gadget_u(const kur_gadget* g, int i, int* out);
KUR_API kur_status kur_gadget_v(const kur_gadget* g, int i, int* out);
KUR_API kur_status kur_gadget_clique_size(const kur_gadget* g, int i, int* out);
KUR_API kur_status kur_gadget_clique_node(const kur_gadget* g, int i, int k, int* out);

/* The analytic fixed point for a witness subset (positions into the padded
 * values for the unweighted kind).  eps is ignored for the weighted kind.
 * Fails with KUR_ERR_INVALID_WITNESS when the residual check rejects S. */
KUR_API kur_status kur_gadget_analytic_state(const kur_gadget* g, const int* subset, int subset_len,
                                             double eps, kur_state** out);

/* ---- reduction verification ---------------------------------------------- */

/* Solves the partition side definitively, validates the analytic witness when
 * one exists, and surveys the gadget with a seeded multistart. */
KUR_API kur_status kur_verify_reduction(kur_gadget_kind kind, const long long* values, int count,
                                        int n_param, double factor, int samples, uint64_t seed,
                                        kur_verify_report** out);
KUR_API void kur_verify_report_free(kur_verify_report* r);

KUR_API kur_answer kur_verify_answer(const kur_verify_report* r);
KUR_API kur_status kur_verify_subset(const kur_verify_report* r, int* out_subset, int* out_len);
KUR_API double kur_verify_epsilon(const kur_verify_report* r);
/* 1 when consistent, 0 otherwise; out_determinable (may be NULL) reports
 * whether consistency could be judged at all. */
KUR_API int kur_verify_consistent(const kur_verify_report* r, int* out_determinable);
KUR_API int kur_verify_stable_zero(const kur_verify_report* r);
KUR_API int kur_verify_stable_nonzero(const kur_verify_report* r);
KUR_API int kur_verify_unstable(const kur_verify_report* r);
KUR_API int kur_verify_marginal(const kur_verify_report* r);
KUR_API int kur_verify_dropped(const kur_verify_report* r);
/* 1 when an analytic record exists; outputs may be NULL. */
KUR_API int kur_verify_analytic(const kur_verify_report* r, double* out_residual,
                                kur_verdict* out_verdict, kur_classification* out_class);
KUR_API kur_status kur_verify_analytic_state(const kur_verify_report* r, kur_state** out);

#ifdef __cplusplus
}
#endif

#endif /* KURAMOTO_H */
