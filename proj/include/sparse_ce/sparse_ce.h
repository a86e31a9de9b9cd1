/*
 * Copyright 2026 The sparse-ce Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the sparse-ce library.
 *
 * Conventions:
 *   - Every function returns an sce_status; SCE_OK is 0. On failure the
 *     message of the most recent error on the calling thread is available
 *     from sce_last_error().
 *   - Objects are opaque handles created by *_new / *_from_json / builder
 *     functions and released with the matching *_free. Free functions accept
 *     NULL.
 *   - Strings returned through char** are heap-allocated, NUL-terminated
 *     and must be released with sce_string_free().
 *   - Matrices are row-major. Action indices are 0-based.
 *   - Deviation sets are named: "ext", "int", "phihat", "phi", "swap".
 */

#ifndef SPARSE_CE_SPARSE_CE_H_
#define SPARSE_CE_SPARSE_CE_H_

#include <stdint.h>

#if defined(SPARSE_CE_BUILDING_LIBRARY)
#define SCE_API __attribute__((visibility("default")))
#else
#define SCE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sce_status {
  SCE_OK = 0,
  SCE_INVALID_ARGUMENT = 1,
  SCE_DIMENSION_MISMATCH = 2,
  SCE_SIZE_LIMIT = 3,
  SCE_NOT_CONSTANT_SUM = 4,
  SCE_SOLVER_FAILURE = 5,
  SCE_ZERO_MASS = 6,
  SCE_IO = 7,
  SCE_PARSE = 8,
  SCE_INCONSISTENT = 9,
  SCE_INTERNAL = 10
} sce_status;

typedef struct sce_game sce_game;       /* bimatrix game (R, C) */
typedef struct sce_dist sce_dist;       /* uniform mixture of T products */
typedef struct sce_dense sce_dense;     /* dense joint distribution */
typedef struct sce_graph sce_graph;     /* undirected graph, unit diagonal */
typedef struct sce_family sce_family;   /* enumeration-hard game family */
typedef struct sce_runlog sce_runlog;   /* self-play trajectory */
typedef struct sce_moment sce_moment;   /* degree-2 moment matrix */

SCE_API const char* sce_version(void);
SCE_API const char* sce_last_error(void);
SCE_API const char* sce_status_name(sce_status status);
SCE_API void sce_string_free(char* s);

/* ---- games ---------------------------------------------------------- */

SCE_API sce_status sce_game_new(int n, const double* R, const double* C,
                                const char* label, sce_game** out);
SCE_API sce_status sce_game_from_json(const char* json, sce_game** out);
SCE_API sce_status sce_game_to_json(const sce_game* game, char** out);
SCE_API sce_status sce_game_n(const sce_game* game, int* n);
SCE_API void sce_game_free(sce_game* game);

/* ---- distributions -------------------------------------------------- */

/* xs and ys hold T rows of length n. */
SCE_API sce_status sce_dist_new(int T, int n, const double* xs,
                                const double* ys, sce_dist** out);
SCE_API sce_status sce_dist_from_json(const char* json, sce_dist** out);
SCE_API sce_status sce_dist_to_json(const sce_dist* dist, char** out);
SCE_API sce_status sce_dist_T(const sce_dist* dist, int* T);
/* T copies of u(S) (x) u(S) in dimension n. */
SCE_API sce_status sce_dist_planted(const int* S, int s_len, int n, int T,
                                    sce_dist** out);
SCE_API sce_status sce_dist_welfare(const sce_game* game, const sce_dist* dist,
                                    double* welfare);
SCE_API void sce_dist_free(sce_dist* dist);

SCE_API sce_status sce_dense_from_json(const char* json, sce_dense** out);
SCE_API sce_status sce_dense_to_json(const sce_dense* dense, char** out);
SCE_API sce_status sce_dense_from_dist(const sce_dist* dist, sce_dense** out);
SCE_API void sce_dense_free(sce_dense* dense);

/* ---- graphs --------------------------------------------------------- */

SCE_API sce_status sce_graph_from_json(const char* json, sce_graph** out);
SCE_API sce_status sce_graph_to_json(const sce_graph* graph, char** out);
/* kind: "er", "planted-is", "planted-clique". `planted` needs room for k
 * entries and may be NULL; *planted_len receives the planted size. */
SCE_API sce_status sce_graph_random(int n, const char* kind, int k,
                                    uint64_t seed, sce_graph** out,
                                    int* planted, int* planted_len);
SCE_API void sce_graph_free(sce_graph* graph);

/* ---- constructions -------------------------------------------------- */

SCE_API sce_status sce_is_game(const sce_graph* graph, double k, double gamma,
                               int rescale, sce_game** out);
SCE_API sce_status sce_clique_game(const sce_graph* graph, double k,
                                   double gamma, int rescale, sce_game** out);
SCE_API sce_status sce_enumhard_low_game(int ell, const int* S, int s_len,
                                         sce_game** out);
SCE_API sce_status sce_enumhard_high_game(int n, const int* S, int s_len,
                                          sce_game** out);
SCE_API sce_status sce_pennies_game(int m, int shifted, sce_game** out);
/* `scale` (may be NULL) receives the normalization divisor. */
SCE_API sce_status sce_stitched_game(const sce_game* sos,
                                     const sce_game* enum_game, double delta,
                                     double k, int normalize, sce_game** out,
                                     double* scale);

SCE_API sce_status sce_family_enumhard_low(int ell, int packed, double min_l1,
                                           sce_family** out);
SCE_API sce_status sce_family_enumhard_high(int n, sce_family** out);
SCE_API sce_status sce_family_from_json(const char* json, sce_family** out);
SCE_API sce_status sce_family_to_json(const sce_family* family, char** out);
SCE_API sce_status sce_family_size(const sce_family* family, int* size);
SCE_API sce_status sce_family_game(const sce_family* family, int index,
                                   sce_game** out);
SCE_API void sce_family_free(sce_family* family);

/* ---- equilibria ----------------------------------------------------- */

/* Report JSON: gap_row, gap_col, welfare, epsilon_star, worst_dev_row,
 * worst_dev_col. */
SCE_API sce_status sce_ce_gap(const sce_game* game, const sce_dist* dist,
                              const char* phi, char** report);
SCE_API sce_status sce_ce_gap_dense(const sce_game* game,
                                    const sce_dense* dense, const char* phi,
                                    char** report);
/* *accept is 1 for Accept, 0 for Reject. */
SCE_API sce_status sce_verify(const sce_game* game, const sce_dist* dist,
                              double eps, const char* phi, int* accept);
SCE_API sce_status sce_verify_dense(const sce_game* game,
                                    const sce_dense* dense, double eps,
                                    const char* phi, int* accept);
SCE_API sce_status sce_exact_ce_lp(const sce_game* game, const char* phi,
                                   int max_welfare, sce_dense** out);
/* JSON: x, y, value. */
SCE_API sce_status sce_zero_sum_solve(const sce_game* game, char** out);
SCE_API sce_status sce_nash_gap(const sce_game* game, const double* x,
                                const double* y, int n, double* gap);
/* JSON: x_avg, y_avg, cce_gap, certified_eps, nash_gap, premise_met. */
SCE_API sce_status sce_avg_to_nash(const sce_game* game, const sce_dist* dist,
                                   double eps, char** out);
SCE_API sce_status sce_condition_to_block(const sce_dist* dist,
                                          const int* rows, int n_rows,
                                          const int* cols, int n_cols,
                                          sce_dist** out);
SCE_API sce_status sce_brute_force(const sce_game* game, int T, int grid,
                                   const char* phi, sce_dist** out,
                                   double* gap);

/* ---- dynamics ------------------------------------------------------- */

/* algo: "mwu" or "phi"; phi names the deviation set of the "phi" learner. */
SCE_API sce_status sce_self_play(const sce_game* game, const char* algo,
                                 const char* phi, int T, uint64_t seed,
                                 sce_runlog** out);
SCE_API sce_status sce_runlog_from_json(const char* json, sce_runlog** out);
SCE_API sce_status sce_runlog_to_json(const sce_runlog* log, char** out);
SCE_API sce_status sce_runlog_csv(const sce_runlog* log, char** out);
SCE_API sce_status sce_runlog_plot_csv(const sce_runlog* log, const char* phi,
                                       char** out);
SCE_API sce_status sce_runlog_dist(const sce_runlog* log, sce_dist** out);
/* player: 0 row, 1 column. Regret is not divided by T. */
SCE_API sce_status sce_phi_regret(const sce_runlog* log, const char* phi,
                                  int player, double* regret);
SCE_API sce_status sce_regret_certificate(const sce_game* game,
                                          const sce_runlog* log,
                                          const char* phi, char** report);
SCE_API void sce_runlog_free(sce_runlog* log);

/* ---- pseudo-expectations -------------------------------------------- */

SCE_API sce_status sce_moment_from_json(const char* json, sce_moment** out);
SCE_API sce_status sce_moment_to_json(const sce_moment* moment, char** out);
/* `points` holds `count` rows of length m. */
SCE_API sce_status sce_moment_from_points(int count, int m,
                                          const double* weights,
                                          const double* points,
                                          sce_moment** out);
SCE_API sce_status sce_pseudo_lift(const sce_moment* mz, double k, int T,
                                   int n, sce_moment** out);
SCE_API sce_status sce_pseudo_extend(const sce_moment* moment, int n,
                                     sce_moment** out);
/* Checks normalization and positivity, and with a game also the sparse-CE
 * system for T components (utility floors when has_delta). JSON: status,
 * valid, min_eigenvalue, and eigenvector or constraint_index/value. */
SCE_API sce_status sce_pseudo_check(const sce_moment* moment,
                                    const sce_game* game, int T,
                                    const char* phi, int has_delta,
                                    double delta, double tol, char** out);
SCE_API void sce_moment_free(sce_moment* moment);

/* ---- lemma validators (verdict JSON) -------------------------------- */

SCE_API sce_status sce_lemma_completeness(const sce_graph* graph, const int* S,
                                          int s_len, double gamma, int k,
                                          int T, char** verdict);
SCE_API sce_status sce_lemma_conditioning(const sce_graph* graph, double k,
                                          double gamma, const sce_dist* dist,
                                          double eps, const char* phi,
                                          char** verdict);
SCE_API sce_status sce_lemma_probability_bounds(const sce_graph* graph,
                                                double k, double gamma,
                                                const sce_dist* dist,
                                                char** verdict);
/* Verdict JSON carries the extracted set under "set". */
SCE_API sce_status sce_lemma_extract_is(const sce_graph* graph, int k,
                                        const sce_dist* dist, int t,
                                        char** verdict);
SCE_API sce_status sce_lemma_stitch_dichotomy(const sce_game* stitched,
                                              const sce_dist* dist, double k,
                                              char** verdict);
SCE_API sce_status sce_lemma_stitch_restrict(
    const sce_game* stitched, const sce_game* enum_game, const sce_dist* dist,
    double eps_prime, double k, double delta, double soundness_constant,
    double drift_constant, const char* phi, char** verdict);
/* kind: "low", "gen-match", "high"; constant < 0 selects the default. */
SCE_API sce_status sce_lemma_enumhard_marginals(const char* kind,
                                                const sce_game* game,
                                                const int* S, int s_len,
                                                const sce_dist* dist,
                                                double eps, double constant,
                                                char** verdict);

/* order: "random" or "fixed". JSON: queries, found, distinct,
 * single_elimination. */
SCE_API sce_status sce_query_harness(const sce_family* family,
                                     const char* hidden_key, double eps,
                                     const char* order, uint64_t seed,
                                     const char* phi, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPARSE_CE_SPARSE_CE_H_ */
