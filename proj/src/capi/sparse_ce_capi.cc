// Copyright 2026 The sparse-ce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sparse_ce/sparse_ce.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "core/constructions.h"
#include "core/deviations.h"
#include "core/dynamics.h"
#include "core/equilibria.h"
#include "core/game.h"
#include "core/lemma_lab.h"
#include "core/pseudo.h"
#include "core/serialization.h"

namespace sce = sparse_ce;

struct sce_game {
  sce::BimatrixGame v;
};
struct sce_dist {
  sce::SparseCorrelated v;
};
struct sce_dense {
  sce::DenseCorrelated v;
};
struct sce_graph {
  sce::Graph v;
};
struct sce_family {
  sce::GameFamily v;
};
struct sce_runlog {
  sce::RunLog v;
};
struct sce_moment {
  sce::MomentMatrix v;
};

namespace {

thread_local std::string last_error;

template <typename F>
sce_status Wrap(F&& f) {
  try {
    f();
    last_error.clear();
    return SCE_OK;
  } catch (const sce::Error& e) {
    last_error = e.what();
    return static_cast<sce_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return SCE_INTERNAL;
  }
}

void Need(const void* p, const char* what) {
  sce::Check(p != nullptr, sce::ErrorCode::kInvalidArgument,
             std::string(what) + " is NULL");
}

char* Dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  sce::Check(out != nullptr, sce::ErrorCode::kIo, "out of memory");
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void PutJson(const sce::Json& j, char** out) {
  Need(out, "output");
  *out = Dup(j.dump());
}

template <typename H, typename V>
void Put(V&& value, H** out) {
  Need(out, "output");
  *out = new H{std::forward<V>(value)};
}

std::string Str(const char* s, const char* what) {
  Need(s, what);
  return s;
}

sce::DeviationSet Devs(const char* phi, int n) {
  return sce::DeviationSet::Enumerate(
      sce::ParseDeviationKind(phi ? phi : "phi"), n);
}

sce::DeviationKind Kind(const char* phi) {
  return sce::ParseDeviationKind(phi ? phi : "phi");
}

std::vector<int> Ints(const int* p, int len) {
  sce::Check(len >= 0, sce::ErrorCode::kInvalidArgument, "negative length");
  if (len > 0) Need(p, "index array");
  return std::vector<int>(p, p + len);
}

sce::Vector Vec(const double* p, int len) {
  Need(p, "vector");
  return Eigen::Map<const sce::Vector>(p, len);
}

sce::Matrix RowMajor(const double* p, int rows, int cols) {
  Need(p, "matrix");
  sce::Matrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = p[i * cols + j];
  }
  return m;
}

}  // namespace

extern "C" {

const char* sce_version(void) { return SPARSE_CE_VERSION; }

const char* sce_last_error(void) { return last_error.c_str(); }

const char* sce_status_name(sce_status status) {
  switch (status) {
    case SCE_OK: return "ok";
    case SCE_INVALID_ARGUMENT: return "invalid_argument";
    case SCE_DIMENSION_MISMATCH: return "dimension_mismatch";
    case SCE_SIZE_LIMIT: return "size_limit";
    case SCE_NOT_CONSTANT_SUM: return "not_constant_sum";
    case SCE_SOLVER_FAILURE: return "solver_failure";
    case SCE_ZERO_MASS: return "zero_mass";
    case SCE_IO: return "io";
    case SCE_PARSE: return "parse";
    case SCE_INCONSISTENT: return "inconsistent";
    case SCE_INTERNAL: return "internal";
  }
  return "unknown";
}

void sce_string_free(char* s) { std::free(s); }

// Games.

sce_status sce_game_new(int n, const double* R, const double* C,
                        const char* label, sce_game** out) {
  return Wrap([&] {
    sce::Check(n >= 1, sce::ErrorCode::kInvalidArgument, "n must be >= 1");
    Put(sce::BimatrixGame(RowMajor(R, n, n), RowMajor(C, n, n),
                          label ? label : ""),
        out);
  });
}

sce_status sce_game_from_json(const char* json, sce_game** out) {
  return Wrap([&] {
    Put(sce::GameFromJson(sce::ParseJson(Str(json, "json"))), out);
  });
}

sce_status sce_game_to_json(const sce_game* game, char** out) {
  return Wrap([&] {
    Need(game, "game");
    PutJson(sce::GameToJson(game->v), out);
  });
}

sce_status sce_game_n(const sce_game* game, int* n) {
  return Wrap([&] {
    Need(game, "game");
    Need(n, "output");
    *n = game->v.n();
  });
}

void sce_game_free(sce_game* game) { delete game; }

// Distributions.

sce_status sce_dist_new(int T, int n, const double* xs, const double* ys,
                        sce_dist** out) {
  return Wrap([&] {
    sce::Check(T >= 1 && n >= 1, sce::ErrorCode::kInvalidArgument,
               "T and n must be >= 1");
    Need(xs, "xs");
    Need(ys, "ys");
    std::vector<sce::MixedStrategy> x, y;
    for (int t = 0; t < T; ++t) {
      x.emplace_back(Vec(xs + t * n, n));
      y.emplace_back(Vec(ys + t * n, n));
    }
    Put(sce::SparseCorrelated(std::move(x), std::move(y)), out);
  });
}

sce_status sce_dist_from_json(const char* json, sce_dist** out) {
  return Wrap([&] {
    Put(sce::SparseFromJson(sce::ParseJson(Str(json, "json"))), out);
  });
}

sce_status sce_dist_to_json(const sce_dist* dist, char** out) {
  return Wrap([&] {
    Need(dist, "dist");
    PutJson(sce::SparseToJson(dist->v), out);
  });
}

sce_status sce_dist_T(const sce_dist* dist, int* T) {
  return Wrap([&] {
    Need(dist, "dist");
    Need(T, "output");
    *T = dist->v.T();
  });
}

sce_status sce_dist_planted(const int* S, int s_len, int n, int T,
                            sce_dist** out) {
  return Wrap([&] { Put(sce::PlantedProfile(Ints(S, s_len), n, T), out); });
}

sce_status sce_dist_welfare(const sce_game* game, const sce_dist* dist,
                            double* welfare) {
  return Wrap([&] {
    Need(game, "game");
    Need(dist, "dist");
    Need(welfare, "output");
    *welfare = sce::SocialWelfare(game->v, dist->v);
  });
}

void sce_dist_free(sce_dist* dist) { delete dist; }

sce_status sce_dense_from_json(const char* json, sce_dense** out) {
  return Wrap([&] {
    Put(sce::DenseFromJson(sce::ParseJson(Str(json, "json"))), out);
  });
}

sce_status sce_dense_to_json(const sce_dense* dense, char** out) {
  return Wrap([&] {
    Need(dense, "dense");
    PutJson(sce::DenseToJson(dense->v), out);
  });
}

sce_status sce_dense_from_dist(const sce_dist* dist, sce_dense** out) {
  return Wrap([&] {
    Need(dist, "dist");
    Put(sce::Densify(dist->v), out);
  });
}

void sce_dense_free(sce_dense* dense) { delete dense; }

// Graphs.

sce_status sce_graph_from_json(const char* json, sce_graph** out) {
  return Wrap([&] {
    Put(sce::GraphFromJson(sce::ParseJson(Str(json, "json"))), out);
  });
}

sce_status sce_graph_to_json(const sce_graph* graph, char** out) {
  return Wrap([&] {
    Need(graph, "graph");
    PutJson(sce::GraphToJson(graph->v), out);
  });
}

sce_status sce_graph_random(int n, const char* kind, int k, uint64_t seed,
                            sce_graph** out, int* planted, int* planted_len) {
  return Wrap([&] {
    const std::string name = Str(kind, "kind");
    sce::GraphKind gk;
    if (name == "er") {
      gk = sce::GraphKind::kErdosRenyiHalf;
    } else if (name == "planted-is") {
      gk = sce::GraphKind::kPlantedIndependentSet;
    } else if (name == "planted-clique") {
      gk = sce::GraphKind::kPlantedClique;
    } else {
      sce::Fail(sce::ErrorCode::kInvalidArgument,
                "unknown graph kind '" + name + "'");
    }
    sce::RandomGraphResult r = sce::RandomGraph(n, gk, k, seed);
    if (planted_len) *planted_len = static_cast<int>(r.planted.size());
    if (planted) {
      std::copy(r.planted.begin(), r.planted.end(), planted);
    }
    Put(std::move(r.graph), out);
  });
}

void sce_graph_free(sce_graph* graph) { delete graph; }

// Constructions.

sce_status sce_is_game(const sce_graph* graph, double k, double gamma,
                       int rescale, sce_game** out) {
  return Wrap([&] {
    Need(graph, "graph");
    Put(sce::IndependentSetGame(graph->v, k, gamma, rescale != 0), out);
  });
}

sce_status sce_clique_game(const sce_graph* graph, double k, double gamma,
                           int rescale, sce_game** out) {
  return Wrap([&] {
    Need(graph, "graph");
    Put(sce::CliqueGame(graph->v, k, gamma, rescale != 0), out);
  });
}

sce_status sce_enumhard_low_game(int ell, const int* S, int s_len,
                                 sce_game** out) {
  return Wrap([&] { Put(sce::EnumHardLowGame(ell, Ints(S, s_len)), out); });
}

sce_status sce_enumhard_high_game(int n, const int* S, int s_len,
                                  sce_game** out) {
  return Wrap([&] { Put(sce::EnumHardHighGame(n, Ints(S, s_len)), out); });
}

sce_status sce_pennies_game(int m, int shifted, sce_game** out) {
  return Wrap([&] { Put(sce::MatchingPennies(m, shifted != 0), out); });
}

sce_status sce_stitched_game(const sce_game* sos, const sce_game* enum_game,
                             double delta, double k, int normalize,
                             sce_game** out, double* scale) {
  return Wrap([&] {
    Need(sos, "sos game");
    Need(enum_game, "enum game");
    sce::StitchParams p;
    p.delta = delta;
    p.k = k;
    Put(sce::StitchedGame(sos->v, enum_game->v, p, normalize != 0, scale),
        out);
  });
}

sce_status sce_family_enumhard_low(int ell, int packed, double min_l1,
                                   sce_family** out) {
  return Wrap(
      [&] { Put(sce::EnumHardLowFamily(ell, packed != 0, min_l1), out); });
}

sce_status sce_family_enumhard_high(int n, sce_family** out) {
  return Wrap([&] { Put(sce::EnumHardHighFamily(n), out); });
}

sce_status sce_family_from_json(const char* json, sce_family** out) {
  return Wrap([&] {
    Put(sce::FamilyFromJson(sce::ParseJson(Str(json, "json"))), out);
  });
}

sce_status sce_family_to_json(const sce_family* family, char** out) {
  return Wrap([&] {
    Need(family, "family");
    PutJson(sce::FamilyToJson(family->v), out);
  });
}

sce_status sce_family_size(const sce_family* family, int* size) {
  return Wrap([&] {
    Need(family, "family");
    Need(size, "output");
    *size = family->v.size();
  });
}

sce_status sce_family_game(const sce_family* family, int index,
                           sce_game** out) {
  return Wrap([&] {
    Need(family, "family");
    sce::Check(index >= 0 && index < family->v.size(),
               sce::ErrorCode::kInvalidArgument, "family index out of range");
    Put(family->v.games[index], out);
  });
}

void sce_family_free(sce_family* family) { delete family; }

// Equilibria.

sce_status sce_ce_gap(const sce_game* game, const sce_dist* dist,
                      const char* phi, char** report) {
  return Wrap([&] {
    Need(game, "game");
    Need(dist, "dist");
    PutJson(sce::CeReportToJson(
                sce::CeGap(game->v, dist->v, Devs(phi, game->v.n()))),
            report);
  });
}

sce_status sce_ce_gap_dense(const sce_game* game, const sce_dense* dense,
                            const char* phi, char** report) {
  return Wrap([&] {
    Need(game, "game");
    Need(dense, "dense");
    PutJson(sce::CeReportToJson(
                sce::CeGap(game->v, dense->v, Devs(phi, game->v.n()))),
            report);
  });
}

sce_status sce_verify(const sce_game* game, const sce_dist* dist, double eps,
                      const char* phi, int* accept) {
  return Wrap([&] {
    Need(game, "game");
    Need(dist, "dist");
    Need(accept, "output");
    *accept = sce::VerificationOracle(game->v, dist->v, eps,
                                      Devs(phi, game->v.n())) ==
              sce::Verdict::kAccept;
  });
}

sce_status sce_verify_dense(const sce_game* game, const sce_dense* dense,
                            double eps, const char* phi, int* accept) {
  return Wrap([&] {
    Need(game, "game");
    Need(dense, "dense");
    Need(accept, "output");
    *accept = sce::VerificationOracle(game->v, dense->v, eps,
                                      Devs(phi, game->v.n())) ==
              sce::Verdict::kAccept;
  });
}

sce_status sce_exact_ce_lp(const sce_game* game, const char* phi,
                           int max_welfare, sce_dense** out) {
  return Wrap([&] {
    Need(game, "game");
    Put(sce::ExactCeLp(game->v, Devs(phi, game->v.n()),
                       max_welfare ? sce::CeObjective::kMaxWelfare
                                   : sce::CeObjective::kNone),
        out);
  });
}

sce_status sce_zero_sum_solve(const sce_game* game, char** out) {
  return Wrap([&] {
    Need(game, "game");
    PutJson(sce::ZeroSumToJson(sce::ZeroSumSolve(game->v)), out);
  });
}

sce_status sce_nash_gap(const sce_game* game, const double* x, const double* y,
                        int n, double* gap) {
  return Wrap([&] {
    Need(game, "game");
    Need(gap, "output");
    *gap = sce::NashGap(game->v, sce::MixedStrategy(Vec(x, n)),
                        sce::MixedStrategy(Vec(y, n)));
  });
}

sce_status sce_avg_to_nash(const sce_game* game, const sce_dist* dist,
                           double eps, char** out) {
  return Wrap([&] {
    Need(game, "game");
    Need(dist, "dist");
    PutJson(sce::BridgeToJson(sce::AvgToNashZeroSum(game->v, dist->v, eps)),
            out);
  });
}

sce_status sce_condition_to_block(const sce_dist* dist, const int* rows,
                                  int n_rows, const int* cols, int n_cols,
                                  sce_dist** out) {
  return Wrap([&] {
    Need(dist, "dist");
    Put(sce::ConditionToBlock(dist->v, Ints(rows, n_rows), Ints(cols, n_cols)),
        out);
  });
}

sce_status sce_brute_force(const sce_game* game, int T, int grid,
                           const char* phi, sce_dist** out, double* gap) {
  return Wrap([&] {
    Need(game, "game");
    Need(gap, "gap");
    sce::BruteForceResult r =
        sce::BruteForceMinGap(game->v, T, grid, Devs(phi, game->v.n()));
    *gap = r.gap;
    Put(std::move(r.dist), out);
  });
}

// Dynamics.

sce_status sce_self_play(const sce_game* game, const char* algo,
                         const char* phi, int T, uint64_t seed,
                         sce_runlog** out) {
  return Wrap([&] {
    Need(game, "game");
    const std::string a = Str(algo, "algo");
    sce::Algorithm alg;
    if (a == "mwu") {
      alg = sce::Algorithm::kMwu;
    } else if (a == "phi") {
      alg = sce::Algorithm::kPhi;
    } else {
      sce::Fail(sce::ErrorCode::kInvalidArgument,
                "unknown algorithm '" + a + "'");
    }
    const int n = game->v.n();
    auto mx = sce::MakeMinimizer(alg, n, Kind(phi), seed);
    auto my = sce::MakeMinimizer(alg, n, Kind(phi), seed);
    Put(sce::SelfPlay(game->v, *mx, *my, T, seed).log, out);
  });
}

sce_status sce_runlog_from_json(const char* json, sce_runlog** out) {
  return Wrap([&] {
    Put(sce::RunLogFromJson(sce::ParseJson(Str(json, "json"))), out);
  });
}

sce_status sce_runlog_to_json(const sce_runlog* log, char** out) {
  return Wrap([&] {
    Need(log, "run log");
    PutJson(sce::RunLogToJson(log->v), out);
  });
}

sce_status sce_runlog_csv(const sce_runlog* log, char** out) {
  return Wrap([&] {
    Need(log, "run log");
    Need(out, "output");
    *out = Dup(sce::RunLogCsv(log->v));
  });
}

sce_status sce_runlog_plot_csv(const sce_runlog* log, const char* phi,
                               char** out) {
  return Wrap([&] {
    Need(log, "run log");
    Need(out, "output");
    const int n = static_cast<int>(log->v.xs.front().size());
    *out = Dup(sce::PlotCsv(sce::PlotData(log->v, Devs(phi, n))));
  });
}

sce_status sce_runlog_dist(const sce_runlog* log, sce_dist** out) {
  return Wrap([&] {
    Need(log, "run log");
    Put(sce::RunLogDistribution(log->v), out);
  });
}

sce_status sce_phi_regret(const sce_runlog* log, const char* phi, int player,
                          double* regret) {
  return Wrap([&] {
    Need(log, "run log");
    Need(regret, "output");
    sce::Check(player == 0 || player == 1, sce::ErrorCode::kInvalidArgument,
               "player must be 0 or 1");
    const int n = static_cast<int>(log->v.xs.front().size());
    *regret = sce::PhiRegret(log->v, Devs(phi, n),
                             player == 0 ? sce::Player::kRow
                                         : sce::Player::kCol);
  });
}

sce_status sce_regret_certificate(const sce_game* game, const sce_runlog* log,
                                  const char* phi, char** report) {
  return Wrap([&] {
    Need(game, "game");
    Need(log, "run log");
    PutJson(sce::CeReportToJson(sce::RegretToCeCertificate(
                game->v, log->v, Devs(phi, game->v.n()))),
            report);
  });
}

void sce_runlog_free(sce_runlog* log) { delete log; }

// Pseudo-expectations.

sce_status sce_moment_from_json(const char* json, sce_moment** out) {
  return Wrap([&] {
    Put(sce::MomentFromJson(sce::ParseJson(Str(json, "json"))), out);
  });
}

sce_status sce_moment_to_json(const sce_moment* moment, char** out) {
  return Wrap([&] {
    Need(moment, "moment");
    PutJson(sce::MomentToJson(moment->v), out);
  });
}

sce_status sce_moment_from_points(int count, int m, const double* weights,
                                  const double* points, sce_moment** out) {
  return Wrap([&] {
    sce::Check(count >= 1 && m >= 1, sce::ErrorCode::kInvalidArgument,
               "count and m must be >= 1");
    Need(weights, "weights");
    Need(points, "points");
    std::vector<std::pair<double, sce::Vector>> pts;
    for (int i = 0; i < count; ++i) {
      pts.emplace_back(weights[i], Vec(points + i * m, m));
    }
    Put(sce::MomentFromDistribution(pts), out);
  });
}

sce_status sce_pseudo_lift(const sce_moment* mz, double k, int T, int n,
                           sce_moment** out) {
  return Wrap([&] {
    Need(mz, "moment");
    Put(sce::LiftIsToGame(mz->v, k, T, n), out);
  });
}

sce_status sce_pseudo_extend(const sce_moment* moment, int n,
                             sce_moment** out) {
  return Wrap([&] {
    Need(moment, "moment");
    Put(sce::ExtendToStitched(moment->v, n), out);
  });
}

sce_status sce_pseudo_check(const sce_moment* moment, const sce_game* game,
                            int T, const char* phi, int has_delta,
                            double delta, double tol, char** out) {
  return Wrap([&] {
    Need(moment, "moment");
    std::vector<sce::QuadraticConstraint> constraints;
    if (game != nullptr) {
      constraints = sce::PseudoCeConstraints(
          game->v, T, Devs(phi, game->v.n()),
          has_delta ? std::optional<double>(delta) : std::nullopt);
    }
    PutJson(sce::PseudoCheckToJson(sce::CheckPseudo(moment->v, constraints,
                                                    tol)),
            out);
  });
}

void sce_moment_free(sce_moment* moment) { delete moment; }

// Lemma validators.

sce_status sce_lemma_completeness(const sce_graph* graph, const int* S,
                                  int s_len, double gamma, int k, int T,
                                  char** verdict) {
  return Wrap([&] {
    Need(graph, "graph");
    PutJson(sce::VerdictToJson(sce::CheckCompletenessNe(
                graph->v, Ints(S, s_len), gamma, k, T)),
            verdict);
  });
}

sce_status sce_lemma_conditioning(const sce_graph* graph, double k,
                                  double gamma, const sce_dist* dist,
                                  double eps, const char* phi,
                                  char** verdict) {
  return Wrap([&] {
    Need(graph, "graph");
    Need(dist, "dist");
    PutJson(sce::VerdictToJson(sce::CheckConditioning(graph->v, k, gamma,
                                                      dist->v, eps, Kind(phi))),
            verdict);
  });
}

sce_status sce_lemma_probability_bounds(const sce_graph* graph, double k,
                                        double gamma, const sce_dist* dist,
                                        char** verdict) {
  return Wrap([&] {
    Need(graph, "graph");
    Need(dist, "dist");
    PutJson(sce::VerdictToJson(
                sce::CheckProbabilityBounds(graph->v, k, gamma, dist->v)),
            verdict);
  });
}

sce_status sce_lemma_extract_is(const sce_graph* graph, int k,
                                const sce_dist* dist, int t, char** verdict) {
  return Wrap([&] {
    Need(graph, "graph");
    Need(dist, "dist");
    sce::ExtractionResult r =
        sce::ExtractIndependentSet(graph->v, k, dist->v, t);
    sce::Json j = sce::VerdictToJson(r.verdict);
    j["set"] = r.set;
    PutJson(j, verdict);
  });
}

sce_status sce_lemma_stitch_dichotomy(const sce_game* stitched,
                                      const sce_dist* dist, double k,
                                      char** verdict) {
  return Wrap([&] {
    Need(stitched, "stitched game");
    Need(dist, "dist");
    PutJson(sce::VerdictToJson(
                sce::CheckStitchDichotomy(stitched->v, dist->v, k)),
            verdict);
  });
}

sce_status sce_lemma_stitch_restrict(const sce_game* stitched,
                                     const sce_game* enum_game,
                                     const sce_dist* dist, double eps_prime,
                                     double k, double delta,
                                     double soundness_constant,
                                     double drift_constant, const char* phi,
                                     char** verdict) {
  return Wrap([&] {
    Need(stitched, "stitched game");
    Need(enum_game, "enum game");
    Need(dist, "dist");
    sce::StitchCheckOptions options;
    if (soundness_constant > 0.0) options.soundness_constant = soundness_constant;
    if (drift_constant > 0.0) options.drift_constant = drift_constant;
    options.kind = Kind(phi);
    PutJson(sce::VerdictToJson(sce::RestrictAndVerifyStitched(
                stitched->v, enum_game->v, dist->v, eps_prime, k, delta,
                options)),
            verdict);
  });
}

sce_status sce_lemma_enumhard_marginals(const char* kind, const sce_game* game,
                                        const int* S, int s_len,
                                        const sce_dist* dist, double eps,
                                        double constant, char** verdict) {
  return Wrap([&] {
    Need(game, "game");
    Need(dist, "dist");
    PutJson(sce::VerdictToJson(sce::CheckEnumhardMarginals(
                sce::ParseMarginalKind(Str(kind, "kind")), game->v,
                Ints(S, s_len), dist->v, eps, constant)),
            verdict);
  });
}

sce_status sce_query_harness(const sce_family* family, const char* hidden_key,
                             double eps, const char* order, uint64_t seed,
                             const char* phi, char** out) {
  return Wrap([&] {
    Need(family, "family");
    const std::string o = order ? order : "random";
    sce::Check(o == "random" || o == "fixed", sce::ErrorCode::kInvalidArgument,
               "order must be 'random' or 'fixed'");
    const int hidden = family->v.IndexOf(Str(hidden_key, "hidden key"));
    PutJson(sce::QueryResultToJson(sce::QueryHarness(
                family->v, hidden, eps,
                o == "random" ? sce::QueryOrder::kRandom
                              : sce::QueryOrder::kFixed,
                seed, Kind(phi))),
            out);
  });
}

}  // extern "C"
