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

#ifndef SPARSE_CE_CORE_EQUILIBRIA_H_
#define SPARSE_CE_CORE_EQUILIBRIA_H_

#include <vector>

#include "core/deviations.h"
#include "core/game.h"

namespace sparse_ce {

// Slack added to epsilon by the verification oracle.
inline constexpr double kOracleSlack = 1e-12;

// Largest gain either player can obtain by applying a deviation from the set
// to its recommendations. epsilon_star <= eps iff mu is an eps-CE w.r.t. the
// set.
struct CEReport {
  double gap_row = 0.0;
  double gap_col = 0.0;
  Deviation worst_dev_row = Deviation::Identity(1);
  Deviation worst_dev_col = Deviation::Identity(1);
  double welfare = 0.0;
  double epsilon_star = 0.0;
};

// gap_row = max_phi (1/T) sum_t <phi(x_t) - x_t, R y_t>; gap_col likewise
// with <x_t, C (phi(y_t) - y_t)>.
CEReport CeGap(const BimatrixGame& game, const SparseCorrelated& dist,
               const DeviationSet& devs);
// Dense analogue: max_phi sum_ij m_ij (R[phi(i), j] - R[i, j]).
CEReport CeGap(const BimatrixGame& game, const DenseCorrelated& dist,
               const DeviationSet& devs);

enum class Verdict { kAccept, kReject };

Verdict VerificationOracle(const BimatrixGame& game,
                           const SparseCorrelated& dist, double eps,
                           const DeviationSet& devs);
Verdict VerificationOracle(const BimatrixGame& game,
                           const DenseCorrelated& dist, double eps,
                           const DeviationSet& devs);

enum class CeObjective { kNone, kMaxWelfare };

// Exact CE via linear programming over the n^2 joint probabilities, one
// incentive constraint per non-identity deviation and player.
DenseCorrelated ExactCeLp(const BimatrixGame& game, const DeviationSet& devs,
                          CeObjective objective);

struct ZeroSumSolution {
  MixedStrategy x;
  MixedStrategy y;
  double value;  // row player's payoff
};

// Minimax strategies of a constant-sum game.
ZeroSumSolution ZeroSumSolve(const BimatrixGame& game);

// max(max_i <e_i - x, R y>, max_j <x, C (e_j - y)>).
double NashGap(const BimatrixGame& game, const MixedStrategy& x,
               const MixedStrategy& y);

struct ZeroSumBridge {
  MixedStrategy x_avg;
  MixedStrategy y_avg;
  double cce_gap;        // measured external-deviation gap of the input
  double certified_eps;  // 2 * cce_gap
  double nash_gap;       // measured Nash gap of the averages
  bool premise_met;      // cce_gap <= the caller's eps
};

// Marginal averages of a CCE of a constant-sum game form a Nash equilibrium
// with twice the gap.
ZeroSumBridge AvgToNashZeroSum(const BimatrixGame& game,
                               const SparseCorrelated& dist, double eps);

// Restricts every product to rows x cols and renormalizes; the result is
// re-indexed to 0..|rows|-1. rows and cols must have equal size.
SparseCorrelated ConditionToBlock(const SparseCorrelated& dist,
                                  std::span<const int> rows,
                                  std::span<const int> cols);

// Inverse embedding: places a block distribution back at `rows` x `cols`
// inside dimension n, with zeros elsewhere.
SparseCorrelated EmbedBlock(const SparseCorrelated& dist,
                            std::span<const int> rows,
                            std::span<const int> cols, int n);

// All points of the simplex with denominator `grid`, in lexicographic order
// of their integer numerators.
std::vector<Vector> SimplexGrid(int n, int grid);

struct BruteForceResult {
  SparseCorrelated dist;
  double gap;
  long long profiles;
};

inline constexpr int kBruteForceMaxN = 3;
inline constexpr int kBruteForceMaxT = 2;
inline constexpr int kBruteForceMaxGrid = 12;
// A candidate replaces the incumbent only when it is better by this much.
inline constexpr double kBruteForceTieTol = 1e-12;

// Exhaustive search over grid profiles (x^(1..T), y^(1..T)), with y^(T)
// varying fastest; returns the first profile minimizing epsilon_star.
BruteForceResult BruteForceMinGap(const BimatrixGame& game, int T, int grid,
                                  const DeviationSet& devs);

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_EQUILIBRIA_H_
