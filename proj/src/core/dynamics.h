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

// Full-information regret minimizers and self-play.
//
// The seed only sets a small initial prior on the cumulative utilities, so
// identical seeds reproduce identical trajectories.

#ifndef SPARSE_CE_CORE_DYNAMICS_H_
#define SPARSE_CE_CORE_DYNAMICS_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "core/deviations.h"
#include "core/equilibria.h"
#include "core/game.h"

namespace sparse_ce {

class Minimizer {
 public:
  virtual ~Minimizer() = default;
  virtual int n() const = 0;
  virtual MixedStrategy Recommend() = 0;
  // Utility vector of the round just played.
  virtual void Observe(const Vector& u) = 0;
};

// Exponential weights with the anytime rate eta_t = sqrt(ln n / max(t, 1)).
class MwuExternal : public Minimizer {
 public:
  MwuExternal(int n, uint64_t seed);

  int n() const override { return static_cast<int>(cumulative_.size()); }
  MixedStrategy Recommend() override;
  void Observe(const Vector& u) override;

  Vector Weights() const;

 private:
  Vector cumulative_;
  int rounds_ = 0;
};

// Experts over the deviation set. Each round plays a fixed point q of
// M = sum_phi w_phi M_phi; expert phi is paid <M_phi q, u>.
class PhiRegretMinimizer : public Minimizer {
 public:
  PhiRegretMinimizer(DeviationSet devs, uint64_t seed);

  int n() const override { return devs_.n(); }
  MixedStrategy Recommend() override;
  void Observe(const Vector& u) override;

  const DeviationSet& devs() const { return devs_; }

 private:
  DeviationSet devs_;
  MwuExternal experts_;
  Vector last_;
};

enum class Algorithm { kMwu, kPhi };

std::unique_ptr<Minimizer> MakeMinimizer(Algorithm algo, int n,
                                         DeviationKind kind, uint64_t seed);

inline constexpr double kFixedPointTolerance = 1e-9;

// q >= 0 with sum 1 and ||M q - q||_1 <= 1e-9 for a column-stochastic M.
// Minimum-norm least squares on [M - I; 1^T] q = [0; 1], with lazy power
// iteration as the fallback.
Vector StationaryDistribution(const Matrix& M);

struct RunLog {
  int T = 0;
  std::vector<Vector> xs;
  std::vector<Vector> ys;
  std::vector<Vector> ux;  // R y^(t)
  std::vector<Vector> uy;  // C^T x^(t)
  std::vector<double> welfare;
  uint64_t seed = 0;
};

struct SelfPlayResult {
  SparseCorrelated dist;
  RunLog log;
};

// Simultaneous play: both recommend, then x observes R y and y observes
// C^T x.
SelfPlayResult SelfPlay(const BimatrixGame& game, Minimizer& mx, Minimizer& my,
                        int T, uint64_t seed = 0);

SparseCorrelated RunLogDistribution(const RunLog& log);

// max_phi sum_t <phi(x_t) - x_t, u_t> (not divided by T).
double PhiRegret(const RunLog& log, const DeviationSet& devs, Player player);

inline constexpr double kCertificateTolerance = 1e-10;

// Recomputes the feedback from the game and checks T * gap = regret for both
// players; throws kInconsistent otherwise.
CEReport RegretToCeCertificate(const BimatrixGame& game, const RunLog& log,
                               const DeviationSet& devs);

struct PlotRow {
  int t;
  double regret_row;  // prefix regret / t
  double regret_col;
  double welfare;     // running mean
};

std::vector<PlotRow> PlotData(const RunLog& log, const DeviationSet& devs);

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_DYNAMICS_H_
