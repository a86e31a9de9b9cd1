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

#include "core/dynamics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace sparse_ce {
namespace {

constexpr int kPowerIterations = 200000;

double FixedPointResidual(const Matrix& M, const Vector& q) {
  return (M * q - q).lpNorm<1>();
}

Vector ClampToSimplex(const Vector& v) {
  Vector q = v.cwiseMax(0.0);
  const double s = q.sum();
  if (!(s > 0.0)) return Vector::Constant(v.size(), 1.0 / v.size());
  return q / s;
}

}  // namespace

MwuExternal::MwuExternal(int n, uint64_t seed) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "minimizer needs n >= 1");
  // A seeded prior in [0, 1) breaks ties between symmetric actions; it is
  // worth less than one round of feedback.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  cumulative_.resize(n);
  for (int i = 0; i < n; ++i) cumulative_[i] = unif(rng);
}

Vector MwuExternal::Weights() const {
  const int n = this->n();
  const double eta = std::sqrt(std::log(static_cast<double>(n)) /
                               std::max(rounds_, 1));
  const Vector z = eta * cumulative_.array();
  const double zmax = z.maxCoeff();
  Vector w = (z.array() - zmax).exp();
  return w / w.sum();
}

MixedStrategy MwuExternal::Recommend() { return MixedStrategy(Weights()); }

void MwuExternal::Observe(const Vector& u) {
  CheckDimension(n(), static_cast<int>(u.size()), "utility vector");
  cumulative_ += u;
  ++rounds_;
}

PhiRegretMinimizer::PhiRegretMinimizer(DeviationSet devs, uint64_t seed)
    : devs_(std::move(devs)), experts_(devs_.size(), seed) {
  Check(devs_.size() >= 1, ErrorCode::kInvalidArgument, "empty deviation set");
}

MixedStrategy PhiRegretMinimizer::Recommend() {
  const int n = this->n();
  const Vector w = experts_.Weights();
  Matrix M = Matrix::Zero(n, n);
  for (int e = 0; e < devs_.size(); ++e) {
    const auto& map = devs_[e].map();
    for (int j = 0; j < n; ++j) M(map[j], j) += w[e];
  }
  last_ = StationaryDistribution(M);
  return MixedStrategy(last_);
}

void PhiRegretMinimizer::Observe(const Vector& u) {
  CheckDimension(n(), static_cast<int>(u.size()), "utility vector");
  if (last_.size() == 0) Recommend();
  Vector rewards(devs_.size());
  for (int e = 0; e < devs_.size(); ++e) {
    const auto& map = devs_[e].map();
    double r = 0.0;
    for (int j = 0; j < n(); ++j) r += last_[j] * u[map[j]];
    rewards[e] = r;
  }
  experts_.Observe(rewards);
  last_.resize(0);
}

std::unique_ptr<Minimizer> MakeMinimizer(Algorithm algo, int n,
                                         DeviationKind kind, uint64_t seed) {
  if (algo == Algorithm::kMwu) return std::make_unique<MwuExternal>(n, seed);
  return std::make_unique<PhiRegretMinimizer>(DeviationSet::Enumerate(kind, n),
                                              seed);
}

Vector StationaryDistribution(const Matrix& M) {
  const int n = static_cast<int>(M.rows());
  Check(M.cols() == n && n >= 1, ErrorCode::kDimensionMismatch,
        "stationary distribution needs a square matrix");
  Matrix A(n + 1, n);
  A.topRows(n) = M - Matrix::Identity(n, n);
  A.row(n).setOnes();
  Vector b = Vector::Zero(n + 1);
  b[n] = 1.0;
  Vector q = ClampToSimplex(A.completeOrthogonalDecomposition().solve(b));
  if (FixedPointResidual(M, q) <= kFixedPointTolerance) return q;

  // The lazy chain (M + I)/2 has the same fixed points and is aperiodic.
  const Matrix L = 0.5 * (M + Matrix::Identity(n, n));
  for (int it = 0; it < kPowerIterations; ++it) {
    q = L * q;
    if (it % 64 == 0) {
      q /= q.sum();
      if (FixedPointResidual(M, q) <= kFixedPointTolerance) break;
    }
  }
  q = ClampToSimplex(q);
  Check(FixedPointResidual(M, q) <= kFixedPointTolerance,
        ErrorCode::kSolverFailure, "fixed point iteration did not converge");
  return q;
}

SelfPlayResult SelfPlay(const BimatrixGame& game, Minimizer& mx, Minimizer& my,
                        int T, uint64_t seed) {
  Check(T >= 1, ErrorCode::kInvalidArgument, "self play needs T >= 1");
  CheckDimension(game.n(), mx.n(), "row minimizer");
  CheckDimension(game.n(), my.n(), "column minimizer");
  RunLog log;
  log.T = T;
  log.seed = seed;
  std::vector<MixedStrategy> xs, ys;
  const Matrix W = game.row_payoffs() + game.col_payoffs();
  for (int t = 0; t < T; ++t) {
    MixedStrategy x = mx.Recommend();
    MixedStrategy y = my.Recommend();
    Vector ux = game.row_payoffs() * y.probs();
    Vector uy = game.col_payoffs().transpose() * x.probs();
    mx.Observe(ux);
    my.Observe(uy);
    log.xs.push_back(x.probs());
    log.ys.push_back(y.probs());
    log.ux.push_back(std::move(ux));
    log.uy.push_back(std::move(uy));
    log.welfare.push_back(x.probs().dot(W * y.probs()));
    xs.push_back(std::move(x));
    ys.push_back(std::move(y));
  }
  return SelfPlayResult{SparseCorrelated(std::move(xs), std::move(ys)),
                        std::move(log)};
}

SparseCorrelated RunLogDistribution(const RunLog& log) {
  std::vector<MixedStrategy> xs, ys;
  for (int t = 0; t < log.T; ++t) {
    xs.emplace_back(log.xs[t]);
    ys.emplace_back(log.ys[t]);
  }
  return SparseCorrelated(std::move(xs), std::move(ys));
}

double PhiRegret(const RunLog& log, const DeviationSet& devs, Player player) {
  const auto& ps = player == Player::kRow ? log.xs : log.ys;
  const auto& us = player == Player::kRow ? log.ux : log.uy;
  double best = -std::numeric_limits<double>::infinity();
  for (const Deviation& phi : devs.devs()) {
    double total = 0.0;
    for (int t = 0; t < log.T; ++t) {
      total += phi.Apply(ps[t]).dot(us[t]) - ps[t].dot(us[t]);
    }
    best = std::max(best, total);
  }
  return best;
}

CEReport RegretToCeCertificate(const BimatrixGame& game, const RunLog& log,
                               const DeviationSet& devs) {
  Check(log.T >= 1 && static_cast<int>(log.xs.size()) == log.T &&
            static_cast<int>(log.ys.size()) == log.T &&
            static_cast<int>(log.ux.size()) == log.T &&
            static_cast<int>(log.uy.size()) == log.T,
        ErrorCode::kInconsistent, "run log lengths disagree with T");
  for (int t = 0; t < log.T; ++t) {
    CheckDimension(game.n(), static_cast<int>(log.xs[t].size()), "run log");
    const double ex =
        (game.row_payoffs() * log.ys[t] - log.ux[t]).lpNorm<Eigen::Infinity>();
    const double ey = (game.col_payoffs().transpose() * log.xs[t] - log.uy[t])
                          .lpNorm<Eigen::Infinity>();
    Check(ex <= kCertificateTolerance && ey <= kCertificateTolerance,
          ErrorCode::kInconsistent,
          "feedback at t=" + std::to_string(t) + " does not match the game");
  }
  const CEReport report = CeGap(game, RunLogDistribution(log), devs);
  const double rr = PhiRegret(log, devs, Player::kRow);
  const double rc = PhiRegret(log, devs, Player::kCol);
  Check(std::abs(log.T * report.gap_row - rr) <= kCertificateTolerance &&
            std::abs(log.T * report.gap_col - rc) <= kCertificateTolerance,
        ErrorCode::kInconsistent, "regret and CE gap disagree");
  return report;
}

std::vector<PlotRow> PlotData(const RunLog& log, const DeviationSet& devs) {
  const int F = devs.size();
  std::vector<double> row(F, 0.0), col(F, 0.0);
  double welfare = 0.0;
  std::vector<PlotRow> out;
  for (int t = 0; t < log.T; ++t) {
    for (int e = 0; e < F; ++e) {
      const Deviation& phi = devs[e];
      row[e] += phi.Apply(log.xs[t]).dot(log.ux[t]) - log.xs[t].dot(log.ux[t]);
      col[e] += phi.Apply(log.ys[t]).dot(log.uy[t]) - log.ys[t].dot(log.uy[t]);
    }
    welfare += log.welfare[t];
    const double steps = t + 1;
    out.push_back(PlotRow{t + 1,
                          *std::max_element(row.begin(), row.end()) / steps,
                          *std::max_element(col.begin(), col.end()) / steps,
                          welfare / steps});
  }
  return out;
}

}  // namespace sparse_ce
