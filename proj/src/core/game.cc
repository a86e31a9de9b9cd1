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

#include "core/game.h"

#include <algorithm>
#include <cmath>
#include <utility>

namespace sparse_ce {

void CheckDimension(int expected, int actual, const char* what) {
  if (expected != actual) {
    Fail(ErrorCode::kDimensionMismatch,
         std::string(what) + ": expected dimension " +
             std::to_string(expected) + ", got " + std::to_string(actual));
  }
}

IndexSet NormalizeIndexSet(std::span<const int> indices, int n) {
  IndexSet out(indices.begin(), indices.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (int i : out) {
    Check(i >= 0 && i < n, ErrorCode::kInvalidArgument,
          "index " + std::to_string(i) + " out of range [0, " +
              std::to_string(n) + ")");
  }
  return out;
}

MixedStrategy::MixedStrategy(Vector probs) : probs_(std::move(probs)) {
  Check(probs_.size() >= 1, ErrorCode::kInvalidArgument,
        "mixed strategy must have at least one action");
  for (Eigen::Index i = 0; i < probs_.size(); ++i) {
    double p = probs_[i];
    Check(std::isfinite(p), ErrorCode::kInvalidArgument,
          "mixed strategy has a non-finite entry");
    Check(p >= -kClampTolerance, ErrorCode::kInvalidArgument,
          "mixed strategy has negative entry " + std::to_string(p));
    if (p < 0.0) probs_[i] = 0.0;
  }
  double total = probs_.sum();
  Check(std::abs(total - 1.0) <= kSimplexTolerance,
        ErrorCode::kInvalidArgument,
        "mixed strategy sums to " + std::to_string(total));
  if (total != 1.0) probs_ /= total;
}

MixedStrategy MixedStrategy::Uniform(int n) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "uniform strategy needs n >= 1");
  return MixedStrategy(Vector::Constant(n, 1.0 / n));
}

MixedStrategy MixedStrategy::Pure(int n, int action) {
  Check(action >= 0 && action < n, ErrorCode::kInvalidArgument,
        "pure action out of range");
  Vector p = Vector::Zero(n);
  p[action] = 1.0;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::UniformOver(int n, std::span<const int> support) {
  IndexSet s = NormalizeIndexSet(support, n);
  Check(!s.empty(), ErrorCode::kInvalidArgument, "empty support");
  Vector p = Vector::Zero(n);
  for (int i : s) p[i] = 1.0 / static_cast<double>(s.size());
  return MixedStrategy(std::move(p));
}

double MixedStrategy::MassOn(std::span<const int> indices) const {
  double mass = 0.0;
  for (int i : indices) mass += probs_[i];
  return mass;
}

BimatrixGame::BimatrixGame(Matrix row_payoffs, Matrix col_payoffs,
                           std::string label)
    : row_(std::move(row_payoffs)),
      col_(std::move(col_payoffs)),
      label_(std::move(label)) {
  Check(row_.rows() >= 1 && row_.rows() == row_.cols(),
        ErrorCode::kDimensionMismatch, "row payoff matrix must be square");
  Check(col_.rows() == row_.rows() && col_.cols() == row_.cols(),
        ErrorCode::kDimensionMismatch,
        "payoff matrices must share their dimension");
  Check(row_.allFinite() && col_.allFinite(), ErrorCode::kInvalidArgument,
        "payoffs must be finite");
}

double BimatrixGame::MinPayoff() const {
  return std::min(row_.minCoeff(), col_.minCoeff());
}

double BimatrixGame::MaxPayoff() const {
  return std::max(row_.maxCoeff(), col_.maxCoeff());
}

SparseCorrelated::SparseCorrelated(std::vector<MixedStrategy> xs,
                                   std::vector<MixedStrategy> ys)
    : xs_(std::move(xs)), ys_(std::move(ys)) {
  Check(!xs_.empty(), ErrorCode::kInvalidArgument,
        "sparse distribution needs T >= 1");
  CheckDimension(static_cast<int>(xs_.size()), static_cast<int>(ys_.size()),
                 "sparse distribution mixture count");
  const int n = xs_.front().size();
  for (size_t t = 0; t < xs_.size(); ++t) {
    CheckDimension(n, xs_[t].size(), "sparse distribution row strategy");
    CheckDimension(n, ys_[t].size(), "sparse distribution column strategy");
  }
}

SparseCorrelated SparseCorrelated::Repeat(const MixedStrategy& x,
                                          const MixedStrategy& y, int T) {
  Check(T >= 1, ErrorCode::kInvalidArgument, "T must be >= 1");
  return SparseCorrelated(std::vector<MixedStrategy>(T, x),
                          std::vector<MixedStrategy>(T, y));
}

DenseCorrelated::DenseCorrelated(Matrix probs) : probs_(std::move(probs)) {
  Check(probs_.rows() >= 1 && probs_.rows() == probs_.cols(),
        ErrorCode::kDimensionMismatch, "joint distribution must be square");
  Check(probs_.allFinite(), ErrorCode::kInvalidArgument,
        "joint distribution has a non-finite entry");
  Check(probs_.minCoeff() >= -kClampTolerance, ErrorCode::kInvalidArgument,
        "joint distribution has a negative entry");
  probs_ = probs_.cwiseMax(0.0);
  double total = probs_.sum();
  Check(std::abs(total - 1.0) <= kSimplexTolerance,
        ErrorCode::kInvalidArgument,
        "joint distribution sums to " + std::to_string(total));
  if (total != 1.0) probs_ /= total;
}

Graph::Graph(int n) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "graph needs n >= 1");
  adj_ = Eigen::MatrixXi::Identity(n, n);
}

Graph::Graph(Eigen::MatrixXi adjacency) : adj_(std::move(adjacency)) {
  Check(adj_.rows() >= 1 && adj_.rows() == adj_.cols(),
        ErrorCode::kDimensionMismatch, "adjacency matrix must be square");
  for (int i = 0; i < n(); ++i) {
    Check(adj_(i, i) == 1, ErrorCode::kInvalidArgument,
          "adjacency diagonal must be 1");
    for (int j = 0; j < n(); ++j) {
      Check(adj_(i, j) == 0 || adj_(i, j) == 1, ErrorCode::kInvalidArgument,
            "adjacency entries must be 0 or 1");
      Check(adj_(i, j) == adj_(j, i), ErrorCode::kInvalidArgument,
            "adjacency must be symmetric");
    }
  }
}

void Graph::AddEdge(int i, int j) {
  Check(i >= 0 && j >= 0 && i < n() && j < n(), ErrorCode::kInvalidArgument,
        "edge endpoint out of range");
  adj_(i, j) = 1;
  adj_(j, i) = 1;
}

int Graph::EdgeCount() const {
  return (adj_.sum() - n()) / 2;
}

bool Graph::IsIndependent(std::span<const int> set) const {
  for (size_t a = 0; a < set.size(); ++a) {
    for (size_t b = a + 1; b < set.size(); ++b) {
      if (HasEdge(set[a], set[b])) return false;
    }
  }
  return true;
}

bool Graph::IsClique(std::span<const int> set) const {
  for (size_t a = 0; a < set.size(); ++a) {
    for (size_t b = a + 1; b < set.size(); ++b) {
      if (set[a] != set[b] && !HasEdge(set[a], set[b])) return false;
    }
  }
  return true;
}

Graph Graph::Complement() const {
  Eigen::MatrixXi comp = Eigen::MatrixXi::Ones(n(), n()) - adj_;
  comp.diagonal().setOnes();
  return Graph(std::move(comp));
}

double ExpectedUtility(const BimatrixGame& game, const MixedStrategy& x,
                       const MixedStrategy& y, Player player) {
  CheckDimension(game.n(), x.size(), "row strategy");
  CheckDimension(game.n(), y.size(), "column strategy");
  return x.probs().dot(game.payoffs(player) * y.probs());
}

double SocialWelfare(const BimatrixGame& game, const SparseCorrelated& dist) {
  CheckDimension(game.n(), dist.n(), "distribution");
  const Matrix sum = game.row_payoffs() + game.col_payoffs();
  double total = 0.0;
  for (int t = 0; t < dist.T(); ++t) {
    total += dist.x(t).probs().dot(sum * dist.y(t).probs());
  }
  return total / dist.T();
}

double SocialWelfare(const BimatrixGame& game, const DenseCorrelated& dist) {
  CheckDimension(game.n(), dist.n(), "distribution");
  return dist.probs()
      .cwiseProduct(game.row_payoffs() + game.col_payoffs())
      .sum();
}

MixedStrategy MarginalAverage(const SparseCorrelated& dist, Player player) {
  const auto& strategies = dist.strategies(player);
  if (strategies.size() == 1) return strategies.front();
  Vector avg = Vector::Zero(dist.n());
  for (const auto& s : strategies) avg += s.probs();
  avg /= static_cast<double>(strategies.size());
  return MixedStrategy(std::move(avg));
}

DenseCorrelated Densify(const SparseCorrelated& dist) {
  Matrix m = Matrix::Zero(dist.n(), dist.n());
  for (int t = 0; t < dist.T(); ++t) {
    m.noalias() += dist.x(t).probs() * dist.y(t).probs().transpose();
  }
  m /= static_cast<double>(dist.T());
  return DenseCorrelated(std::move(m));
}

BimatrixGame ShiftRescale(const BimatrixGame& game, double scale_row,
                          double shift_row, double scale_col,
                          double shift_col) {
  Check(scale_row > 0.0 && scale_col > 0.0, ErrorCode::kInvalidArgument,
        "payoff scales must be positive");
  if (scale_row == 1.0 && shift_row == 0.0 && scale_col == 1.0 &&
      shift_col == 0.0) {
    return game;
  }
  Matrix r = (game.row_payoffs() * scale_row).array() + shift_row;
  Matrix c = (game.col_payoffs() * scale_col).array() + shift_col;
  return BimatrixGame(std::move(r), std::move(c), game.label());
}

bool IsConstantSum(const BimatrixGame& game, double tol, double* value) {
  const Matrix sum = game.row_payoffs() + game.col_payoffs();
  const double c = sum(0, 0);
  if ((sum.array() - c).abs().maxCoeff() > tol) return false;
  if (value != nullptr) *value = c;
  return true;
}

}  // namespace sparse_ce
