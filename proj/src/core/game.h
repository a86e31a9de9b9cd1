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

#ifndef SPARSE_CE_CORE_GAME_H_
#define SPARSE_CE_CORE_GAME_H_

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "core/error.h"

namespace sparse_ce {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using IndexSet = std::vector<int>;

enum class Player { kRow, kCol };

inline constexpr double kClampTolerance = 1e-12;
inline constexpr double kSimplexTolerance = 1e-9;

// Sorts, deduplicates and range-checks a set of 0-based indices.
IndexSet NormalizeIndexSet(std::span<const int> indices, int n);

// A point of the probability simplex. Negative dust above -1e-12 is clamped
// to zero and the vector renormalized; anything else is rejected.
class MixedStrategy {
 public:
  explicit MixedStrategy(Vector probs);

  static MixedStrategy Uniform(int n);
  static MixedStrategy Pure(int n, int action);
  static MixedStrategy UniformOver(int n, std::span<const int> support);

  int size() const { return static_cast<int>(probs_.size()); }
  const Vector& probs() const { return probs_; }
  double operator[](int i) const { return probs_[i]; }

  // Total mass on the given indices.
  double MassOn(std::span<const int> indices) const;

 private:
  Vector probs_;
};

class BimatrixGame {
 public:
  BimatrixGame(Matrix row_payoffs, Matrix col_payoffs, std::string label = "");

  int n() const { return static_cast<int>(row_.rows()); }
  const Matrix& row_payoffs() const { return row_; }
  const Matrix& col_payoffs() const { return col_; }
  const Matrix& payoffs(Player p) const {
    return p == Player::kRow ? row_ : col_;
  }
  const std::string& label() const { return label_; }

  double MinPayoff() const;
  double MaxPayoff() const;

 private:
  Matrix row_;
  Matrix col_;
  std::string label_;
};

// mu = (1/T) sum_t x^(t) (x) y^(t).
class SparseCorrelated {
 public:
  SparseCorrelated(std::vector<MixedStrategy> xs,
                   std::vector<MixedStrategy> ys);

  // T identical copies of x (x) y.
  static SparseCorrelated Repeat(const MixedStrategy& x,
                                 const MixedStrategy& y, int T);

  int T() const { return static_cast<int>(xs_.size()); }
  int n() const { return xs_.front().size(); }
  const MixedStrategy& x(int t) const { return xs_[t]; }
  const MixedStrategy& y(int t) const { return ys_[t]; }
  const std::vector<MixedStrategy>& xs() const { return xs_; }
  const std::vector<MixedStrategy>& ys() const { return ys_; }
  const std::vector<MixedStrategy>& strategies(Player p) const {
    return p == Player::kRow ? xs_ : ys_;
  }

 private:
  std::vector<MixedStrategy> xs_;
  std::vector<MixedStrategy> ys_;
};

class DenseCorrelated {
 public:
  explicit DenseCorrelated(Matrix probs);

  int n() const { return static_cast<int>(probs_.rows()); }
  const Matrix& probs() const { return probs_; }

 private:
  Matrix probs_;
};

// Undirected graph with the unit-diagonal adjacency convention A[i,i] = 1.
class Graph {
 public:
  explicit Graph(int n);
  explicit Graph(Eigen::MatrixXi adjacency);

  int n() const { return static_cast<int>(adj_.rows()); }
  const Eigen::MatrixXi& adjacency() const { return adj_; }
  bool HasEdge(int i, int j) const { return i != j && adj_(i, j) != 0; }
  void AddEdge(int i, int j);
  int EdgeCount() const;

  bool IsIndependent(std::span<const int> set) const;
  bool IsClique(std::span<const int> set) const;
  // Complement graph; the diagonal stays 1.
  Graph Complement() const;

 private:
  Eigen::MatrixXi adj_;
};

double ExpectedUtility(const BimatrixGame& game, const MixedStrategy& x,
                       const MixedStrategy& y, Player player);

double SocialWelfare(const BimatrixGame& game, const SparseCorrelated& dist);
double SocialWelfare(const BimatrixGame& game, const DenseCorrelated& dist);

MixedStrategy MarginalAverage(const SparseCorrelated& dist, Player player);

DenseCorrelated Densify(const SparseCorrelated& dist);

BimatrixGame ShiftRescale(const BimatrixGame& game, double scale_row,
                          double shift_row, double scale_col,
                          double shift_col);

// True when R + C is constant within `tol`; the constant is written to
// `value` when non-null.
bool IsConstantSum(const BimatrixGame& game, double tol,
                   double* value = nullptr);

void CheckDimension(int expected, int actual, const char* what);

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_GAME_H_
