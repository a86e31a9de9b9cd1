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

// Degree-2 pseudo-expectations.
//
// A pseudo-expectation over variables z_1..z_m is stored as the symmetric
// (1+m) x (1+m) moment matrix M = E~[(1, z)(1, z)^T]. Positivity on squares
// of affine polynomials is equivalent to M being PSD. Constraints are single
// polynomials of degree <= 2 tested with multiplier h = 1.

#ifndef SPARSE_CE_CORE_PSEUDO_H_
#define SPARSE_CE_CORE_PSEUDO_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/deviations.h"
#include "core/game.h"

namespace sparse_ce {

inline constexpr double kSymmetryTolerance = 1e-12;
inline constexpr double kPseudoTolerance = 1e-9;

class MomentMatrix {
 public:
  // Labels default to z0, z1, ...
  explicit MomentMatrix(Matrix M, std::vector<std::string> labels = {});

  int m() const { return static_cast<int>(M_.rows()) - 1; }
  const Matrix& matrix() const { return M_; }
  const std::vector<std::string>& labels() const { return labels_; }
  double Normalization() const { return M_(0, 0); }

 private:
  Matrix M_;
  std::vector<std::string> labels_;
};

// sum_w w (1, z)(1, z)^T; the weights must sum to 1.
MomentMatrix MomentFromDistribution(
    const std::vector<std::pair<double, Vector>>& points,
    std::vector<std::string> labels = {});

enum class QuadraticSense { kEq, kGeq };

// constant + <linear, z> + z^T quadratic z  (== 0 | >= 0)
struct QuadraticConstraint {
  double constant = 0.0;
  Vector linear;
  Matrix quadratic;
  QuadraticSense sense = QuadraticSense::kGeq;
  std::string name;
};

double PseudoExpectation(const MomentMatrix& M, const QuadraticConstraint& c);

enum class PseudoStatus { kValid, kNormalization, kPositivity, kConstraint };

const char* PseudoStatusName(PseudoStatus status);

struct PseudoCheck {
  PseudoStatus status = PseudoStatus::kValid;
  double min_eigenvalue = 0.0;
  Vector eigenvector;         // set for kPositivity
  int constraint_index = -1;  // set for kConstraint
  double value = 0.0;         // normalization entry or constraint value

  bool valid() const { return status == PseudoStatus::kValid; }
};

// Normalization first, then positivity, then constraints in order.
PseudoCheck CheckPseudo(const MomentMatrix& M,
                        const std::vector<QuadraticConstraint>& constraints,
                        double tol = kPseudoTolerance);

// Variables (x^(1), ..., x^(T), y^(1), ..., y^(T)), block-major, m = 2nT.
inline int XVar(int n, int t, int i) { return t * n + i; }
inline int YVar(int n, int T, int t, int j) { return (T + t) * n + j; }

std::vector<std::string> SparseCeLabels(int n, int T);

// Simplex equalities (2T), nonnegativity (2nT), one incentive constraint per
// deviation and player (2|Phi|), and with delta the two utility floors.
std::vector<QuadraticConstraint> PseudoCeConstraints(
    const BimatrixGame& game, int T, const DeviationSet& devs,
    std::optional<double> delta);

// Moments over the n graph variables z mapped to the sparse-CE variables of
// the 2n x 2n graph game: every block is (z / k, 0_n).
MomentMatrix LiftIsToGame(const MomentMatrix& Mz, double k, int T, int n);

// Moments over 2nT variables with blocks of size n, zero-padded to blocks of
// size 2n.
MomentMatrix ExtendToStitched(const MomentMatrix& M, int n);

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_PSEUDO_H_
