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

#include "core/pseudo.h"

#include <cmath>

namespace sparse_ce {
namespace {

std::vector<std::string> DefaultLabels(int m) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) out.push_back("z" + std::to_string(i));
  return out;
}

QuadraticConstraint Empty(int m, QuadraticSense sense, std::string name) {
  QuadraticConstraint c;
  c.linear = Vector::Zero(m);
  c.quadratic = Matrix::Zero(m, m);
  c.sense = sense;
  c.name = std::move(name);
  return c;
}

// Adds the bilinear form (1/T) sum_t x_t^T B y_t, split symmetrically.
void AddBilinear(QuadraticConstraint& c, const Matrix& B, int n, int T) {
  for (int t = 0; t < T; ++t) {
    const int xo = XVar(n, t, 0), yo = YVar(n, T, t, 0);
    c.quadratic.block(xo, yo, n, n) += B / (2.0 * T);
    c.quadratic.block(yo, xo, n, n) += B.transpose() / (2.0 * T);
  }
}

void CheckNormalized(const MomentMatrix& M) {
  Check(std::abs(M.Normalization() - 1.0) <= kSymmetryTolerance,
        ErrorCode::kInvalidArgument, "moment matrix is not normalized");
}

}  // namespace

MomentMatrix::MomentMatrix(Matrix M, std::vector<std::string> labels)
    : M_(std::move(M)), labels_(std::move(labels)) {
  Check(M_.rows() >= 1 && M_.rows() == M_.cols(), ErrorCode::kDimensionMismatch,
        "moment matrix must be square");
  Check(M_.allFinite(), ErrorCode::kInvalidArgument,
        "moment matrix has non-finite entries");
  Check((M_ - M_.transpose()).cwiseAbs().maxCoeff() <= kSymmetryTolerance,
        ErrorCode::kInvalidArgument, "moment matrix is not symmetric");
  if (labels_.empty()) labels_ = DefaultLabels(m());
  CheckDimension(m(), static_cast<int>(labels_.size()), "moment labels");
}

MomentMatrix MomentFromDistribution(
    const std::vector<std::pair<double, Vector>>& points,
    std::vector<std::string> labels) {
  Check(!points.empty(), ErrorCode::kInvalidArgument, "no support points");
  const int m = static_cast<int>(points.front().second.size());
  Matrix M = Matrix::Zero(m + 1, m + 1);
  double total = 0.0;
  for (const auto& [w, z] : points) {
    CheckDimension(m, static_cast<int>(z.size()), "support point");
    Vector v(m + 1);
    v[0] = 1.0;
    v.tail(m) = z;
    M += w * v * v.transpose();
    total += w;
  }
  Check(std::abs(total - 1.0) <= kSimplexTolerance,
        ErrorCode::kInvalidArgument,
        "weights sum to " + std::to_string(total));
  M = 0.5 * (M + M.transpose());
  M(0, 0) = 1.0;
  return MomentMatrix(std::move(M), std::move(labels));
}

double PseudoExpectation(const MomentMatrix& M, const QuadraticConstraint& c) {
  const int m = M.m();
  CheckDimension(m, static_cast<int>(c.linear.size()), "constraint linear");
  CheckDimension(m, static_cast<int>(c.quadratic.rows()),
                 "constraint quadratic");
  const Matrix& A = M.matrix();
  return c.constant * A(0, 0) + c.linear.dot(A.row(0).tail(m).transpose()) +
         (c.quadratic.array() * A.bottomRightCorner(m, m).array()).sum();
}

const char* PseudoStatusName(PseudoStatus status) {
  switch (status) {
    case PseudoStatus::kValid: return "valid";
    case PseudoStatus::kNormalization: return "normalization";
    case PseudoStatus::kPositivity: return "positivity";
    case PseudoStatus::kConstraint: return "constraint";
  }
  return "?";
}

PseudoCheck CheckPseudo(const MomentMatrix& M,
                        const std::vector<QuadraticConstraint>& constraints,
                        double tol) {
  PseudoCheck out;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(M.matrix());
  out.min_eigenvalue = eig.eigenvalues()[0];
  if (std::abs(M.Normalization() - 1.0) > tol) {
    out.status = PseudoStatus::kNormalization;
    out.value = M.Normalization();
    return out;
  }
  if (out.min_eigenvalue < -tol) {
    out.status = PseudoStatus::kPositivity;
    out.eigenvector = eig.eigenvectors().col(0);
    return out;
  }
  for (size_t i = 0; i < constraints.size(); ++i) {
    const double v = PseudoExpectation(M, constraints[i]);
    const bool ok = constraints[i].sense == QuadraticSense::kEq
                        ? std::abs(v) <= tol
                        : v >= -tol;
    if (!ok) {
      out.status = PseudoStatus::kConstraint;
      out.constraint_index = static_cast<int>(i);
      out.value = v;
      return out;
    }
  }
  return out;
}

std::vector<std::string> SparseCeLabels(int n, int T) {
  std::vector<std::string> out;
  for (const char* p : {"x", "y"}) {
    for (int t = 0; t < T; ++t) {
      for (int i = 0; i < n; ++i) {
        out.push_back(std::string(p) + std::to_string(t) + "_" +
                      std::to_string(i));
      }
    }
  }
  return out;
}

std::vector<QuadraticConstraint> PseudoCeConstraints(
    const BimatrixGame& game, int T, const DeviationSet& devs,
    std::optional<double> delta) {
  Check(T >= 1, ErrorCode::kInvalidArgument, "T must be >= 1");
  CheckDimension(game.n(), devs.n(), "deviation set");
  const int n = game.n();
  const int m = 2 * n * T;
  const Matrix& R = game.row_payoffs();
  const Matrix& C = game.col_payoffs();
  std::vector<QuadraticConstraint> out;

  for (int b = 0; b < 2 * T; ++b) {
    const bool is_x = b < T;
    const int t = is_x ? b : b - T;
    auto c = Empty(m, QuadraticSense::kEq,
                   std::string(is_x ? "simplex_x" : "simplex_y") +
                       std::to_string(t));
    c.constant = -1.0;
    c.linear.segment(b * n, n).setOnes();
    out.push_back(std::move(c));
  }
  for (int v = 0; v < m; ++v) {
    auto c = Empty(m, QuadraticSense::kGeq, "nonneg_" + std::to_string(v));
    c.linear[v] = 1.0;
    out.push_back(std::move(c));
  }
  for (const Deviation& phi : devs.devs()) {
    const auto& map = phi.map();
    Matrix B(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) B(i, j) = R(i, j) - R(map[i], j);
    }
    auto c = Empty(m, QuadraticSense::kGeq, "ce_row:" + phi.ToString());
    AddBilinear(c, B, n, T);
    out.push_back(std::move(c));
  }
  for (const Deviation& phi : devs.devs()) {
    const auto& map = phi.map();
    Matrix B(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) B(i, j) = C(i, j) - C(i, map[j]);
    }
    auto c = Empty(m, QuadraticSense::kGeq, "ce_col:" + phi.ToString());
    AddBilinear(c, B, n, T);
    out.push_back(std::move(c));
  }
  if (delta.has_value()) {
    auto r = Empty(m, QuadraticSense::kGeq, "floor_row");
    r.constant = -*delta;
    AddBilinear(r, R, n, T);
    out.push_back(std::move(r));
    auto c = Empty(m, QuadraticSense::kGeq, "floor_col");
    c.constant = -*delta;
    AddBilinear(c, C, n, T);
    out.push_back(std::move(c));
  }
  return out;
}

MomentMatrix LiftIsToGame(const MomentMatrix& Mz, double k, int T, int n) {
  CheckDimension(n, Mz.m(), "graph moment matrix");
  CheckNormalized(Mz);
  Check(k > 0.0 && T >= 1, ErrorCode::kInvalidArgument,
        "lifting needs k > 0 and T >= 1");
  const int g = 2 * n;
  const int m = 2 * g * T;
  Matrix L = Matrix::Zero(m + 1, n + 1);
  L(0, 0) = 1.0;
  for (int b = 0; b < 2 * T; ++b) {
    for (int i = 0; i < n; ++i) L(1 + b * g + i, 1 + i) = 1.0 / k;
  }
  Matrix M = L * Mz.matrix() * L.transpose();
  M = 0.5 * (M + M.transpose());
  return MomentMatrix(std::move(M), SparseCeLabels(g, T));
}

MomentMatrix ExtendToStitched(const MomentMatrix& M, int n) {
  Check(n >= 1 && M.m() % (2 * n) == 0 && M.m() > 0,
        ErrorCode::kDimensionMismatch,
        "moment matrix size is not a multiple of 2n");
  const int T = M.m() / (2 * n);
  const int m2 = 4 * n * T;
  Matrix E = Matrix::Zero(m2 + 1, M.m() + 1);
  E(0, 0) = 1.0;
  for (int b = 0; b < 2 * T; ++b) {
    for (int i = 0; i < n; ++i) E(1 + b * 2 * n + i, 1 + b * n + i) = 1.0;
  }
  Matrix out = E * M.matrix() * E.transpose();
  return MomentMatrix(std::move(out), SparseCeLabels(2 * n, T));
}

}  // namespace sparse_ce
