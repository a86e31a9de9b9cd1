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

#include "core/equilibria.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/lp_solver.h"

namespace sparse_ce {
namespace {

void CheckSetMatchesGame(const BimatrixGame& game, const DeviationSet& devs) {
  Check(devs.size() >= 1, ErrorCode::kInvalidArgument, "empty deviation set");
  CheckDimension(game.n(), devs.n(), "deviation set");
}

// Picks the first deviation attaining the maximum gain.
template <typename GainFn>
void ScanDeviations(const DeviationSet& devs, GainFn gain, double* best,
                    Deviation* worst) {
  *best = -std::numeric_limits<double>::infinity();
  for (const Deviation& phi : devs.devs()) {
    const double g = gain(phi);
    if (g > *best) {
      *best = g;
      *worst = phi;
    }
  }
}

}  // namespace

CEReport CeGap(const BimatrixGame& game, const SparseCorrelated& dist,
               const DeviationSet& devs) {
  CheckSetMatchesGame(game, devs);
  CheckDimension(game.n(), dist.n(), "distribution");
  const int n = game.n();
  const int T = dist.T();
  // G(i, a) = mean_t x_t[i] (u_t[a] - u_t[i]), so a map's gain is
  // sum_i G(i, phi(i)).
  Matrix gx = Matrix::Zero(n, n);
  Matrix gy = Matrix::Zero(n, n);
  for (int t = 0; t < T; ++t) {
    const Vector& x = dist.x(t).probs();
    const Vector& y = dist.y(t).probs();
    const Vector ux = game.row_payoffs() * y;
    const Vector uy = game.col_payoffs().transpose() * x;
    for (int i = 0; i < n; ++i) {
      if (x[i] != 0.0) {
        gx.row(i) += x[i] * (ux.transpose().array() - ux[i]).matrix();
      }
      if (y[i] != 0.0) {
        gy.row(i) += y[i] * (uy.transpose().array() - uy[i]).matrix();
      }
    }
  }
  gx /= T;
  gy /= T;
  CEReport report;
  ScanDeviations(
      devs,
      [&](const Deviation& phi) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += gx(i, phi.map()[i]);
        return total;
      },
      &report.gap_row, &report.worst_dev_row);
  ScanDeviations(
      devs,
      [&](const Deviation& phi) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += gy(i, phi.map()[i]);
        return total;
      },
      &report.gap_col, &report.worst_dev_col);
  report.welfare = SocialWelfare(game, dist);
  report.epsilon_star = std::max(report.gap_row, report.gap_col);
  return report;
}

CEReport CeGap(const BimatrixGame& game, const DenseCorrelated& dist,
               const DeviationSet& devs) {
  CheckSetMatchesGame(game, devs);
  CheckDimension(game.n(), dist.n(), "distribution");
  const int n = game.n();
  // P(i, a) = sum_j m_ij R[a, j];  Q(j, b) = sum_i m_ij C[i, b].
  const Matrix P = dist.probs() * game.row_payoffs().transpose();
  const Matrix Q = dist.probs().transpose() * game.col_payoffs();
  CEReport report;
  ScanDeviations(
      devs,
      [&](const Deviation& phi) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) total += P(i, phi.map()[i]) - P(i, i);
        return total;
      },
      &report.gap_row, &report.worst_dev_row);
  ScanDeviations(
      devs,
      [&](const Deviation& phi) {
        double total = 0.0;
        for (int j = 0; j < n; ++j) total += Q(j, phi.map()[j]) - Q(j, j);
        return total;
      },
      &report.gap_col, &report.worst_dev_col);
  report.welfare = SocialWelfare(game, dist);
  report.epsilon_star = std::max(report.gap_row, report.gap_col);
  return report;
}

Verdict VerificationOracle(const BimatrixGame& game,
                           const SparseCorrelated& dist, double eps,
                           const DeviationSet& devs) {
  Check(eps >= 0.0, ErrorCode::kInvalidArgument, "eps must be >= 0");
  return CeGap(game, dist, devs).epsilon_star <= eps + kOracleSlack
             ? Verdict::kAccept
             : Verdict::kReject;
}

Verdict VerificationOracle(const BimatrixGame& game,
                           const DenseCorrelated& dist, double eps,
                           const DeviationSet& devs) {
  Check(eps >= 0.0, ErrorCode::kInvalidArgument, "eps must be >= 0");
  return CeGap(game, dist, devs).epsilon_star <= eps + kOracleSlack
             ? Verdict::kAccept
             : Verdict::kReject;
}

DenseCorrelated ExactCeLp(const BimatrixGame& game, const DeviationSet& devs,
                          CeObjective objective) {
  CheckSetMatchesGame(game, devs);
  const int n = game.n();
  const Matrix& R = game.row_payoffs();
  const Matrix& C = game.col_payoffs();
  LinearProgram lp(n * n);
  if (objective == CeObjective::kMaxWelfare) {
    Vector c(n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) c[i * n + j] = R(i, j) + C(i, j);
    }
    lp.SetObjective(c);
  }
  lp.AddRow(Vector::Ones(n * n), ConstraintSense::kEqual, 1.0);
  // The constraint of a map is the sum of the single-action reroutes it
  // performs, so it is implied whenever all of those reroutes are in the set.
  std::vector<std::vector<bool>> reroute(n, std::vector<bool>(n, false));
  for (const Deviation& phi : devs.devs()) {
    int moved = -1, count = 0;
    for (int i = 0; i < n; ++i) {
      if (phi.map()[i] != i) {
        moved = i;
        ++count;
      }
    }
    if (count == 1) reroute[moved][phi.map()[moved]] = true;
  }
  for (const Deviation& phi : devs.devs()) {
    if (phi.IsIdentity()) continue;
    const auto& map = phi.map();
    int count = 0;
    bool implied = true;
    for (int i = 0; i < n; ++i) {
      if (map[i] == i) continue;
      ++count;
      implied = implied && reroute[i][map[i]];
    }
    if (count > 1 && implied) continue;
    Vector row(n * n), col(n * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        row[i * n + j] = R(map[i], j) - R(i, j);
        col[i * n + j] = C(i, map[j]) - C(i, j);
      }
    }
    lp.AddRow(row, ConstraintSense::kLessEqual, 0.0);
    lp.AddRow(col, ConstraintSense::kLessEqual, 0.0);
  }
  const LpSolution sol = SolveLp(lp);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = std::max(0.0, sol.x[i * n + j]);
  }
  const double total = m.sum();
  Check(total > 0.0, ErrorCode::kSolverFailure, "LP returned zero mass");
  m /= total;
  DenseCorrelated out(m);
  const double gap = CeGap(game, out, devs).epsilon_star;
  Check(gap <= 1e-9, ErrorCode::kSolverFailure,
        "LP solution violates incentive constraints by " + std::to_string(gap));
  return out;
}

ZeroSumSolution ZeroSumSolve(const BimatrixGame& game) {
  Check(IsConstantSum(game, 1e-9), ErrorCode::kNotConstantSum,
        "game is not constant-sum");
  const int n = game.n();
  // Positive shift so that the game value is strictly positive.
  const double shift = 1.0 - game.row_payoffs().minCoeff();
  const Matrix A = game.row_payoffs().array() + shift;

  // Row player: max v s.t. sum_i x_i A_ij >= v for all j, sum x = 1.
  LinearProgram row_lp(n + 1);
  Vector c = Vector::Zero(n + 1);
  c[n] = 1.0;
  row_lp.SetObjective(c);
  for (int j = 0; j < n; ++j) {
    Vector a(n + 1);
    a.head(n) = A.col(j);
    a[n] = -1.0;
    row_lp.AddRow(a, ConstraintSense::kGreaterEqual, 0.0);
  }
  Vector simplex = Vector::Ones(n + 1);
  simplex[n] = 0.0;
  row_lp.AddRow(simplex, ConstraintSense::kEqual, 1.0);
  const LpSolution rs = SolveLp(row_lp);

  // Column player: min w s.t. sum_j A_ij y_j <= w for all i, sum y = 1.
  LinearProgram col_lp(n + 1);
  c[n] = -1.0;
  col_lp.SetObjective(c);
  for (int i = 0; i < n; ++i) {
    Vector a(n + 1);
    a.head(n) = A.row(i).transpose();
    a[n] = -1.0;
    col_lp.AddRow(a, ConstraintSense::kLessEqual, 0.0);
  }
  col_lp.AddRow(simplex, ConstraintSense::kEqual, 1.0);
  const LpSolution cs = SolveLp(col_lp);

  auto to_strategy = [n](const Vector& v) {
    Vector p = v.head(n).cwiseMax(0.0);
    return MixedStrategy(p / p.sum());
  };
  ZeroSumSolution out{to_strategy(rs.x), to_strategy(cs.x), 0.0};
  out.value = ExpectedUtility(game, out.x, out.y, Player::kRow);
  const double gap = NashGap(game, out.x, out.y);
  Check(gap <= 1e-7, ErrorCode::kSolverFailure,
        "minimax pair has Nash gap " + std::to_string(gap));
  return out;
}

double NashGap(const BimatrixGame& game, const MixedStrategy& x,
               const MixedStrategy& y) {
  CheckDimension(game.n(), x.size(), "row strategy");
  CheckDimension(game.n(), y.size(), "column strategy");
  const Vector ux = game.row_payoffs() * y.probs();
  const Vector uy = game.col_payoffs().transpose() * x.probs();
  const double row = ux.maxCoeff() - x.probs().dot(ux);
  const double col = uy.maxCoeff() - y.probs().dot(uy);
  return std::max({0.0, row, col});
}

ZeroSumBridge AvgToNashZeroSum(const BimatrixGame& game,
                               const SparseCorrelated& dist, double eps) {
  Check(IsConstantSum(game, 1e-9), ErrorCode::kNotConstantSum,
        "game is not constant-sum");
  const DeviationSet ext = DeviationSet::Enumerate(DeviationKind::kExternal,
                                                   game.n());
  const double g = CeGap(game, dist, ext).epsilon_star;
  MixedStrategy x = MarginalAverage(dist, Player::kRow);
  MixedStrategy y = MarginalAverage(dist, Player::kCol);
  const double ng = NashGap(game, x, y);
  return ZeroSumBridge{std::move(x), std::move(y), g, 2.0 * g, ng,
                       g <= eps + kOracleSlack};
}

SparseCorrelated ConditionToBlock(const SparseCorrelated& dist,
                                  std::span<const int> rows,
                                  std::span<const int> cols) {
  const IndexSet r = NormalizeIndexSet(rows, dist.n());
  const IndexSet c = NormalizeIndexSet(cols, dist.n());
  Check(!r.empty() && r.size() == c.size(), ErrorCode::kDimensionMismatch,
        "block must be square and nonempty");
  const int m = static_cast<int>(r.size());
  std::vector<MixedStrategy> xs, ys;
  for (int t = 0; t < dist.T(); ++t) {
    Vector x(m), y(m);
    for (int i = 0; i < m; ++i) {
      x[i] = dist.x(t)[r[i]];
      y[i] = dist.y(t)[c[i]];
    }
    const double mx = x.sum(), my = y.sum();
    Check(mx >= kClampTolerance && my >= kClampTolerance,
          ErrorCode::kZeroMass,
          "zero block mass at t=" + std::to_string(t));
    xs.emplace_back(x / mx);
    ys.emplace_back(y / my);
  }
  return SparseCorrelated(std::move(xs), std::move(ys));
}

SparseCorrelated EmbedBlock(const SparseCorrelated& dist,
                            std::span<const int> rows,
                            std::span<const int> cols, int n) {
  const IndexSet r = NormalizeIndexSet(rows, n);
  const IndexSet c = NormalizeIndexSet(cols, n);
  CheckDimension(dist.n(), static_cast<int>(r.size()), "embedded rows");
  CheckDimension(dist.n(), static_cast<int>(c.size()), "embedded columns");
  std::vector<MixedStrategy> xs, ys;
  for (int t = 0; t < dist.T(); ++t) {
    Vector x = Vector::Zero(n), y = Vector::Zero(n);
    for (int i = 0; i < dist.n(); ++i) {
      x[r[i]] = dist.x(t)[i];
      y[c[i]] = dist.y(t)[i];
    }
    xs.emplace_back(x);
    ys.emplace_back(y);
  }
  return SparseCorrelated(std::move(xs), std::move(ys));
}

std::vector<Vector> SimplexGrid(int n, int grid) {
  Check(n >= 1 && grid >= 1, ErrorCode::kInvalidArgument,
        "grid needs n >= 1 and grid >= 1");
  std::vector<Vector> out;
  std::vector<int> counts(n, 0);
  // Lexicographic order over (c_0, ..., c_{n-2}); the last part absorbs the
  // remainder.
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == n - 1) {
      counts[pos] = remaining;
      Vector p(n);
      for (int i = 0; i < n; ++i) p[i] = static_cast<double>(counts[i]) / grid;
      out.push_back(p);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[pos] = c;
      self(self, pos + 1, remaining - c);
    }
  };
  recurse(recurse, 0, grid);
  return out;
}

BruteForceResult BruteForceMinGap(const BimatrixGame& game, int T, int grid,
                                  const DeviationSet& devs) {
  const int n = game.n();
  Check(n <= kBruteForceMaxN && T >= 1 && T <= kBruteForceMaxT &&
            grid >= 1 && grid <= kBruteForceMaxGrid,
        ErrorCode::kSizeLimit,
        "brute force limited to n <= 3, 1 <= T <= 2, 1 <= grid <= 12");
  CheckSetMatchesGame(game, devs);
  std::vector<MixedStrategy> points;
  for (const Vector& p : SimplexGrid(n, grid)) points.emplace_back(p);
  const int P = static_cast<int>(points.size());

  // Odometer over 2T indices: x^(1..T) then y^(1..T), last one fastest.
  std::vector<int> idx(2 * T, 0);
  auto build = [&] {
    std::vector<MixedStrategy> xs, ys;
    for (int t = 0; t < T; ++t) {
      xs.push_back(points[idx[t]]);
      ys.push_back(points[idx[T + t]]);
    }
    return SparseCorrelated(std::move(xs), std::move(ys));
  };
  BruteForceResult best{build(), std::numeric_limits<double>::infinity(), 0};
  while (true) {
    SparseCorrelated candidate = build();
    const double gap = CeGap(game, candidate, devs).epsilon_star;
    ++best.profiles;
    if (gap < best.gap - kBruteForceTieTol) {
      best.gap = gap;
      best.dist = std::move(candidate);
    }
    int pos = 2 * T - 1;
    while (pos >= 0 && idx[pos] == P - 1) idx[pos--] = 0;
    if (pos < 0) break;
    ++idx[pos];
  }
  return best;
}

}  // namespace sparse_ce
