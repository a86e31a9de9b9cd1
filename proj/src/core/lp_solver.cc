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

#include "core/lp_solver.h"

#include <cmath>
#include <limits>
#include <utility>

namespace sparse_ce {
namespace {

using RowMajorMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kOptimalityTol = 1e-10;
constexpr double kRatioTieTol = 1e-12;
constexpr double kZeroTol = 1e-14;
constexpr double kHarrisTol = 1e-9;
constexpr int kBlandAfter = 200;
constexpr int kRefactorEvery = 50;

// Constraint rows first, objective row last; the last column is the RHS.
struct Tableau {
  RowMajorMatrix t;
  std::vector<int> basis;
  std::vector<int> origin;  // source row of each constraint row

  int rows() const { return static_cast<int>(t.rows()) - 1; }
  int cols() const { return static_cast<int>(t.cols()) - 1; }
  int rhs() const { return cols(); }

  void Pivot(int r, int c) {
    const double pivot = t(r, c);
    t.row(r) /= pivot;
    for (int i = 0; i < t.rows(); ++i) {
      if (i == r) continue;
      const double f = t(i, c);
      if (f != 0.0) t.row(i) -= f * t.row(r);
    }
    basis[r] = c;
    for (int i = 0; i < rows(); ++i) {
      if (t(i, rhs()) < 0.0 && t(i, rhs()) > -1e-9) t(i, rhs()) = 0.0;
    }
  }

  // Rebuilds the objective row for costs `c` (maximization) from the basis.
  void PriceOut(const Vector& c) {
    const int m = rows();
    t.row(m).setZero();
    for (int j = 0; j < cols(); ++j) t(m, j) = -c[j];
    for (int i = 0; i < m; ++i) {
      const double cb = c[basis[i]];
      if (cb != 0.0) t.row(m) += cb * t.row(i);
    }
  }

  // Recomputes B^-1 [A | b] from the initial tableau to shed rounding drift.
  // Leaves the tableau untouched if the basis looks singular.
  void Refactor(const RowMajorMatrix& initial, const Vector& c) {
    const int m = rows();
    Matrix A(m, initial.cols());
    for (int i = 0; i < m; ++i) A.row(i) = initial.row(origin[i]);
    Matrix B(m, m);
    for (int i = 0; i < m; ++i) B.col(i) = A.col(basis[i]);
    const Eigen::FullPivLU<Matrix> lu(B);
    if (lu.rank() < m) return;
    const Matrix X = lu.solve(A);
    if (!X.allFinite()) return;
    t.topRows(m) = X;
    for (int i = 0; i < m; ++i) {
      t.row(i) = (t.row(i).array().abs() < kZeroTol).select(0.0, t.row(i));
      t(i, basis[i]) = 1.0;
      if (t(i, rhs()) < 0.0 && t(i, rhs()) > -1e-9) t(i, rhs()) = 0.0;
    }
    PriceOut(c);
  }
};

// Dantzig pricing with the largest pivot among ratio ties. After a long run
// of degenerate pivots it falls back to Bland's rule, which cannot cycle.
void RunSimplex(Tableau& tab, const RowMajorMatrix& initial, const Vector& c,
                const std::vector<bool>& allowed, const LpOptions& options,
                int* pivots) {
  const int m = tab.rows();
  int degenerate = 0;
  int since_refactor = 0;
  while (true) {
    const bool bland = degenerate > kBlandAfter;
    int entering = -1;
    double most = -kOptimalityTol;
    for (int j = 0; j < tab.cols(); ++j) {
      if (!allowed[j] || tab.t(m, j) >= most) continue;
      entering = j;
      if (bland) break;
      most = tab.t(m, j);
    }
    if (entering < 0) {
      if (since_refactor == 0) return;
      // Confirm optimality on a fresh factorization.
      tab.Refactor(initial, c);
      since_refactor = 0;
      continue;
    }
    int leaving = -1;
    double best = std::numeric_limits<double>::infinity();
    if (bland) {
      for (int i = 0; i < m; ++i) {
        const double a = tab.t(i, entering);
        if (a <= options.pivot_tol) continue;
        const double ratio = std::max(tab.t(i, tab.rhs()), 0.0) / a;
        if (leaving < 0 || ratio < best - kRatioTieTol ||
            (std::abs(ratio - best) <= kRatioTieTol &&
             tab.basis[i] < tab.basis[leaving])) {
          best = leaving < 0 ? ratio : std::min(best, ratio);
          leaving = i;
        }
      }
    } else {
      // Harris: bound the step with slightly relaxed ratios, then take the
      // largest pivot whose exact ratio fits under that bound.
      double bound = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double a = tab.t(i, entering);
        if (a <= options.pivot_tol) continue;
        bound = std::min(bound, (std::max(tab.t(i, tab.rhs()), 0.0) +
                                 kHarrisTol) / a);
      }
      double largest = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = tab.t(i, entering);
        if (a <= options.pivot_tol) continue;
        const double ratio = std::max(tab.t(i, tab.rhs()), 0.0) / a;
        if (ratio <= bound && a > largest) {
          largest = a;
          best = ratio;
          leaving = i;
        }
      }
    }
    Check(leaving >= 0, ErrorCode::kSolverFailure, "linear program unbounded");
    degenerate = best <= kRatioTieTol ? degenerate + 1 : 0;
    tab.Pivot(leaving, entering);
    Check(++*pivots <= options.max_pivots, ErrorCode::kSolverFailure,
          "simplex pivot budget exhausted");
    if (++since_refactor >= kRefactorEvery) {
      tab.Refactor(initial, c);
      since_refactor = 0;
    }
  }
}

}  // namespace

LinearProgram::LinearProgram(int num_vars)
    : num_vars_(num_vars), objective_(Vector::Zero(num_vars)) {
  Check(num_vars >= 1, ErrorCode::kInvalidArgument, "LP needs variables");
}

void LinearProgram::SetObjective(const Vector& c) {
  CheckDimension(num_vars_, static_cast<int>(c.size()), "LP objective");
  objective_ = c;
}

void LinearProgram::AddRow(const Vector& coeffs, ConstraintSense sense,
                           double rhs) {
  CheckDimension(num_vars_, static_cast<int>(coeffs.size()), "LP row");
  rows_.push_back(coeffs);
  senses_.push_back(sense);
  rhs_.push_back(rhs);
}

LpSolution SolveLp(const LinearProgram& lp, const LpOptions& options) {
  const int m = lp.num_rows();
  const int nv = lp.num_vars();

  // Normalize to nonnegative right-hand sides.
  std::vector<Vector> rows = lp.rows();
  std::vector<ConstraintSense> senses = lp.senses();
  std::vector<double> b = lp.rhs();
  for (int i = 0; i < m; ++i) {
    if (b[i] < 0.0) {
      rows[i] = -rows[i];
      b[i] = -b[i];
      if (senses[i] == ConstraintSense::kLessEqual) {
        senses[i] = ConstraintSense::kGreaterEqual;
      } else if (senses[i] == ConstraintSense::kGreaterEqual) {
        senses[i] = ConstraintSense::kLessEqual;
      }
    }
  }

  int num_slack = 0;
  int num_art = 0;
  for (auto s : senses) {
    if (s != ConstraintSense::kEqual) ++num_slack;
    if (s != ConstraintSense::kLessEqual) ++num_art;
  }
  const int art_begin = nv + num_slack;
  const int ncols = art_begin + num_art;

  Tableau tab;
  tab.t = RowMajorMatrix::Zero(m + 1, ncols + 1);
  tab.basis.assign(m, -1);
  tab.origin.resize(m);
  for (int i = 0; i < m; ++i) tab.origin[i] = i;
  int slack = nv;
  int art = art_begin;
  for (int i = 0; i < m; ++i) {
    tab.t.row(i).head(nv) = rows[i].transpose();
    tab.t(i, ncols) = b[i];
    switch (senses[i]) {
      case ConstraintSense::kLessEqual:
        tab.t(i, slack) = 1.0;
        tab.basis[i] = slack++;
        break;
      case ConstraintSense::kGreaterEqual:
        tab.t(i, slack++) = -1.0;
        tab.t(i, art) = 1.0;
        tab.basis[i] = art++;
        break;
      case ConstraintSense::kEqual:
        tab.t(i, art) = 1.0;
        tab.basis[i] = art++;
        break;
    }
  }

  const RowMajorMatrix initial = tab.t.topRows(m);
  LpSolution solution;
  std::vector<bool> allowed(ncols, true);

  if (num_art > 0) {
    Vector phase1 = Vector::Zero(ncols);
    phase1.tail(num_art).setConstant(-1.0);
    tab.PriceOut(phase1);
    RunSimplex(tab, initial, phase1, allowed, options, &solution.pivots);
    double bmax = 1.0;
    for (double v : b) bmax = std::max(bmax, std::abs(v));
    Check(tab.t(m, ncols) >= -options.feasibility_tol * bmax,
          ErrorCode::kSolverFailure, "linear program infeasible");

    // Drive zero-level artificials out of the basis; drop redundant rows.
    std::vector<int> keep;
    for (int i = 0; i < m; ++i) {
      if (tab.basis[i] >= art_begin) {
        int col = -1;
        double largest = options.pivot_tol;
        for (int j = 0; j < art_begin; ++j) {
          if (std::abs(tab.t(i, j)) > largest) {
            largest = std::abs(tab.t(i, j));
            col = j;
          }
        }
        if (col < 0) continue;
        tab.Pivot(i, col);
        ++solution.pivots;
      }
      keep.push_back(i);
    }
    if (static_cast<int>(keep.size()) < m) {
      Tableau reduced;
      reduced.t = RowMajorMatrix::Zero(keep.size() + 1, ncols + 1);
      for (size_t r = 0; r < keep.size(); ++r) {
        reduced.t.row(r) = tab.t.row(keep[r]);
        reduced.basis.push_back(tab.basis[keep[r]]);
        reduced.origin.push_back(tab.origin[keep[r]]);
      }
      tab = std::move(reduced);
    }
    for (int j = art_begin; j < ncols; ++j) allowed[j] = false;
  }

  Vector phase2 = Vector::Zero(ncols);
  phase2.head(nv) = lp.objective();
  tab.PriceOut(phase2);
  RunSimplex(tab, initial, phase2, allowed, options, &solution.pivots);

  solution.x = Vector::Zero(nv);
  for (int i = 0; i < tab.rows(); ++i) {
    if (tab.basis[i] < nv) solution.x[tab.basis[i]] = tab.t(i, tab.rhs());
  }
  solution.objective = lp.objective().dot(solution.x);
  return solution;
}

}  // namespace sparse_ce
