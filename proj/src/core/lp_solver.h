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

// Dense two-phase primal simplex with Bland's anti-cycling rule.
//
//   maximize    c^T x
//   subject to  A_i x  (<= | = | >=)  b_i   for every row i
//               x >= 0
//
// Pivoting is fully deterministic, so identical inputs give bit-identical
// solutions.

#ifndef SPARSE_CE_CORE_LP_SOLVER_H_
#define SPARSE_CE_CORE_LP_SOLVER_H_

#include <vector>

#include "core/game.h"

namespace sparse_ce {

enum class ConstraintSense { kLessEqual, kEqual, kGreaterEqual };

class LinearProgram {
 public:
  explicit LinearProgram(int num_vars);

  int num_vars() const { return num_vars_; }
  int num_rows() const { return static_cast<int>(rhs_.size()); }

  void SetObjective(const Vector& c);
  void AddRow(const Vector& coeffs, ConstraintSense sense, double rhs);

  const Vector& objective() const { return objective_; }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<ConstraintSense>& senses() const { return senses_; }
  const std::vector<double>& rhs() const { return rhs_; }

 private:
  int num_vars_;
  Vector objective_;
  std::vector<Vector> rows_;
  std::vector<ConstraintSense> senses_;
  std::vector<double> rhs_;
};

struct LpSolution {
  Vector x;
  double objective = 0.0;
  int pivots = 0;
};

struct LpOptions {
  double feasibility_tol = 1e-9;
  double pivot_tol = 1e-9;
  int max_pivots = 2'000'000;
};

// Throws Error(kSolverFailure) when the program is infeasible, unbounded, or
// exceeds the pivot budget.
LpSolution SolveLp(const LinearProgram& lp, const LpOptions& options = {});

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_LP_SOLVER_H_
