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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "core/constructions.h"
#include "core/equilibria.h"
#include "core/error.h"
#include "core/lp_solver.h"

namespace sparse_ce {
namespace {

Vector Vec(std::vector<double> v) {
  return Eigen::Map<Vector>(v.data(), static_cast<int>(v.size()));
}

BimatrixGame RandomGame(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix R(n, n), C(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) R(i, j) = u(rng);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) C(i, j) = u(rng);
  }
  return BimatrixGame(R, C);
}

MixedStrategy RandomStrategy(int n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Vector p(n);
  for (int i = 0; i < n; ++i) p[i] = e(rng);
  return MixedStrategy(p / p.sum());
}

TEST_CASE("lp: textbook maximization") {
  LinearProgram lp(2);
  lp.SetObjective(Vec({1, 1}));
  lp.AddRow(Vec({1, 2}), ConstraintSense::kLessEqual, 4);
  lp.AddRow(Vec({3, 1}), ConstraintSense::kLessEqual, 6);
  const LpSolution s = SolveLp(lp);
  CHECK(s.x[0] == doctest::Approx(1.6));
  CHECK(s.x[1] == doctest::Approx(1.2));
  CHECK(s.objective == doctest::Approx(2.8));
}

TEST_CASE("lp: equality and covering rows") {
  LinearProgram lp(2);
  lp.SetObjective(Vec({-1, -1}));
  lp.AddRow(Vec({1, 1}), ConstraintSense::kGreaterEqual, 2);
  lp.AddRow(Vec({1, -1}), ConstraintSense::kEqual, 0);
  const LpSolution s = SolveLp(lp);
  CHECK(s.x[0] == doctest::Approx(1.0));
  CHECK(s.x[1] == doctest::Approx(1.0));
}

TEST_CASE("lp: redundant equalities") {
  LinearProgram lp(2);
  lp.SetObjective(Vec({1, 0}));
  lp.AddRow(Vec({1, 1}), ConstraintSense::kEqual, 1);
  lp.AddRow(Vec({2, 2}), ConstraintSense::kEqual, 2);
  lp.AddRow(Vec({-1, -1}), ConstraintSense::kEqual, -1);
  CHECK(SolveLp(lp).objective == doctest::Approx(1.0));
}

TEST_CASE("lp: infeasible and unbounded programs fail") {
  LinearProgram infeasible(1);
  infeasible.SetObjective(Vec({1}));
  infeasible.AddRow(Vec({1}), ConstraintSense::kLessEqual, 1);
  infeasible.AddRow(Vec({1}), ConstraintSense::kGreaterEqual, 2);
  CHECK_THROWS_AS(SolveLp(infeasible), Error);
  LinearProgram unbounded(2);
  unbounded.SetObjective(Vec({1, 0}));
  unbounded.AddRow(Vec({1, -1}), ConstraintSense::kLessEqual, 1);
  CHECK_THROWS_AS(SolveLp(unbounded), Error);
}

TEST_CASE("ce gap of a pure profile in matching pennies") {
  const BimatrixGame game = MatchingPennies(2, false);
  const SparseCorrelated pure = SparseCorrelated::Repeat(
      MixedStrategy::Pure(2, 0), MixedStrategy::Pure(2, 0), 1);
  const CEReport r =
      CeGap(game, pure, DeviationSet::Enumerate(DeviationKind::kSwap, 2));
  CHECK(r.gap_row == doctest::Approx(0.0));
  CHECK(r.gap_col == doctest::Approx(1.0));
  CHECK(r.worst_dev_col.map()[0] == 1);
  CHECK(NashGap(game, pure.x(0), pure.y(0)) == doctest::Approx(1.0));
  const SparseCorrelated uniform = SparseCorrelated::Repeat(
      MixedStrategy::Uniform(2), MixedStrategy::Uniform(2), 2);
  const DeviationSet swap = DeviationSet::Enumerate(DeviationKind::kSwap, 2);
  CHECK(CeGap(game, uniform, swap).epsilon_star == doctest::Approx(0.0));
  CHECK(VerificationOracle(game, uniform, 0.0, swap) == Verdict::kAccept);
  CHECK(VerificationOracle(game, pure, 0.99, swap) == Verdict::kReject);
}

TEST_CASE("sparse and dense gaps agree") {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 20; ++s) {
    const int n = 2 + s % 4;
    const BimatrixGame game = RandomGame(n, 40 + s);
    std::vector<MixedStrategy> xs, ys;
    for (int t = 0; t < 3; ++t) {
      xs.push_back(RandomStrategy(n, rng));
      ys.push_back(RandomStrategy(n, rng));
    }
    const SparseCorrelated d(xs, ys);
    for (DeviationKind kind : {DeviationKind::kExternal, DeviationKind::kPhi,
                               DeviationKind::kSwap}) {
      const DeviationSet devs = DeviationSet::Enumerate(kind, n);
      const CEReport a = CeGap(game, d, devs);
      const CEReport b = CeGap(game, Densify(d), devs);
      CHECK(a.gap_row == doctest::Approx(b.gap_row).epsilon(1e-12));
      CHECK(a.gap_col == doctest::Approx(b.gap_col).epsilon(1e-12));
      CHECK(a.welfare == doctest::Approx(b.welfare).epsilon(1e-12));
    }
  }
}

TEST_CASE("exact lp finds the welfare-optimal correlated equilibrium") {
  // Chicken: (6,6) (2,7) / (7,2) (0,0), scaled by 1/7. The optimum puts 1/2
  // on (0,0) and 1/4 on each off-diagonal cell, welfare 10.5 / 7.
  Matrix R(2, 2), C(2, 2);
  R << 6, 2, 7, 0;
  C << 6, 7, 2, 0;
  const BimatrixGame game(R / 7.0, C / 7.0);
  const DeviationSet swap = DeviationSet::Enumerate(DeviationKind::kSwap, 2);
  const DenseCorrelated ce = ExactCeLp(game, swap, CeObjective::kMaxWelfare);
  CHECK(ce.probs()(0, 0) == doctest::Approx(0.5));
  CHECK(ce.probs()(0, 1) == doctest::Approx(0.25));
  CHECK(ce.probs()(1, 0) == doctest::Approx(0.25));
  CHECK(ce.probs()(1, 1) == doctest::Approx(0.0));
  CHECK(SocialWelfare(game, ce) == doctest::Approx(1.5));
  CHECK(VerificationOracle(game, ce, 1e-9, swap) == Verdict::kAccept);
}

TEST_CASE("exact lp on a dominance-solvable game") {
  Matrix R(2, 2);
  R << 3, 0, 5, 1;
  const BimatrixGame game(R / 5.0, R.transpose() / 5.0);
  const DenseCorrelated ce =
      ExactCeLp(game, DeviationSet::Enumerate(DeviationKind::kPhi, 2),
                CeObjective::kMaxWelfare);
  CHECK(ce.probs()(1, 1) == doctest::Approx(1.0));
}

TEST_CASE("zero-sum solve") {
  Matrix R(3, 3);
  R << 0, -1, 1, 1, 0, -1, -1, 1, 0;
  const ZeroSumSolution s = ZeroSumSolve(BimatrixGame(R, -R));
  CHECK(s.value == doctest::Approx(0.0));
  for (int i = 0; i < 3; ++i) {
    CHECK(s.x[i] == doctest::Approx(1.0 / 3.0));
    CHECK(s.y[i] == doctest::Approx(1.0 / 3.0));
  }
  const ZeroSumSolution p = ZeroSumSolve(MatchingPennies(4, true));
  CHECK(p.value == doctest::Approx(0.5));
  CHECK_THROWS_AS(ZeroSumSolve(BimatrixGame(R, R)), Error);
}

TEST_CASE("conditioning and embedding round-trip") {
  std::mt19937_64 rng(9);
  std::vector<MixedStrategy> xs, ys;
  for (int t = 0; t < 2; ++t) {
    xs.push_back(RandomStrategy(2, rng));
    ys.push_back(RandomStrategy(2, rng));
  }
  const SparseCorrelated block(xs, ys);
  const std::vector<int> rows = {1, 3};
  const std::vector<int> cols = {0, 2};
  const SparseCorrelated big = EmbedBlock(block, rows, cols, 4);
  CHECK(big.n() == 4);
  CHECK(big.x(0)[0] == 0.0);
  CHECK(big.x(0)[3] == doctest::Approx(xs[0][1]));
  const SparseCorrelated back = ConditionToBlock(big, rows, cols);
  for (int t = 0; t < 2; ++t) {
    CHECK((back.x(t).probs() - xs[t].probs()).norm() < 1e-15);
    CHECK((back.y(t).probs() - ys[t].probs()).norm() < 1e-15);
  }
}

TEST_CASE("simplex grid and brute force") {
  const std::vector<Vector> grid = SimplexGrid(3, 2);
  REQUIRE(grid.size() == 6);
  CHECK((grid.front() - Vec({0, 0, 1})).norm() == 0.0);
  CHECK((grid.back() - Vec({1, 0, 0})).norm() == 0.0);
  const BruteForceResult r =
      BruteForceMinGap(MatchingPennies(2, false), 1, 2,
                       DeviationSet::Enumerate(DeviationKind::kSwap, 2));
  CHECK(r.profiles == 9);
  CHECK(r.gap == doctest::Approx(0.0));
  CHECK(r.dist.x(0)[0] == doctest::Approx(0.5));
}

}  // namespace
}  // namespace sparse_ce
