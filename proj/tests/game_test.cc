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

#include <vector>

#include "core/deviations.h"
#include "core/error.h"
#include "core/game.h"

namespace sparse_ce {
namespace {

template <typename F>
ErrorCode CodeOf(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

Vector Vec(std::vector<double> v) {
  return Eigen::Map<Vector>(v.data(), static_cast<int>(v.size()));
}

TEST_CASE("mixed strategy clamps dust and rejects real negatives") {
  const MixedStrategy s(Vec({-1e-13, 1.0}));
  CHECK(s[0] == 0.0);
  CHECK(s[1] == doctest::Approx(1.0));
  CHECK(CodeOf([] { MixedStrategy(Vec({-0.1, 1.1})); }) ==
        ErrorCode::kInvalidArgument);
  CHECK(CodeOf([] { MixedStrategy(Vec({0.5, 0.4})); }) ==
        ErrorCode::kInvalidArgument);
  const MixedStrategy u = MixedStrategy::UniformOver(4, std::vector<int>{1, 3});
  CHECK(u.MassOn(std::vector<int>{1}) == doctest::Approx(0.5));
  CHECK(u[0] == 0.0);
}

TEST_CASE("expected utility and welfare") {
  Matrix R(2, 2), C(2, 2);
  R << 1, 2, 3, 4;
  C << 0, 1, 1, 0;
  const BimatrixGame game(R, C);
  const MixedStrategy x(Vec({0.5, 0.5}));
  const MixedStrategy y(Vec({0.25, 0.75}));
  // x^T R y = 0.5 (0.25 + 1.5) + 0.5 (0.75 + 3).
  CHECK(ExpectedUtility(game, x, y, Player::kRow) == doctest::Approx(2.75));
  CHECK(ExpectedUtility(game, x, y, Player::kCol) == doctest::Approx(0.5));
  const SparseCorrelated d = SparseCorrelated::Repeat(x, y, 3);
  CHECK(d.T() == 3);
  CHECK(SocialWelfare(game, d) == doctest::Approx(3.25));
  const DenseCorrelated dense = Densify(d);
  CHECK(dense.probs()(1, 1) == doctest::Approx(0.375));
  CHECK(SocialWelfare(game, dense) == doctest::Approx(3.25));
}

TEST_CASE("game validation") {
  CHECK(CodeOf([] { BimatrixGame(Matrix::Zero(2, 3), Matrix::Zero(2, 3)); }) ==
        ErrorCode::kDimensionMismatch);
  CHECK(CodeOf([] { BimatrixGame(Matrix::Zero(2, 2), Matrix::Zero(3, 3)); }) ==
        ErrorCode::kDimensionMismatch);
  Matrix R(2, 2);
  R << 1, -1, -1, 1;
  double value = 5.0;
  CHECK(IsConstantSum(BimatrixGame(R, -R), 1e-12, &value));
  CHECK(value == 0.0);
  CHECK_FALSE(IsConstantSum(BimatrixGame(R, R), 1e-12));
}

TEST_CASE("graph queries") {
  Graph g(4);
  g.AddEdge(0, 1);
  g.AddEdge(2, 3);
  CHECK(g.EdgeCount() == 2);
  CHECK(g.IsIndependent(std::vector<int>{0, 2}));
  CHECK_FALSE(g.IsIndependent(std::vector<int>{0, 1}));
  CHECK(g.IsClique(std::vector<int>{2, 3}));
  const Graph h = g.Complement();
  CHECK(h.EdgeCount() == 4);
  CHECK(h.adjacency()(0, 0) == 1);
  CHECK(h.IsClique(std::vector<int>{0, 2}));
  CHECK(CodeOf([&] { g.AddEdge(0, 4); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("index sets are sorted and deduplicated") {
  const IndexSet s = NormalizeIndexSet(std::vector<int>{3, 1, 3, 0}, 4);
  CHECK(s == IndexSet{0, 1, 3});
  CHECK(CodeOf([] { NormalizeIndexSet(std::vector<int>{4}, 4); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("deviation maps") {
  const Vector x = Vec({0.2, 0.3, 0.5});
  const Vector moved = Deviation::Internal(3, 0, 2).Apply(x);
  CHECK(moved[0] == 0.0);
  CHECK(moved[1] == doctest::Approx(0.3));
  CHECK(moved[2] == doctest::Approx(0.7));
  CHECK(Deviation::Threshold(4, 1, 3).map() == std::vector<int>{3, 3, 2, 3});
  CHECK(Deviation::External(3, 1).Apply(x)[1] == doctest::Approx(1.0));
  const Deviation d = Deviation::Explicit({2, 0, 0});
  const Vector via_matrix = d.AsStochasticMatrix() * x;
  CHECK((via_matrix - d.Apply(x)).norm() < 1e-15);
  CHECK(Deviation::Identity(3).IsIdentity());
  CHECK(Deviation::Internal(3, 1, 1).IsIdentity());
}

TEST_CASE("enumerated set sizes") {
  // External n+1, internal n(n-1)+1, threshold family n(n-1)+1 after
  // removing duplicates, its union with internal maps, and n^n.
  const int expected[4][5] = {{3, 3, 3, 3, 4},
                              {4, 7, 7, 10, 27},
                              {5, 13, 13, 21, 256},
                              {6, 21, 21, 36, 3125}};
  const DeviationKind kinds[5] = {DeviationKind::kExternal,
                                  DeviationKind::kInternal,
                                  DeviationKind::kPhiHat, DeviationKind::kPhi,
                                  DeviationKind::kSwap};
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 5; ++k) {
      const DeviationSet set = DeviationSet::Enumerate(kinds[k], n);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(set.size() == expected[n - 2][k]);
      CHECK(set[0].IsIdentity());
      for (int i = 1; i < set.size(); ++i) CHECK_FALSE(set[i].IsIdentity());
    }
  }
  CHECK(CodeOf([] { DeviationSet::Enumerate(DeviationKind::kSwap, 7); }) ==
        ErrorCode::kSizeLimit);
}

TEST_CASE("custom sets drop duplicates and prepend the identity") {
  const DeviationSet set = DeviationSet::FromDeviations(
      DeviationKind::kCustom,
      {Deviation::External(3, 0), Deviation::Explicit({0, 0, 0}),
       Deviation::Identity(3)},
      3);
  CHECK(set.size() == 2);
  CHECK(set.Contains(Deviation::External(3, 0)));
  CHECK(ParseDeviationKind("phihat") == DeviationKind::kPhiHat);
  CHECK(CodeOf([] { ParseDeviationKind("nope"); }) ==
        ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace sparse_ce
