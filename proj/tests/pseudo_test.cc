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

#include <cmath>
#include <utility>
#include <vector>

#include "core/constructions.h"
#include "core/error.h"
#include "core/pseudo.h"

namespace sparse_ce {
namespace {

Vector Vec(std::vector<double> v) {
  return Eigen::Map<Vector>(v.data(), static_cast<int>(v.size()));
}

TEST_CASE("moments of point masses") {
  const MomentMatrix point = MomentFromDistribution({{1.0, Vec({1, 0})}});
  Matrix expected(3, 3);
  expected << 1, 1, 0, 1, 1, 0, 0, 0, 0;
  CHECK(point.matrix() == expected);
  CHECK(point.labels() == std::vector<std::string>{"z0", "z1"});
  const MomentMatrix pm =
      MomentFromDistribution({{0.5, Vec({1})}, {0.5, Vec({-1})}});
  CHECK(pm.matrix().isApprox(Matrix::Identity(2, 2)));
  CHECK_THROWS_AS(MomentFromDistribution({{0.4, Vec({1})}}), Error);
  Matrix asym(2, 2);
  asym << 1, 0.5, 0.4, 1;
  CHECK_THROWS_AS(MomentMatrix{asym}, Error);
}

TEST_CASE("check order: normalization, positivity, constraints") {
  Matrix half(2, 2);
  half << 0.5, 0, 0, 0;
  const PseudoCheck n = CheckPseudo(MomentMatrix(half), {});
  CHECK(n.status == PseudoStatus::kNormalization);
  CHECK(n.value == 0.5);

  Matrix indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  const PseudoCheck p = CheckPseudo(MomentMatrix(indefinite), {});
  CHECK(p.status == PseudoStatus::kPositivity);
  CHECK(p.min_eigenvalue == doctest::Approx(-1.0));
  REQUIRE(p.eigenvector.size() == 2);
  CHECK(std::abs(p.eigenvector[0] + p.eigenvector[1]) < 1e-12);
  CHECK(p.eigenvector.dot(indefinite * p.eigenvector) ==
        doctest::Approx(-1.0));

  QuadraticConstraint c;
  c.constant = -1.0;
  c.linear = Vec({1});
  c.quadratic = Matrix::Zero(1, 1);
  c.sense = QuadraticSense::kEq;
  const MomentMatrix origin = MomentFromDistribution({{1.0, Vec({0})}});
  const PseudoCheck q = CheckPseudo(origin, {c});
  CHECK(q.status == PseudoStatus::kConstraint);
  CHECK(q.constraint_index == 0);
  CHECK(q.value == doctest::Approx(-1.0));
  CHECK(CheckPseudo(MomentFromDistribution({{1.0, Vec({1})}}), {c}).valid());
}

TEST_CASE("pseudo-expectation of a quadratic") {
  Matrix M(2, 2);
  M << 1, 0, 0, 0.3;
  QuadraticConstraint c;
  c.constant = 2.0;
  c.linear = Vec({5});
  c.quadratic = Matrix::Constant(1, 1, 1.0);
  CHECK(PseudoExpectation(MomentMatrix(M), c) == doctest::Approx(2.3));
}

TEST_CASE("sparse-ce constraint system") {
  const BimatrixGame game = MatchingPennies(2, false);
  const DeviationSet swap = DeviationSet::Enumerate(DeviationKind::kSwap, 2);
  // 2T simplex rows, 2nT nonnegativity rows, 2|Phi| incentive rows.
  CHECK(PseudoCeConstraints(game, 1, swap, std::nullopt).size() == 14);
  CHECK(PseudoCeConstraints(game, 1, swap, 0.1).size() == 16);
  CHECK(PseudoCeConstraints(game, 2, swap, std::nullopt).size() == 20);
  CHECK(XVar(2, 1, 1) == 3);
  CHECK(YVar(2, 2, 0, 1) == 5);
  CHECK(SparseCeLabels(2, 1).size() == 4);

  const MomentMatrix uniform =
      MomentFromDistribution({{1.0, Vec({0.5, 0.5, 0.5, 0.5})}});
  CHECK(CheckPseudo(uniform, PseudoCeConstraints(game, 1, swap, std::nullopt))
            .valid());
  const MomentMatrix pure =
      MomentFromDistribution({{1.0, Vec({1, 0, 1, 0})}});
  const PseudoCheck bad =
      CheckPseudo(pure, PseudoCeConstraints(game, 1, swap, std::nullopt));
  CHECK(bad.status == PseudoStatus::kConstraint);
  CHECK(bad.value == doctest::Approx(-1.0));
}

TEST_CASE("lifting and extension match explicit moments") {
  // Point mass on the indicator of {0, 2} in a 3-vertex graph, k = 2.
  const MomentMatrix mz = MomentFromDistribution({{1.0, Vec({1, 0, 1})}});
  const MomentMatrix lifted = LiftIsToGame(mz, 2.0, 1, 3);
  CHECK(lifted.m() == 12);
  const Vector block = Vec({0.5, 0, 0.5, 0, 0, 0});
  Vector z(12);
  z << block, block;
  CHECK(lifted.matrix().isApprox(MomentFromDistribution({{1.0, z}}).matrix()));

  const MomentMatrix extended = ExtendToStitched(lifted, 6);
  CHECK(extended.m() == 24);
  Vector padded = Vector::Zero(24);
  padded.segment(0, 6) = block;
  padded.segment(12, 6) = block;
  CHECK(extended.matrix().isApprox(
      MomentFromDistribution({{1.0, padded}}).matrix()));
  CHECK_THROWS_AS(ExtendToStitched(lifted, 5), Error);
}

}  // namespace
}  // namespace sparse_ce
