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
#include <string>

#include "core/constructions.h"
#include "core/dynamics.h"
#include "core/error.h"
#include "core/serialization.h"

namespace sparse_ce {
namespace {

BimatrixGame RandomGame(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix R(n, n), C(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      R(i, j) = u(rng);
      C(i, j) = u(rng);
    }
  }
  return BimatrixGame(R, C, "random");
}

TEST_CASE("games round-trip bit for bit through text") {
  const BimatrixGame game = RandomGame(4, 1);
  const std::string text = GameToJson(game).dump();
  const BimatrixGame back = GameFromJson(ParseJson(text));
  CHECK(back.row_payoffs() == game.row_payoffs());
  CHECK(back.col_payoffs() == game.col_payoffs());
  CHECK(back.label() == "random");
}

TEST_CASE("distributions, graphs and deviation sets round-trip") {
  const BimatrixGame game = RandomGame(3, 2);
  MwuExternal mx(3, 1), my(3, 2);
  const SelfPlayResult r = SelfPlay(game, mx, my, 7);
  const SparseCorrelated back =
      SparseFromJson(ParseJson(SparseToJson(r.dist).dump()));
  REQUIRE(back.T() == 7);
  for (int t = 0; t < 7; ++t) {
    CHECK(back.x(t).probs() == r.dist.x(t).probs());
    CHECK(back.y(t).probs() == r.dist.y(t).probs());
  }
  const DenseCorrelated dense = Densify(r.dist);
  CHECK(DenseFromJson(ParseJson(DenseToJson(dense).dump())).probs() ==
        dense.probs());

  const RunLog log = RunLogFromJson(ParseJson(RunLogToJson(r.log).dump()));
  CHECK(log.T == 7);
  CHECK(log.ux[3] == r.log.ux[3]);
  CHECK(RunLogCsv(log) == RunLogCsv(r.log));
  CHECK(RunLogCsv(log).rfind("t,x0,x1,x2,y0,y1,y2,welfare\n1,", 0) == 0);

  const RandomGraphResult g =
      RandomGraph(6, GraphKind::kErdosRenyiHalf, 0, 4);
  CHECK(GraphFromJson(ParseJson(GraphToJson(g.graph).dump())).adjacency() ==
        g.graph.adjacency());

  const DeviationSet devs = DeviationSet::Enumerate(DeviationKind::kPhi, 4);
  const DeviationSet dback =
      DeviationSetFromJson(ParseJson(DeviationSetToJson(devs).dump()));
  REQUIRE(dback.size() == devs.size());
  for (int i = 0; i < devs.size(); ++i) CHECK(dback[i] == devs[i]);
}

TEST_CASE("families round-trip") {
  const GameFamily f = EnumHardLowFamily(4, true, 1.0);
  const GameFamily back = FamilyFromJson(ParseJson(FamilyToJson(f).dump()));
  REQUIRE(back.size() == f.size());
  CHECK(back.keys == f.keys);
  CHECK(back.games[1].row_payoffs() == f.games[1].row_payoffs());
}

TEST_CASE("malformed input is a parse error") {
  try {
    ParseJson("{\"n\": ");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
  CHECK_THROWS_AS(GameFromJson(ParseJson("{\"R\": [[1]]}")), Error);
  CHECK_THROWS_AS(SparseFromJson(ParseJson("{\"xs\": [[0.5, 0.5]]}")), Error);
}

}  // namespace
}  // namespace sparse_ce
