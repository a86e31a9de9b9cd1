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

// Game families: the graph games (independent set / clique), the two
// enumeration-hard families, generalized matching pennies, and the stitched
// 2n x 2n combination of a graph game with an enumeration-hard game.

#ifndef SPARSE_CE_CORE_CONSTRUCTIONS_H_
#define SPARSE_CE_CORE_CONSTRUCTIONS_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/game.h"

namespace sparse_ce {

// 2n x 2n game
//
//   R = 1/2 [[1 - A + (gamma+1) I,  -k I],     C = 1/2 [[same,   k I],
//            [k I,                   0  ]]              [-k I,   0  ]]
//
// When `rescale` is set every payoff is divided by k.
BimatrixGame IndependentSetGame(const Graph& g, double k, double gamma,
                                bool rescale = false);

// As above with the top-left block (A - I + (gamma+1) I) / 2.
BimatrixGame CliqueGame(const Graph& g, double k, double gamma,
                        bool rescale = false);

// T copies of (u(S), 0) (x) (u(S), 0) in dimension n2.
SparseCorrelated PlantedProfile(std::span<const int> S, int n2, int T);

// Size-`size` subsets of the sorted `items`, in lexicographic order.
std::vector<IndexSet> Subsets(std::span<const int> items, int size);

// n = binom(ell, ell/2). Column j is the j-th (ell/2)-subset S_j of S.
//   i not in S:       (-1, 1)
//   i in S and S_j:   ( 1, 0)
//   otherwise:        ( 0, 1)
BimatrixGame EnumHardLowGame(int ell, std::span<const int> S);

// (I_m, -I_m); the shifted variant adds 1/2 - 1/m and 1/2 + 1/m, making it
// 1-sum with value 1/2.
BimatrixGame MatchingPennies(int m, bool shifted);

// (-1,-1) off S x S in both coordinates, (1/2,-1) for i in S only, (-1,1/2)
// for j in S only, and shifted matching pennies on S x S. For |S| = 1 the
// shifted formula gives the single entry (1/2, 1/2).
BimatrixGame EnumHardHighGame(int n, std::span<const int> S);

enum class FamilyKind { kEnumHardLow, kEnumHardHigh };

const char* FamilyKindName(FamilyKind kind);
FamilyKind ParseFamilyKind(const std::string& name);

struct GameFamily {
  FamilyKind kind;
  std::map<std::string, double> params;
  std::vector<std::string> keys;  // comma-joined 0-based subset
  std::vector<IndexSet> sets;
  std::vector<BimatrixGame> games;

  int size() const { return static_cast<int>(games.size()); }
  int IndexOf(const std::string& key) const;
};

std::string SubsetKey(std::span<const int> S);

inline constexpr double kMaxFamilyEnumeration = 1e7;
inline constexpr int kMaxFamilySize = 4096;
inline constexpr int kMaxHighFamilyDimension = 12;

// All size-ell subsets of [binom(ell, ell/2)]; when packed, greedily keeps a
// subset only if ||u(S) - u(S')||_1 >= min_l1 against every kept S'.
GameFamily EnumHardLowFamily(int ell, bool packed, double min_l1);

// One game per nonempty subset of [n], ordered by bitmask 1 .. 2^n - 1.
GameFamily EnumHardHighFamily(int n);

struct StitchParams {
  double delta = 0.25;
  double k = 1.0;
  double gamma = 0.0;
  int k_is = 1;
  int T = 1;
};

//   R' = [[R, -k 1], [delta 1, R^S]],  C' = [[C, delta 1], [-k 1, C^S]]
//
// Both inputs must have payoffs in [-1, 1]. With `normalize` the whole game
// is divided by max(k, 1); the divisor is written to `scale` when non-null.
BimatrixGame StitchedGame(const BimatrixGame& sos, const BimatrixGame& enum_game,
                          const StitchParams& params, bool normalize = false,
                          double* scale = nullptr);

enum class GraphKind { kErdosRenyiHalf, kPlantedIndependentSet, kPlantedClique };

struct RandomGraphResult {
  Graph graph;
  IndexSet planted;  // empty for kErdosRenyiHalf
};

// Fair-coin edges; a planted set of k vertices (chosen by the seed) is forced
// independent or complete.
RandomGraphResult RandomGraph(int n, GraphKind kind, int k, uint64_t seed);

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_CONSTRUCTIONS_H_
