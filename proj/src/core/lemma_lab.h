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

// Numerical validators for the quantitative statements about the graph,
// enumeration-hard and stitched games.
//
// Every validator recomputes its premises from the inputs (gaps, welfare,
// support) instead of trusting the caller. A verdict passes when the premise
// fails or when the conclusion holds.

#ifndef SPARSE_CE_CORE_LEMMA_LAB_H_
#define SPARSE_CE_CORE_LEMMA_LAB_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/constructions.h"
#include "core/deviations.h"
#include "core/equilibria.h"
#include "core/game.h"

namespace sparse_ce {

inline constexpr double kLemmaSlack = 1e-9;

struct LemmaVerdict {
  std::string lemma_id;
  bool hypothesis_met = false;
  bool conclusion_met = false;
  std::map<std::string, double> measured;
  std::map<std::string, double> threshold;
  std::map<std::string, std::string> notes;
  // min over checked bounds of (threshold - measured); +inf when none.
  double slack = 0.0;

  bool passed() const { return !hypothesis_met || conclusion_met; }
};

// Planted profile ((u(S),0),(u(S),0)) on the graph game: Nash gap 0 and
// welfare 1 + gamma/k when S is an independent set of size k.
LemmaVerdict CheckCompletenessNe(const Graph& g, std::span<const int> S,
                                 double gamma, int k, int T);

// Conditioning every product on the top block of an eps-CE with welfare >= 1
// yields an (eps + 4 gamma k)-CE.
LemmaVerdict CheckConditioning(const Graph& g, double k, double gamma,
                               const SparseCorrelated& dist, double eps,
                               DeviationKind kind = DeviationKind::kPhi);

// Top-block distributions: x_i, y_j <= (1 + gamma + 2 eps_cce) T / k, and when
// eps_ce <= 1/k^2 and gamma <= 1/4 also x_i y_i <= 4T/k^2.
LemmaVerdict CheckProbabilityBounds(const Graph& g, double k, double gamma,
                                    const SparseCorrelated& dist);

struct ExtractionResult {
  IndexSet set;
  LemmaVerdict verdict;
};

// Threshold set {i : x_i^(t), y_i^(t) >= 1/(16kT)} on the graph game with
// gamma = 1/(256 k T^3). Premise: a 1/(4k^2)-CE on the top block with welfare
// at least 1 + 3 gamma/(4k). Conclusion: independent, size >= k/(16T).
ExtractionResult ExtractIndependentSet(const Graph& g, int k,
                                       const SparseCorrelated& dist, int t);

// x_U^(t) = mass on the top block. For a 1/2-CCE with k >= 12T, each t has
// both masses <= 6T/k or both >= 1 - 6T/k.
LemmaVerdict CheckStitchDichotomy(const BimatrixGame& stitched,
                                  const SparseCorrelated& dist, double k);

struct StitchCheckOptions {
  double soundness_constant = 7.0;
  double drift_constant = 2.0;
  DeviationKind kind = DeviationKind::kPhi;
};

// Premise: measured eps'-CE of the raw stitched game, eps' <= 1/2, k >= 12T,
// k >= 60T/eps', and no top-block witness of welfare above 2 delta - 4 eps'.
// Conclusions: x_U, y_U <= eps'; the bottom-conditioned distribution is a
// 7 eps'-CE of the enumeration game; marginal drift <= 2 eps' per player.
LemmaVerdict RestrictAndVerifyStitched(const BimatrixGame& stitched,
                                       const BimatrixGame& enum_game,
                                       const SparseCorrelated& dist,
                                       double eps_prime, double k,
                                       double delta,
                                       const StitchCheckOptions& options = {});

enum class MarginalKind { kLow, kGenMatch, kHigh };

const char* MarginalKindName(MarginalKind kind);
MarginalKind ParseMarginalKind(const std::string& name);

// Default constants: 144 (low), 4 m^2 (matching pennies), 140 n^2 (high).
double DefaultMarginalConstant(MarginalKind kind, int n);

// ||(1/T) sum x^(t) - u(S)||_1 <= constant * eps for a measured eps-CCE.
// For kGenMatch, S is ignored and u is uniform on [n]. A negative
// `constant` selects the default.
LemmaVerdict CheckEnumhardMarginals(MarginalKind kind, const BimatrixGame& game,
                                    std::span<const int> S,
                                    const SparseCorrelated& dist, double eps,
                                    double constant = -1.0);

// Equilibrium each member contributes as a query: u(S) (x) u(S) for the high
// family, u(S) (x) uniform for the low family.
SparseCorrelated PlantedFamilyEquilibrium(const GameFamily& family, int index);

enum class QueryOrder { kRandom, kFixed };

struct QueryResult {
  int queries = 0;
  bool found = false;
  // Pairwise: no member's planted equilibrium is accepted by another member.
  bool distinct = false;
  // Each Reject ruled out exactly one candidate.
  bool single_elimination = false;
};

// Pairwise acceptance matrix: accept[a][b] = oracle of member b accepts the
// planted equilibrium of member a.
std::vector<std::vector<bool>> FamilyAcceptance(const GameFamily& family,
                                                double eps,
                                                DeviationKind kind);

QueryResult QueryHarness(const GameFamily& family, int hidden, double eps,
                         QueryOrder order, uint64_t seed,
                         DeviationKind kind = DeviationKind::kPhi);

// Same with a precomputed acceptance matrix.
QueryResult QueryHarness(const GameFamily& family, int hidden, double eps,
                         QueryOrder order, uint64_t seed, DeviationKind kind,
                         const std::vector<std::vector<bool>>& acceptance);

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_LEMMA_LAB_H_
