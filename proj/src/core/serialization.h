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

// JSON and CSV formats. Doubles are written with 17 significant digits, so
// every value round-trips exactly. All indices are 0-based.

#ifndef SPARSE_CE_CORE_SERIALIZATION_H_
#define SPARSE_CE_CORE_SERIALIZATION_H_

#include <string>
#include <vector>

#include "json.hpp"

#include "core/constructions.h"
#include "core/deviations.h"
#include "core/dynamics.h"
#include "core/equilibria.h"
#include "core/game.h"
#include "core/lemma_lab.h"
#include "core/pseudo.h"

namespace sparse_ce {

using Json = nlohmann::json;

// Throws Error(kParse) on malformed text.
Json ParseJson(const std::string& text);

Json GameToJson(const BimatrixGame& game);
BimatrixGame GameFromJson(const Json& j);

Json SparseToJson(const SparseCorrelated& dist);
SparseCorrelated SparseFromJson(const Json& j);

Json DenseToJson(const DenseCorrelated& dist);
DenseCorrelated DenseFromJson(const Json& j);

Json GraphToJson(const Graph& g);
Graph GraphFromJson(const Json& j);

Json DeviationToJson(const Deviation& d);
Deviation DeviationFromJson(const Json& j);

Json DeviationSetToJson(const DeviationSet& devs);
DeviationSet DeviationSetFromJson(const Json& j);

Json CeReportToJson(const CEReport& report);

Json FamilyToJson(const GameFamily& family);
GameFamily FamilyFromJson(const Json& j);

Json RunLogToJson(const RunLog& log);
RunLog RunLogFromJson(const Json& j);

// t, x0..x{n-1}, y0..y{n-1}, welfare; t counts rounds from 1.
std::string RunLogCsv(const RunLog& log);
// t, regret_row, regret_col, welfare.
std::string PlotCsv(const std::vector<PlotRow>& rows);

Json MomentToJson(const MomentMatrix& M);
MomentMatrix MomentFromJson(const Json& j);

Json PseudoCheckToJson(const PseudoCheck& check);
Json VerdictToJson(const LemmaVerdict& verdict);
Json QueryResultToJson(const QueryResult& result);
Json ZeroSumToJson(const ZeroSumSolution& solution);
Json BridgeToJson(const ZeroSumBridge& bridge);

Json VectorToJson(const Vector& v);
Vector VectorFromJson(const Json& j);
Json MatrixToJson(const Matrix& m);
Matrix MatrixFromJson(const Json& j);

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_SERIALIZATION_H_
