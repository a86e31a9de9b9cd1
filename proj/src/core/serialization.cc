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

#include "core/serialization.h"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sparse_ce {
namespace {

// Converts library exceptions from malformed documents into kParse errors.
template <typename F>
auto Guard(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string(what) + ": " + e.what());
  }
}

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Json FiniteOrNull(double v) { return std::isfinite(v) ? Json(v) : Json(); }

}  // namespace

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

Json VectorToJson(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Vector VectorFromJson(const Json& j) {
  return Guard("vector", [&] {
    Check(j.is_array(), ErrorCode::kParse, "expected a JSON array");
    Vector v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v[i] = j[i].get<double>();
    return v;
  });
}

Json MatrixToJson(const Matrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    out.push_back(VectorToJson(m.row(i).transpose()));
  }
  return out;
}

Matrix MatrixFromJson(const Json& j) {
  return Guard("matrix", [&] {
    Check(j.is_array() && !j.empty(), ErrorCode::kParse,
          "expected a nonempty array of rows");
    const size_t cols = j[0].size();
    Matrix m(j.size(), cols);
    for (size_t i = 0; i < j.size(); ++i) {
      Check(j[i].is_array() && j[i].size() == cols, ErrorCode::kParse,
            "ragged matrix");
      for (size_t c = 0; c < cols; ++c) m(i, c) = j[i][c].get<double>();
    }
    return m;
  });
}

Json GameToJson(const BimatrixGame& game) {
  return Json{{"n", game.n()},
              {"R", MatrixToJson(game.row_payoffs())},
              {"C", MatrixToJson(game.col_payoffs())},
              {"label", game.label()}};
}

BimatrixGame GameFromJson(const Json& j) {
  return Guard("game", [&] {
    BimatrixGame game(MatrixFromJson(j.at("R")), MatrixFromJson(j.at("C")),
                      j.value("label", std::string()));
    if (j.contains("n")) {
      CheckDimension(j.at("n").get<int>(), game.n(), "game n");
    }
    return game;
  });
}

Json SparseToJson(const SparseCorrelated& dist) {
  Json xs = Json::array(), ys = Json::array();
  for (int t = 0; t < dist.T(); ++t) {
    xs.push_back(VectorToJson(dist.x(t).probs()));
    ys.push_back(VectorToJson(dist.y(t).probs()));
  }
  return Json{{"T", dist.T()}, {"xs", xs}, {"ys", ys}};
}

SparseCorrelated SparseFromJson(const Json& j) {
  return Guard("sparse distribution", [&] {
    std::vector<MixedStrategy> xs, ys;
    for (const Json& x : j.at("xs")) xs.emplace_back(VectorFromJson(x));
    for (const Json& y : j.at("ys")) ys.emplace_back(VectorFromJson(y));
    SparseCorrelated dist(std::move(xs), std::move(ys));
    if (j.contains("T")) {
      CheckDimension(j.at("T").get<int>(), dist.T(), "distribution T");
    }
    return dist;
  });
}

Json DenseToJson(const DenseCorrelated& dist) {
  return Json{{"n", dist.n()}, {"m", MatrixToJson(dist.probs())}};
}

DenseCorrelated DenseFromJson(const Json& j) {
  return Guard("dense distribution",
               [&] { return DenseCorrelated(MatrixFromJson(j.at("m"))); });
}

Json GraphToJson(const Graph& g) {
  Json adj = Json::array();
  for (int i = 0; i < g.n(); ++i) {
    Json row = Json::array();
    for (int c = 0; c < g.n(); ++c) row.push_back(g.adjacency()(i, c));
    adj.push_back(row);
  }
  return Json{{"n", g.n()}, {"adj", adj}};
}

Graph GraphFromJson(const Json& j) {
  return Guard("graph", [&] {
    const Json& adj = j.at("adj");
    const int n = static_cast<int>(adj.size());
    Eigen::MatrixXi a(n, n);
    for (int i = 0; i < n; ++i) {
      Check(adj[i].size() == static_cast<size_t>(n), ErrorCode::kParse,
            "adjacency must be square");
      for (int c = 0; c < n; ++c) a(i, c) = adj[i][c].get<int>();
    }
    return Graph(std::move(a));
  });
}

Json DeviationToJson(const Deviation& d) {
  static const char* kNames[] = {"external", "internal", "threshold",
                                 "explicit"};
  return Json{{"variant", kNames[static_cast<int>(d.variant())]},
              {"params", d.params()},
              {"n", d.n()}};
}

Deviation DeviationFromJson(const Json& j) {
  return Guard("deviation", [&] {
    const std::string variant = j.at("variant").get<std::string>();
    const std::vector<int> p = j.at("params").get<std::vector<int>>();
    const int n = j.at("n").get<int>();
    auto need = [&](size_t k) {
      Check(p.size() == k, ErrorCode::kParse,
            "deviation '" + variant + "' needs " + std::to_string(k) +
                " params");
    };
    if (variant == "external") {
      need(1);
      return Deviation::External(n, p[0]);
    }
    if (variant == "internal") {
      need(2);
      return Deviation::Internal(n, p[0], p[1]);
    }
    if (variant == "threshold") {
      need(2);
      return Deviation::Threshold(n, p[0], p[1]);
    }
    if (variant == "explicit") {
      need(static_cast<size_t>(n));
      return Deviation::Explicit(p);
    }
    Fail(ErrorCode::kParse, "unknown deviation variant '" + variant + "'");
  });
}

Json DeviationSetToJson(const DeviationSet& devs) {
  Json list = Json::array();
  for (const Deviation& d : devs.devs()) list.push_back(DeviationToJson(d));
  return Json{{"kind", DeviationKindName(devs.kind())},
              {"n", devs.n()},
              {"devs", list}};
}

DeviationSet DeviationSetFromJson(const Json& j) {
  return Guard("deviation set", [&] {
    const std::string kind = j.value("kind", std::string("custom"));
    std::vector<Deviation> devs;
    for (const Json& d : j.at("devs")) devs.push_back(DeviationFromJson(d));
    return DeviationSet::FromDeviations(
        kind == "custom" ? DeviationKind::kCustom : ParseDeviationKind(kind),
        std::move(devs), j.at("n").get<int>());
  });
}

Json CeReportToJson(const CEReport& report) {
  return Json{{"gap_row", report.gap_row},
              {"gap_col", report.gap_col},
              {"welfare", report.welfare},
              {"epsilon_star", report.epsilon_star},
              {"worst_dev_row", DeviationToJson(report.worst_dev_row)},
              {"worst_dev_col", DeviationToJson(report.worst_dev_col)}};
}

Json FamilyToJson(const GameFamily& family) {
  Json games = Json::array(), sets = Json::array();
  for (const BimatrixGame& g : family.games) games.push_back(GameToJson(g));
  for (const IndexSet& s : family.sets) sets.push_back(s);
  return Json{{"kind", FamilyKindName(family.kind)},
              {"params", family.params},
              {"keys", family.keys},
              {"sets", sets},
              {"games", games}};
}

GameFamily FamilyFromJson(const Json& j) {
  return Guard("family", [&] {
    GameFamily family;
    family.kind = ParseFamilyKind(j.at("kind").get<std::string>());
    family.params = j.value("params", std::map<std::string, double>());
    family.keys = j.at("keys").get<std::vector<std::string>>();
    for (const Json& g : j.at("games")) family.games.push_back(GameFromJson(g));
    if (j.contains("sets")) {
      family.sets = j.at("sets").get<std::vector<IndexSet>>();
    } else {
      for (const std::string& key : family.keys) {
        IndexSet s;
        std::stringstream in(key);
        std::string item;
        while (std::getline(in, item, ',')) s.push_back(std::stoi(item));
        family.sets.push_back(std::move(s));
      }
    }
    Check(family.keys.size() == family.games.size() &&
              family.sets.size() == family.games.size(),
          ErrorCode::kParse, "family keys, sets and games disagree in length");
    return family;
  });
}

Json RunLogToJson(const RunLog& log) {
  auto rows = [](const std::vector<Vector>& vs) {
    Json out = Json::array();
    for (const Vector& v : vs) out.push_back(VectorToJson(v));
    return out;
  };
  return Json{{"T", log.T},           {"seed", log.seed},
              {"xs", rows(log.xs)},   {"ys", rows(log.ys)},
              {"ux", rows(log.ux)},   {"uy", rows(log.uy)},
              {"welfare", log.welfare}};
}

RunLog RunLogFromJson(const Json& j) {
  return Guard("run log", [&] {
    RunLog log;
    log.T = j.at("T").get<int>();
    log.seed = j.value("seed", uint64_t{0});
    for (const Json& v : j.at("xs")) log.xs.push_back(VectorFromJson(v));
    for (const Json& v : j.at("ys")) log.ys.push_back(VectorFromJson(v));
    for (const Json& v : j.at("ux")) log.ux.push_back(VectorFromJson(v));
    for (const Json& v : j.at("uy")) log.uy.push_back(VectorFromJson(v));
    log.welfare = j.at("welfare").get<std::vector<double>>();
    const size_t T = static_cast<size_t>(log.T);
    Check(log.T >= 1 && log.xs.size() == T && log.ys.size() == T &&
              log.ux.size() == T && log.uy.size() == T &&
              log.welfare.size() == T,
          ErrorCode::kParse, "run log fields disagree with T");
    return log;
  });
}

std::string RunLogCsv(const RunLog& log) {
  std::ostringstream out;
  const int n = log.xs.empty() ? 0 : static_cast<int>(log.xs.front().size());
  out << "t";
  for (int i = 0; i < n; ++i) out << ",x" << i;
  for (int i = 0; i < n; ++i) out << ",y" << i;
  out << ",welfare\n";
  for (int t = 0; t < log.T; ++t) {
    out << t + 1;
    for (int i = 0; i < n; ++i) out << "," << Num(log.xs[t][i]);
    for (int i = 0; i < n; ++i) out << "," << Num(log.ys[t][i]);
    out << "," << Num(log.welfare[t]) << "\n";
  }
  return out.str();
}

std::string PlotCsv(const std::vector<PlotRow>& rows) {
  std::ostringstream out;
  out << "t,regret_row,regret_col,welfare\n";
  for (const PlotRow& r : rows) {
    out << r.t << "," << Num(r.regret_row) << "," << Num(r.regret_col) << ","
        << Num(r.welfare) << "\n";
  }
  return out.str();
}

Json MomentToJson(const MomentMatrix& M) {
  return Json{{"m", M.m()}, {"labels", M.labels()},
              {"M", MatrixToJson(M.matrix())}};
}

MomentMatrix MomentFromJson(const Json& j) {
  return Guard("moment matrix", [&] {
    MomentMatrix M(MatrixFromJson(j.at("M")),
                   j.value("labels", std::vector<std::string>()));
    if (j.contains("m")) CheckDimension(j.at("m").get<int>(), M.m(), "m");
    return M;
  });
}

Json PseudoCheckToJson(const PseudoCheck& check) {
  Json out{{"status", PseudoStatusName(check.status)},
           {"valid", check.valid()},
           {"min_eigenvalue", check.min_eigenvalue}};
  if (check.status == PseudoStatus::kPositivity) {
    out["eigenvector"] = VectorToJson(check.eigenvector);
  }
  if (check.status == PseudoStatus::kConstraint) {
    out["constraint_index"] = check.constraint_index;
    out["value"] = check.value;
  }
  if (check.status == PseudoStatus::kNormalization) out["value"] = check.value;
  return out;
}

Json VerdictToJson(const LemmaVerdict& verdict) {
  Json measured = Json::object(), threshold = Json::object();
  for (const auto& [k, v] : verdict.measured) measured[k] = FiniteOrNull(v);
  for (const auto& [k, v] : verdict.threshold) threshold[k] = FiniteOrNull(v);
  Json out{{"lemma_id", verdict.lemma_id},
           {"hypothesis_met", verdict.hypothesis_met},
           {"conclusion_met", verdict.conclusion_met},
           {"passed", verdict.passed()},
           {"measured", measured},
           {"threshold", threshold},
           {"slack", FiniteOrNull(verdict.slack)}};
  if (!verdict.notes.empty()) out["notes"] = verdict.notes;
  return out;
}

Json QueryResultToJson(const QueryResult& result) {
  return Json{{"queries", result.queries},
              {"found", result.found},
              {"distinct", result.distinct},
              {"single_elimination", result.single_elimination}};
}

Json ZeroSumToJson(const ZeroSumSolution& solution) {
  return Json{{"x", VectorToJson(solution.x.probs())},
              {"y", VectorToJson(solution.y.probs())},
              {"value", solution.value}};
}

Json BridgeToJson(const ZeroSumBridge& bridge) {
  return Json{{"x_avg", VectorToJson(bridge.x_avg.probs())},
              {"y_avg", VectorToJson(bridge.y_avg.probs())},
              {"cce_gap", bridge.cce_gap},
              {"certified_eps", bridge.certified_eps},
              {"nash_gap", bridge.nash_gap},
              {"premise_met", bridge.premise_met}};
}

}  // namespace sparse_ce
