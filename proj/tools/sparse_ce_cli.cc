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

// Command-line front end. Talks to the library only through the C API.

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparse_ce/sparse_ce.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitLemmaFailure = 2;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Diagnostics go to stderr only; stdout carries data.
enum class LogLevel { kError = 0, kInfo = 1, kDebug = 2 };

LogLevel CurrentLevel() {
  static const LogLevel level = [] {
    const char* env = std::getenv("SPARSE_CE_LOG");
    if (env == nullptr) return LogLevel::kError;
    const std::string s = env;
    if (s == "debug") return LogLevel::kDebug;
    if (s == "info") return LogLevel::kInfo;
    return LogLevel::kError;
  }();
  return level;
}

void Log(LogLevel level, const std::string& msg) {
  if (level > CurrentLevel()) return;
  static const char* kNames[] = {"error", "info", "debug"};
  std::cerr << "[" << kNames[static_cast<int>(level)] << "] " << msg << "\n";
}

void Call(sce_status status) {
  if (status != SCE_OK) {
    throw CliError(std::string(sce_status_name(status)) + ": " +
                   sce_last_error());
  }
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using GamePtr = std::unique_ptr<sce_game, Deleter<sce_game, sce_game_free>>;
using DistPtr = std::unique_ptr<sce_dist, Deleter<sce_dist, sce_dist_free>>;
using DensePtr =
    std::unique_ptr<sce_dense, Deleter<sce_dense, sce_dense_free>>;
using GraphPtr =
    std::unique_ptr<sce_graph, Deleter<sce_graph, sce_graph_free>>;
using FamilyPtr =
    std::unique_ptr<sce_family, Deleter<sce_family, sce_family_free>>;
using RunLogPtr =
    std::unique_ptr<sce_runlog, Deleter<sce_runlog, sce_runlog_free>>;
using MomentPtr =
    std::unique_ptr<sce_moment, Deleter<sce_moment, sce_moment_free>>;

// Takes ownership of a library string.
std::string Take(char* s) {
  std::string out = s ? s : "";
  sce_string_free(s);
  return out;
}

Json TakeJson(char* s) { return Json::parse(Take(s)); }

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("io: cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An output flag given explicitly with an empty value is an IO error.
const CLI::Validator kOutputPath(
    [](std::string& path) {
      return path.empty() ? std::string("io: empty output path")
                          : std::string();
    },
    "PATH");

void WriteAtomic(const std::string& path, const std::string& content) {
  if (path.empty()) throw CliError("io: empty output path");
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CliError("io: cannot write '" + path + "'");
    out << content;
    if (!out.flush()) throw CliError("io: write failed for '" + path + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CliError("io: cannot rename into '" + path + "'");
  }
  Log(LogLevel::kInfo, "wrote " + path);
}

std::vector<int> ParseSet(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw CliError("invalid_argument: bad index '" + item + "' in set");
    }
  }
  return out;
}

GamePtr LoadGame(const std::string& path) {
  sce_game* g = nullptr;
  Call(sce_game_from_json(ReadFile(path).c_str(), &g));
  return GamePtr(g);
}

GraphPtr LoadGraph(const std::string& path) {
  sce_graph* g = nullptr;
  Call(sce_graph_from_json(ReadFile(path).c_str(), &g));
  return GraphPtr(g);
}

DistPtr LoadDist(const std::string& path) {
  sce_dist* d = nullptr;
  Call(sce_dist_from_json(ReadFile(path).c_str(), &d));
  return DistPtr(d);
}

FamilyPtr LoadFamily(const std::string& path) {
  sce_family* f = nullptr;
  Call(sce_family_from_json(ReadFile(path).c_str(), &f));
  return FamilyPtr(f);
}

MomentPtr LoadMoment(const std::string& path) {
  sce_moment* m = nullptr;
  Call(sce_moment_from_json(ReadFile(path).c_str(), &m));
  return MomentPtr(m);
}

// Shared state for one invocation: the command path and its options, used
// to stamp the "meta" block.
struct Context {
  std::string command;
  const CLI::App* app = nullptr;

  Json Config() const {
    Json config = Json::object();
    for (const CLI::App* a = app; a != nullptr; a = a->get_parent()) {
      for (const CLI::Option* opt : a->get_options()) {
        const std::string name = opt->get_lnames().empty()
                                     ? opt->get_name()
                                     : opt->get_lnames().front();
        if (name == "help" || name == "config" || config.contains(name)) {
          continue;
        }
        if (opt->count() > 0) {
          const auto& r = opt->results();
          config[name] = r.size() == 1 ? Json(r.front()) : Json(r);
        } else if (!opt->get_default_str().empty()) {
          config[name] = opt->get_default_str();
        }
      }
    }
    return config;
  }

  Json Meta() const {
    return Json{{"version", sce_version()},
                {"command", command},
                {"config", Config()}};
  }

  // JSON objects get a "meta" key; written to `path` or stdout.
  void Emit(Json j, const std::string& path) const {
    j["meta"] = Meta();
    const std::string text = j.dump() + "\n";
    if (path.empty()) {
      std::cout << text;
    } else {
      WriteAtomic(path, text);
    }
  }

  // CSV files carry the meta block on a leading comment line.
  void EmitCsv(const std::string& csv, const std::string& path) const {
    WriteAtomic(path, "# meta " + Meta().dump() + "\n" + csv);
  }
};

Context ctx;

// Option storage lives for the whole process.
template <typename T>
T* Keep(T init = T()) {
  static std::vector<std::unique_ptr<T>> store;
  store.push_back(std::make_unique<T>(std::move(init)));
  return store.back().get();
}

int EmitVerdict(Json verdict, const std::string& path) {
  const bool passed = verdict.value("passed", false);
  ctx.Emit(std::move(verdict), path);
  if (!passed) Log(LogLevel::kError, "lemma check failed");
  return passed ? kExitOk : kExitLemmaFailure;
}

// ---- construct ------------------------------------------------------------

void AddConstruct(CLI::App& app, std::function<int()>& run) {
  CLI::App* c = app.add_subcommand("construct", "Build games, graphs, "
                                   "and planted profiles");
  c->require_subcommand(1);
  c->fallthrough();
  auto* out = Keep<std::string>();
  c->add_option("--out", *out, "Output file (stdout if omitted)")
      ->check(kOutputPath);

  {
    auto* s = c->add_subcommand("graph", "Random graph");
    auto* n = Keep<int>(16);
    auto* kind = Keep<std::string>("planted-is");
    auto* k = Keep<int>(4);
    auto* seed = Keep<uint64_t>(0);
    s->add_option("--n", *n, "Vertices")->capture_default_str();
    s->add_option("--kind", *kind, "er | planted-is | planted-clique")
        ->check(CLI::IsMember({"er", "planted-is", "planted-clique"}))
        ->capture_default_str();
    s->add_option("--k", *k, "Planted size")->capture_default_str();
    s->add_option("--seed", *seed, "RNG seed")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        std::vector<int> planted(std::max(*k, 0));
        int len = 0;
        sce_graph* g = nullptr;
        Call(sce_graph_random(*n, kind->c_str(), *k, *seed, &g,
                              planted.data(), &len));
        GraphPtr graph(g);
        Json j = TakeJson([&] {
          char* s = nullptr;
          Call(sce_graph_to_json(graph.get(), &s));
          return s;
        }());
        planted.resize(len);
        j["planted"] = planted;
        ctx.Emit(j, *out);
        return kExitOk;
      };
    });
  }

  for (const char* name : {"is-game", "clique-game"}) {
    const bool clique = std::string(name) == "clique-game";
    auto* s = c->add_subcommand(name, clique ? "Clique game of a graph"
                                             : "Independent-set game of a "
                                               "graph");
    auto* graph = Keep<std::string>();
    auto* k = Keep<double>(1.0);
    auto* gamma = Keep<double>(0.01);
    auto* rescale = Keep<bool>(false);
    s->add_option("--graph", *graph, "Graph JSON")->required();
    s->add_option("--k", *k, "Target size")->capture_default_str();
    s->add_option("--gamma", *gamma, "Welfare bonus")->capture_default_str();
    s->add_flag("--rescale", *rescale, "Divide payoffs by k");
    s->callback([=, &run] {
      run = [=] {
        GraphPtr g = LoadGraph(*graph);
        sce_game* game = nullptr;
        Call((clique ? sce_clique_game : sce_is_game)(g.get(), *k, *gamma,
                                                      *rescale, &game));
        GamePtr owned(game);
        char* s = nullptr;
        Call(sce_game_to_json(game, &s));
        ctx.Emit(TakeJson(s), *out);
        return kExitOk;
      };
    });
  }

  {
    auto* s = c->add_subcommand("enumhard-low", "Low-precision game");
    auto* ell = Keep<int>(4);
    auto* set = Keep<std::string>();
    s->add_option("--ell", *ell, "Ground set size (even)")
        ->capture_default_str();
    s->add_option("--set", *set, "Subset S, comma separated")->required();
    s->callback([=, &run] {
      run = [=] {
        const std::vector<int> S = ParseSet(*set);
        sce_game* game = nullptr;
        Call(sce_enumhard_low_game(*ell, S.data(),
                                   static_cast<int>(S.size()), &game));
        GamePtr owned(game);
        char* text = nullptr;
        Call(sce_game_to_json(game, &text));
        ctx.Emit(TakeJson(text), *out);
        return kExitOk;
      };
    });
  }

  {
    auto* s = c->add_subcommand("enumhard-high", "High-precision game");
    auto* n = Keep<int>(4);
    auto* set = Keep<std::string>();
    s->add_option("--n", *n, "Actions")->capture_default_str();
    s->add_option("--set", *set, "Subset S, comma separated")->required();
    s->callback([=, &run] {
      run = [=] {
        const std::vector<int> S = ParseSet(*set);
        sce_game* game = nullptr;
        Call(sce_enumhard_high_game(*n, S.data(),
                                    static_cast<int>(S.size()), &game));
        GamePtr owned(game);
        char* text = nullptr;
        Call(sce_game_to_json(game, &text));
        ctx.Emit(TakeJson(text), *out);
        return kExitOk;
      };
    });
  }

  {
    auto* s = c->add_subcommand("pennies", "Generalized matching pennies");
    auto* m = Keep<int>(2);
    auto* shifted = Keep<bool>(false);
    s->add_option("--m", *m, "Actions")->capture_default_str();
    s->add_flag("--shifted", *shifted, "Use the shifted payoffs");
    s->callback([=, &run] {
      run = [=] {
        sce_game* game = nullptr;
        Call(sce_pennies_game(*m, *shifted, &game));
        GamePtr owned(game);
        char* text = nullptr;
        Call(sce_game_to_json(game, &text));
        ctx.Emit(TakeJson(text), *out);
        return kExitOk;
      };
    });
  }

  {
    auto* s = c->add_subcommand("stitched", "Stitch two games");
    auto* sos = Keep<std::string>();
    auto* enum_game = Keep<std::string>();
    auto* delta = Keep<double>(0.25);
    auto* k = Keep<double>(1.0);
    auto* normalize = Keep<bool>(false);
    s->add_option("--sos", *sos, "Top-left game JSON")->required();
    s->add_option("--enum", *enum_game, "Bottom-right game JSON")->required();
    s->add_option("--delta", *delta, "Reward block value")
        ->capture_default_str();
    s->add_option("--k", *k, "Penalty")->capture_default_str();
    s->add_flag("--normalize", *normalize, "Scale payoffs into [-1, 1]");
    s->callback([=, &run] {
      run = [=] {
        GamePtr a = LoadGame(*sos);
        GamePtr b = LoadGame(*enum_game);
        sce_game* game = nullptr;
        double scale = 1.0;
        Call(sce_stitched_game(a.get(), b.get(), *delta, *k, *normalize,
                               &game, &scale));
        GamePtr owned(game);
        char* text = nullptr;
        Call(sce_game_to_json(game, &text));
        Json j = TakeJson(text);
        j["scale"] = scale;
        ctx.Emit(j, *out);
        return kExitOk;
      };
    });
  }

  {
    auto* s = c->add_subcommand("planted", "T copies of u(S) x u(S)");
    auto* set = Keep<std::string>();
    auto* n = Keep<int>(0);
    auto* T = Keep<int>(1);
    s->add_option("--set", *set, "Subset S, comma separated")->required();
    s->add_option("--n", *n, "Actions")->required();
    s->add_option("--T", *T, "Components")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        const std::vector<int> S = ParseSet(*set);
        sce_dist* d = nullptr;
        Call(sce_dist_planted(S.data(), static_cast<int>(S.size()), *n, *T,
                              &d));
        DistPtr owned(d);
        char* text = nullptr;
        Call(sce_dist_to_json(d, &text));
        ctx.Emit(TakeJson(text), *out);
        return kExitOk;
      };
    });
  }
}

// ---- dynamics -------------------------------------------------------------

void AddDynamics(CLI::App& app, std::function<int()>& run) {
  auto* s = app.add_subcommand("dynamics", "No-regret self-play");
  auto* game = Keep<std::string>();
  auto* rounds = Keep<int>(100);
  auto* seed = Keep<uint64_t>(0);
  auto* algo = Keep<std::string>("phi");
  auto* phi = Keep<std::string>("phi");
  auto* out = Keep<std::string>();
  auto* csv = Keep<std::string>();
  auto* plot = Keep<std::string>();
  auto* dist = Keep<std::string>();
  s->add_option("--game", *game, "Game JSON")->required();
  s->add_option("--rounds", *rounds, "Rounds T")->capture_default_str();
  s->add_option("--seed", *seed, "Seed")->capture_default_str();
  s->add_option("--algo", *algo, "mwu | phi")
      ->check(CLI::IsMember({"mwu", "phi"}))
      ->capture_default_str();
  s->add_option("--phi-set", *phi, "ext | int | phihat | phi")
      ->check(CLI::IsMember({"ext", "int", "phihat", "phi"}))
      ->capture_default_str();
  s->add_option("--out", *out, "Run log JSON (stdout if omitted)")
      ->check(kOutputPath);
  s->add_option("--csv", *csv, "Run log CSV")
      ->check(kOutputPath);
  s->add_option("--plot", *plot, "Plot data CSV")
      ->check(kOutputPath);
  s->add_option("--dist", *dist, "Empirical distribution JSON")
      ->check(kOutputPath);
  s->callback([=, &run] {
    run = [=] {
      GamePtr g = LoadGame(*game);
      sce_runlog* l = nullptr;
      Call(sce_self_play(g.get(), algo->c_str(), phi->c_str(), *rounds,
                         *seed, &l));
      RunLogPtr log(l);
      char* text = nullptr;
      Call(sce_runlog_to_json(l, &text));
      Json j = TakeJson(text);
      char* report = nullptr;
      Call(sce_regret_certificate(g.get(), l, phi->c_str(), &report));
      j["certificate"] = TakeJson(report);
      Log(LogLevel::kInfo, "epsilon_star " +
                               j["certificate"]["epsilon_star"].dump());
      ctx.Emit(j, *out);
      if (!csv->empty()) {
        Call(sce_runlog_csv(l, &text));
        ctx.EmitCsv(Take(text), *csv);
      }
      if (!plot->empty()) {
        Call(sce_runlog_plot_csv(l, phi->c_str(), &text));
        ctx.EmitCsv(Take(text), *plot);
      }
      if (!dist->empty()) {
        sce_dist* d = nullptr;
        Call(sce_runlog_dist(l, &d));
        DistPtr owned(d);
        Call(sce_dist_to_json(d, &text));
        ctx.Emit(TakeJson(text), *dist);
      }
      return kExitOk;
    };
  });
}

// ---- verify ---------------------------------------------------------------

void AddVerify(CLI::App& app, std::function<int()>& run) {
  auto* s = app.add_subcommand("verify", "Accept or Reject a candidate");
  auto* game = Keep<std::string>();
  auto* dist = Keep<std::string>();
  auto* eps = Keep<double>(0.01);
  auto* phi = Keep<std::string>("phi");
  auto* report = Keep<std::string>();
  s->add_option("--game", *game, "Game JSON")->required();
  s->add_option("--dist", *dist, "Sparse or dense distribution JSON")
      ->required();
  s->add_option("--eps", *eps, "Tolerance")->capture_default_str();
  s->add_option("--phi", *phi, "ext | int | phihat | phi | swap")
      ->check(CLI::IsMember({"ext", "int", "phihat", "phi", "swap"}))
      ->capture_default_str();
  s->add_option("--report", *report, "Write the gap report here")
      ->check(kOutputPath);
  s->callback([=, &run] {
    run = [=] {
      GamePtr g = LoadGame(*game);
      const std::string text = ReadFile(*dist);
      Json parsed;
      try {
        parsed = Json::parse(text);
      } catch (const Json::exception& e) {
        throw CliError(std::string("parse: ") + e.what());
      }
      int accept = 0;
      char* rep = nullptr;
      if (parsed.is_object() && parsed.contains("xs")) {
        DistPtr d = LoadDist(*dist);
        Call(sce_verify(g.get(), d.get(), *eps, phi->c_str(), &accept));
        Call(sce_ce_gap(g.get(), d.get(), phi->c_str(), &rep));
      } else {
        sce_dense* d = nullptr;
        Call(sce_dense_from_json(text.c_str(), &d));
        DensePtr owned(d);
        Call(sce_verify_dense(g.get(), d, *eps, phi->c_str(), &accept));
        Call(sce_ce_gap_dense(g.get(), d, phi->c_str(), &rep));
      }
      Json r = TakeJson(rep);
      r["verdict"] = accept ? "Accept" : "Reject";
      if (!report->empty()) ctx.Emit(r, *report);
      std::cout << (accept ? "Accept" : "Reject") << "\n";
      return kExitOk;
    };
  });
}

// ---- lemma ----------------------------------------------------------------

void AddLemma(CLI::App& app, std::function<int()>& run) {
  auto* c = app.add_subcommand("lemma", "Run a lemma validator; exit 2 on "
                               "failure");
  c->require_subcommand(1);
  c->fallthrough();
  auto* out = Keep<std::string>();
  c->add_option("--out", *out, "Verdict file (stdout if omitted)")
      ->check(kOutputPath);

  {
    auto* s = c->add_subcommand("completeness", "Planted profile is a NE");
    auto* graph = Keep<std::string>();
    auto* set = Keep<std::string>();
    auto* gamma = Keep<double>(0.01);
    auto* k = Keep<int>(0);
    auto* T = Keep<int>(1);
    s->add_option("--graph", *graph, "Graph JSON")->required();
    s->add_option("--set", *set, "Independent set")->required();
    s->add_option("--gamma", *gamma, "Welfare bonus")->capture_default_str();
    s->add_option("--k", *k, "Target size (default |S|)");
    s->add_option("--T", *T, "Components")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        GraphPtr g = LoadGraph(*graph);
        const std::vector<int> S = ParseSet(*set);
        const int kk = *k > 0 ? *k : static_cast<int>(S.size());
        char* v = nullptr;
        Call(sce_lemma_completeness(g.get(), S.data(),
                                    static_cast<int>(S.size()), *gamma, kk,
                                    *T, &v));
        return EmitVerdict(TakeJson(v), *out);
      };
    });
  }

  // Lemmas taking (graph, k, gamma, dist).
  {
    auto* s = c->add_subcommand("conditioning", "Top-block conditioning");
    auto* graph = Keep<std::string>();
    auto* dist = Keep<std::string>();
    auto* k = Keep<double>(1.0);
    auto* gamma = Keep<double>(0.01);
    auto* eps = Keep<double>(0.01);
    auto* phi = Keep<std::string>("phi");
    s->add_option("--graph", *graph, "Graph JSON")->required();
    s->add_option("--dist", *dist, "Distribution JSON")->required();
    s->add_option("--k", *k, "Target size")->capture_default_str();
    s->add_option("--gamma", *gamma, "Welfare bonus")->capture_default_str();
    s->add_option("--eps", *eps, "Tolerance")->capture_default_str();
    s->add_option("--phi", *phi, "Deviation set")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        GraphPtr g = LoadGraph(*graph);
        DistPtr d = LoadDist(*dist);
        char* v = nullptr;
        Call(sce_lemma_conditioning(g.get(), *k, *gamma, d.get(), *eps,
                                    phi->c_str(), &v));
        return EmitVerdict(TakeJson(v), *out);
      };
    });
  }

  {
    auto* s = c->add_subcommand("probability-bounds",
                                "Per-action probability bounds");
    auto* graph = Keep<std::string>();
    auto* dist = Keep<std::string>();
    auto* k = Keep<double>(1.0);
    auto* gamma = Keep<double>(0.01);
    s->add_option("--graph", *graph, "Graph JSON")->required();
    s->add_option("--dist", *dist, "Distribution JSON")->required();
    s->add_option("--k", *k, "Target size")->capture_default_str();
    s->add_option("--gamma", *gamma, "Welfare bonus")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        GraphPtr g = LoadGraph(*graph);
        DistPtr d = LoadDist(*dist);
        char* v = nullptr;
        Call(sce_lemma_probability_bounds(g.get(), *k, *gamma, d.get(), &v));
        return EmitVerdict(TakeJson(v), *out);
      };
    });
  }

  {
    auto* s = c->add_subcommand("extract-is", "Threshold set extraction");
    auto* graph = Keep<std::string>();
    auto* dist = Keep<std::string>();
    auto* k = Keep<int>(1);
    auto* t = Keep<int>(0);
    s->add_option("--graph", *graph, "Graph JSON")->required();
    s->add_option("--dist", *dist, "Distribution JSON")->required();
    s->add_option("--k", *k, "Target size")->capture_default_str();
    s->add_option("--t", *t, "Component index")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        GraphPtr g = LoadGraph(*graph);
        DistPtr d = LoadDist(*dist);
        char* v = nullptr;
        Call(sce_lemma_extract_is(g.get(), *k, d.get(), *t, &v));
        return EmitVerdict(TakeJson(v), *out);
      };
    });
  }

  {
    auto* s = c->add_subcommand("stitch-dichotomy", "Per-component regime");
    auto* game = Keep<std::string>();
    auto* dist = Keep<std::string>();
    auto* k = Keep<double>(1.0);
    s->add_option("--game", *game, "Stitched game JSON")->required();
    s->add_option("--dist", *dist, "Distribution JSON")->required();
    s->add_option("--k", *k, "Penalty")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        GamePtr g = LoadGame(*game);
        DistPtr d = LoadDist(*dist);
        char* v = nullptr;
        Call(sce_lemma_stitch_dichotomy(g.get(), d.get(), *k, &v));
        return EmitVerdict(TakeJson(v), *out);
      };
    });
  }

  {
    auto* s = c->add_subcommand("stitch-restrict",
                                "Restriction to the bottom block");
    auto* game = Keep<std::string>();
    auto* enum_game = Keep<std::string>();
    auto* dist = Keep<std::string>();
    auto* eps = Keep<double>(0.01);
    auto* k = Keep<double>(1.0);
    auto* delta = Keep<double>(0.25);
    auto* soundness = Keep<double>(7.0);
    auto* drift = Keep<double>(2.0);
    auto* phi = Keep<std::string>("phi");
    s->add_option("--game", *game, "Stitched game JSON")->required();
    s->add_option("--enum", *enum_game, "Bottom-block game JSON")->required();
    s->add_option("--dist", *dist, "Distribution JSON")->required();
    s->add_option("--eps", *eps, "Input tolerance")->capture_default_str();
    s->add_option("--k", *k, "Penalty")->capture_default_str();
    s->add_option("--delta", *delta, "Reward block value")
        ->capture_default_str();
    s->add_option("--soundness-constant", *soundness, "Restricted CE factor")
        ->capture_default_str();
    s->add_option("--drift-constant", *drift, "Marginal drift factor")
        ->capture_default_str();
    s->add_option("--phi", *phi, "Deviation set")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        GamePtr g = LoadGame(*game);
        GamePtr e = LoadGame(*enum_game);
        DistPtr d = LoadDist(*dist);
        char* v = nullptr;
        Call(sce_lemma_stitch_restrict(g.get(), e.get(), d.get(), *eps, *k,
                                       *delta, *soundness, *drift,
                                       phi->c_str(), &v));
        return EmitVerdict(TakeJson(v), *out);
      };
    });
  }

  {
    auto* s = c->add_subcommand("enumhard-marginals",
                                "Marginal concentration near u(S)");
    auto* kind = Keep<std::string>("low");
    auto* game = Keep<std::string>();
    auto* set = Keep<std::string>();
    auto* dist = Keep<std::string>();
    auto* eps = Keep<double>(0.01);
    auto* constant = Keep<double>(-1.0);
    s->add_option("--kind", *kind, "low | gen-match | high")
        ->check(CLI::IsMember({"low", "gen-match", "high"}))
        ->capture_default_str();
    s->add_option("--game", *game, "Game JSON")->required();
    s->add_option("--set", *set, "Subset S");
    s->add_option("--dist", *dist, "Distribution JSON")->required();
    s->add_option("--eps", *eps, "Tolerance")->capture_default_str();
    s->add_option("--constant", *constant, "Bound factor (< 0: default)")
        ->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        GamePtr g = LoadGame(*game);
        DistPtr d = LoadDist(*dist);
        const std::vector<int> S = ParseSet(*set);
        char* v = nullptr;
        Call(sce_lemma_enumhard_marginals(kind->c_str(), g.get(), S.data(),
                                          static_cast<int>(S.size()), d.get(),
                                          *eps, *constant, &v));
        return EmitVerdict(TakeJson(v), *out);
      };
    });
  }
}

// ---- family, query, bruteforce --------------------------------------------

void AddFamily(CLI::App& app, std::function<int()>& run) {
  auto* s = app.add_subcommand("family", "Generate an enumeration-hard "
                               "family");
  auto* kind = Keep<std::string>("enumhard-high");
  auto* ell = Keep<int>(4);
  auto* n = Keep<int>(4);
  auto* packed = Keep<bool>(false);
  auto* min_l1 = Keep<double>(0.0);
  auto* out = Keep<std::string>();
  s->add_option("--kind", *kind, "enumhard-low | enumhard-high")
      ->check(CLI::IsMember({"enumhard-low", "enumhard-high"}))
      ->capture_default_str();
  s->add_option("--ell", *ell, "Ground set size (low)")
      ->capture_default_str();
  s->add_option("--n", *n, "Actions (high)")->capture_default_str();
  s->add_flag("--packed", *packed, "Greedy packing by L1 distance (low)");
  s->add_option("--min-l1", *min_l1, "Packing distance")
      ->capture_default_str();
  s->add_option("--out", *out, "Output file (stdout if omitted)")
      ->check(kOutputPath);
  s->callback([=, &run] {
    run = [=] {
      sce_family* f = nullptr;
      if (*kind == "enumhard-low") {
        Call(sce_family_enumhard_low(*ell, *packed, *min_l1, &f));
      } else {
        Call(sce_family_enumhard_high(*n, &f));
      }
      FamilyPtr owned(f);
      char* text = nullptr;
      Call(sce_family_to_json(f, &text));
      ctx.Emit(TakeJson(text), *out);
      return kExitOk;
    };
  });
}

void AddQuery(CLI::App& app, std::function<int()>& run) {
  auto* s = app.add_subcommand("query", "Oracle search for a hidden member");
  auto* family = Keep<std::string>();
  auto* hidden = Keep<std::string>();
  auto* eps = Keep<double>(1e-6);
  auto* order = Keep<std::string>("random");
  auto* seed = Keep<uint64_t>(0);
  auto* seeds = Keep<int>(1);
  auto* phi = Keep<std::string>("phi");
  auto* out = Keep<std::string>();
  s->add_option("--family", *family, "Family JSON")->required();
  s->add_option("--hidden", *hidden, "Key of the hidden game")->required();
  s->add_option("--eps", *eps, "Oracle tolerance")->capture_default_str();
  s->add_option("--order", *order, "random | fixed")
      ->check(CLI::IsMember({"random", "fixed"}))
      ->capture_default_str();
  s->add_option("--seed", *seed, "First seed")->capture_default_str();
  s->add_option("--seeds", *seeds, "Number of consecutive seeds")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  s->add_option("--phi", *phi, "Deviation set")->capture_default_str();
  s->add_option("--out", *out, "Output file (stdout if omitted)")
      ->check(kOutputPath);
  s->callback([=, &run] {
    run = [=] {
      FamilyPtr f = LoadFamily(*family);
      Json runs = Json::array();
      double total = 0.0;
      for (int i = 0; i < *seeds; ++i) {
        char* text = nullptr;
        Call(sce_query_harness(f.get(), hidden->c_str(), *eps,
                               order->c_str(), *seed + i, phi->c_str(),
                               &text));
        Json r = TakeJson(text);
        r["seed"] = *seed + i;
        total += r["queries"].get<double>();
        runs.push_back(std::move(r));
      }
      ctx.Emit(Json{{"runs", runs}, {"mean_queries", total / *seeds}}, *out);
      return kExitOk;
    };
  });
}

void AddBruteForce(CLI::App& app, std::function<int()>& run) {
  auto* s = app.add_subcommand("bruteforce", "Grid search for the sparse "
                               "distribution of least CE gap");
  auto* game = Keep<std::string>();
  auto* T = Keep<int>(1);
  auto* grid = Keep<int>(4);
  auto* phi = Keep<std::string>("phi");
  auto* out = Keep<std::string>();
  s->add_option("--game", *game, "Game JSON")->required();
  s->add_option("--T", *T, "Components")->capture_default_str();
  s->add_option("--grid", *grid, "Grid resolution")->capture_default_str();
  s->add_option("--phi", *phi, "Deviation set")->capture_default_str();
  s->add_option("--out", *out, "Output file (stdout if omitted)")
      ->check(kOutputPath);
  s->callback([=, &run] {
    run = [=] {
      GamePtr g = LoadGame(*game);
      sce_dist* d = nullptr;
      double gap = 0.0;
      Call(sce_brute_force(g.get(), *T, *grid, phi->c_str(), &d, &gap));
      DistPtr owned(d);
      char* text = nullptr;
      Call(sce_dist_to_json(d, &text));
      ctx.Emit(Json{{"dist", TakeJson(text)}, {"gap", gap}}, *out);
      return kExitOk;
    };
  });
}

// ---- pseudo ---------------------------------------------------------------

void AddPseudo(CLI::App& app, std::function<int()>& run) {
  auto* c = app.add_subcommand("pseudo", "Degree-2 pseudo-expectations");
  c->require_subcommand(1);
  c->fallthrough();
  auto* out = Keep<std::string>();
  c->add_option("--out", *out, "Output file (stdout if omitted)")
      ->check(kOutputPath);

  {
    auto* s = c->add_subcommand("check", "Validate a moment matrix");
    auto* moment = Keep<std::string>();
    auto* game = Keep<std::string>();
    auto* T = Keep<int>(1);
    auto* phi = Keep<std::string>("phi");
    auto* delta = Keep<double>(0.0);
    auto* tol = Keep<double>(1e-9);
    s->add_option("--moment", *moment, "Moment JSON")->required();
    s->add_option("--game", *game, "Game JSON for the sparse-CE system");
    s->add_option("--T", *T, "Components")->capture_default_str();
    s->add_option("--phi", *phi, "Deviation set")->capture_default_str();
    CLI::Option* delta_opt =
        s->add_option("--delta", *delta, "Utility floor");
    s->add_option("--tol", *tol, "Tolerance")->capture_default_str();
    s->callback([=, &run] {
      const bool has_delta = delta_opt->count() > 0;
      run = [=] {
        MomentPtr m = LoadMoment(*moment);
        GamePtr g;
        if (!game->empty()) g = LoadGame(*game);
        char* text = nullptr;
        Call(sce_pseudo_check(m.get(), g.get(), *T, phi->c_str(), has_delta,
                              *delta, *tol, &text));
        Json j = TakeJson(text);
        const bool valid = j.value("valid", false);
        ctx.Emit(j, *out);
        return valid ? kExitOk : kExitLemmaFailure;
      };
    });
  }

  {
    auto* s = c->add_subcommand("lift", "Lift a graph moment into the game");
    auto* moment = Keep<std::string>();
    auto* k = Keep<double>(1.0);
    auto* T = Keep<int>(1);
    auto* n = Keep<int>(1);
    s->add_option("--moment", *moment, "Moment JSON over graph vertices")
        ->required();
    s->add_option("--k", *k, "Target size")->capture_default_str();
    s->add_option("--T", *T, "Components")->capture_default_str();
    s->add_option("--n", *n, "Vertices")->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        MomentPtr m = LoadMoment(*moment);
        sce_moment* lifted = nullptr;
        Call(sce_pseudo_lift(m.get(), *k, *T, *n, &lifted));
        MomentPtr owned(lifted);
        char* text = nullptr;
        Call(sce_moment_to_json(lifted, &text));
        ctx.Emit(TakeJson(text), *out);
        return kExitOk;
      };
    });
  }

  {
    auto* s = c->add_subcommand("extend", "Pad a moment to the stitched game");
    auto* moment = Keep<std::string>();
    auto* n = Keep<int>(1);
    s->add_option("--moment", *moment, "Moment JSON")->required();
    s->add_option("--n", *n, "Actions of the original game")
        ->capture_default_str();
    s->callback([=, &run] {
      run = [=] {
        MomentPtr m = LoadMoment(*moment);
        sce_moment* ext = nullptr;
        Call(sce_pseudo_extend(m.get(), *n, &ext));
        MomentPtr owned(ext);
        char* text = nullptr;
        Call(sce_moment_to_json(ext, &text));
        ctx.Emit(TakeJson(text), *out);
        return kExitOk;
      };
    });
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Sparse correlated equilibria toolkit"};
  app.set_version_flag("--version", std::string(sce_version()));
  app.set_config("--config", "", "TOML or INI file with option defaults");
  app.require_subcommand(1);

  std::function<int()> run;
  AddConstruct(app, run);
  AddDynamics(app, run);
  AddVerify(app, run);
  AddLemma(app, run);
  AddFamily(app, run);
  AddQuery(app, run);
  AddBruteForce(app, run);
  AddPseudo(app, run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // Usage of the deepest subcommand that was recognized.
    const CLI::App* where = &app;
    while (!where->get_subcommands().empty()) {
      where = where->get_subcommands().front();
    }
    std::cerr << "error: " << e.what() << "\n\n" << where->help();
    return kExitValidation;
  }

  const CLI::App* leaf = &app;
  std::string command;
  while (!leaf->get_subcommands().empty()) {
    leaf = leaf->get_subcommands().front();
    command += (command.empty() ? "" : " ") + leaf->get_name();
  }
  ctx.command = command;
  ctx.app = leaf;
  Log(LogLevel::kDebug, "command: " + command);

  try {
    return run();
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace

int main(int argc, char** argv) { return Main(argc, argv); }
