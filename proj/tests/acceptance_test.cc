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

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "core/constructions.h"
#include "core/deviations.h"
#include "core/dynamics.h"
#include "core/equilibria.h"
#include "core/game.h"
#include "core/lemma_lab.h"
#include "core/pseudo.h"

namespace sparse_ce {
namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void Require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Matrix RandomMatrix(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = unif(rng);
  }
  return m;
}

BimatrixGame RandomGame(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix R = RandomMatrix(n, rng);
  Matrix C = RandomMatrix(n, rng);
  return BimatrixGame(R, C);
}

// Planted instances shared by criteria 2 to 4.
struct PlantedInstance {
  Graph graph;
  IndexSet planted;
  int k;
};

std::vector<PlantedInstance> PlantedInstances() {
  std::vector<PlantedInstance> out;
  for (int i = 0; i < 100; ++i) {
    const int n = 8 + (i * 7) % 25;   // 8..32
    const int k = 2 + i % 7;          // 2..8
    RandomGraphResult r =
        RandomGraph(n, GraphKind::kPlantedIndependentSet, k, 1000 + i);
    out.push_back({std::move(r.graph), std::move(r.planted), k});
  }
  return out;
}

// ---------------------------------------------------------------------------

Outcome RegretIdentity() {
  Outcome o;
  const DeviationSet devs = DeviationSet::Enumerate(DeviationKind::kPhi, 5);
  int checked = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const BimatrixGame game = RandomGame(5, seed);
    const Algorithm algo = seed % 2 == 0 ? Algorithm::kPhi : Algorithm::kMwu;
    auto mx = MakeMinimizer(algo, 5, DeviationKind::kPhi, seed);
    auto my = MakeMinimizer(algo, 5, DeviationKind::kPhi, seed + 1);
    const SelfPlayResult run = SelfPlay(game, *mx, *my, 100, seed);
    const CEReport rep = CeGap(game, run.dist, devs);
    const double rr = PhiRegret(run.log, devs, Player::kRow);
    const double rc = PhiRegret(run.log, devs, Player::kCol);
    const double err = std::max(std::abs(100.0 * rep.gap_row - rr),
                                std::abs(100.0 * rep.gap_col - rc));
    o.Require(err <= 1e-10, "seed " + std::to_string(seed) + " mismatch " +
                                std::to_string(err));
    ++checked;
  }
  o.detail = o.ok ? std::to_string(checked) + " runs" : o.detail;
  return o;
}

Outcome Completeness(const std::vector<PlantedInstance>& inst) {
  Outcome o;
  for (size_t i = 0; i < inst.size(); ++i) {
    const PlantedInstance& p = inst[i];
    const double gamma = 1.0 / (256.0 * p.k);
    const LemmaVerdict v = CheckCompletenessNe(p.graph, p.planted, gamma, p.k, 1);
    const double welfare = v.measured.at("welfare");
    o.Require(v.hypothesis_met && v.conclusion_met,
              "instance " + std::to_string(i) + " failed");
    o.Require(v.measured.at("nash_gap") <= 1e-12,
              "instance " + std::to_string(i) + " nash gap");
    o.Require(std::abs(welfare - (1.0 + gamma / p.k)) <= 1e-12,
              "instance " + std::to_string(i) + " welfare");
  }
  if (o.ok) o.detail = std::to_string(inst.size()) + " instances";
  return o;
}

Outcome Extraction(const std::vector<PlantedInstance>& inst,
                   std::vector<std::pair<int, SparseCorrelated>>* measured) {
  Outcome o;
  int checks = 0;
  for (size_t i = 0; i < inst.size(); ++i) {
    const PlantedInstance& p = inst[i];
    const int n = p.graph.n();
    for (int T : {1, 2, 4}) {
      const SparseCorrelated dist = PlantedProfile(p.planted, 2 * n, T);
      for (int t = 0; t < T; ++t) {
        const ExtractionResult r = ExtractIndependentSet(p.graph, p.k, dist, t);
        const std::string tag = "instance " + std::to_string(i) + " T=" +
                                std::to_string(T) + " t=" + std::to_string(t);
        o.Require(r.verdict.hypothesis_met && r.verdict.conclusion_met,
                  tag + " verdict");
        o.Require(r.set == p.planted, tag + " set differs from planted");
        o.Require(static_cast<double>(r.set.size()) >= p.k / (16.0 * T),
                  tag + " too small");
        o.Require(p.graph.IsIndependent(r.set), tag + " not independent");
        ++checks;
      }
      measured->emplace_back(static_cast<int>(i), dist);
    }
  }
  if (o.ok) o.detail = std::to_string(checks) + " extractions";
  return o;
}

Outcome ProbabilityBounds(
    const std::vector<PlantedInstance>& inst,
    const std::vector<std::pair<int, SparseCorrelated>>& measured) {
  Outcome o;
  int violations = 0;
  for (const auto& [i, dist] : measured) {
    const PlantedInstance& p = inst[i];
    const double gamma = 1.0 / (256.0 * p.k * std::pow(dist.T(), 3));
    const LemmaVerdict v = CheckProbabilityBounds(p.graph, p.k, gamma, dist);
    const double eps = v.measured.at("eps_cce");
    const double T = dist.T();
    for (int t = 0; t < dist.T(); ++t) {
      for (int a = 0; a < p.graph.n(); ++a) {
        const double x = dist.x(t)[a], y = dist.y(t)[a];
        if (x > (1.0 + gamma + 2.0 * eps) * T / p.k + 1e-9) ++violations;
        if (y > (1.0 + gamma + 2.0 * eps) * T / p.k + 1e-9) ++violations;
        if (x * y > 4.0 * T / (p.k * p.k) + 1e-9) ++violations;
      }
    }
    o.Require(v.conclusion_met, "validator rejected instance " +
                                    std::to_string(i));
    o.Require(v.measured.at("ref_premise") == 1.0,
              "premise unmet on instance " + std::to_string(i));
  }
  o.Require(violations == 0, std::to_string(violations) + " violations");
  if (o.ok) {
    o.detail = std::to_string(measured.size()) + " distributions, 0 violations";
  }
  return o;
}

Outcome ZeroSumBridgeCheck() {
  Outcome o;
  const int m = 4;
  const BimatrixGame game = MatchingPennies(m, false);
  MwuExternal mx(m, 7), my(m, 8);
  const SelfPlayResult run = SelfPlay(game, mx, my, 500, 7);
  const double g =
      CeGap(game, run.dist, DeviationSet::Enumerate(DeviationKind::kExternal, m))
          .epsilon_star;
  const ZeroSumBridge bridge = AvgToNashZeroSum(game, run.dist, g);
  o.Require(bridge.premise_met, "premise not met");
  o.Require(bridge.nash_gap <= 2.0 * g + 1e-9, "nash gap above 2g");
  const double drift =
      (bridge.x_avg.probs() - MixedStrategy::Uniform(m).probs()).lpNorm<1>();
  o.Require(drift <= 4.0 * m * m * g + 1e-9, "marginal drift above 4m^2 g");
  const LemmaVerdict v =
      CheckEnumhardMarginals(MarginalKind::kGenMatch, game, {}, run.dist, g);
  o.Require(v.hypothesis_met && v.conclusion_met, "gen-match validator");
  std::ostringstream ss;
  ss << "g=" << g << " nash_gap=" << bridge.nash_gap << " l1=" << drift;
  if (o.ok) o.detail = ss.str();
  return o;
}

Outcome EnumHardDistinct() {
  Outcome o;
  const GameFamily family = EnumHardHighFamily(4);
  o.Require(family.size() == 15, "family size " +
                                     std::to_string(family.size()));
  const DeviationSet devs = DeviationSet::Enumerate(DeviationKind::kPhi, 4);
  std::vector<Vector> marginals;
  for (const BimatrixGame& game : family.games) {
    const DenseCorrelated ce = ExactCeLp(game, devs, CeObjective::kNone);
    Vector both(8);
    both << ce.probs().rowwise().sum(), ce.probs().colwise().sum().transpose();
    marginals.push_back(both);
  }
  for (int a = 0; a < family.size(); ++a) {
    for (int b = a + 1; b < family.size(); ++b) {
      o.Require((marginals[a] - marginals[b]).lpNorm<1>() > 1e-6,
                "marginals of " + family.keys[a] + " and " + family.keys[b] +
                    " coincide");
    }
  }
  const double eps = 1e-4;
  const auto acceptance = FamilyAcceptance(family, eps, DeviationKind::kPhi);
  double total = 0.0;
  bool single = true, found = true;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    const int hidden = static_cast<int>(seed % family.size());
    const QueryResult r =
        QueryHarness(family, hidden, eps, QueryOrder::kRandom, seed,
                     DeviationKind::kPhi, acceptance);
    total += r.queries;
    single = single && r.single_elimination && r.distinct;
    found = found && r.found;
  }
  const double mean = total / 1000.0;
  o.Require(found, "hidden game not always found");
  o.Require(single, "a Reject eliminated more than one candidate");
  o.Require(mean >= 6.0 && mean <= 10.0,
            "mean queries " + std::to_string(mean));
  if (o.ok) o.detail = "mean queries " + std::to_string(mean);
  return o;
}

Outcome LowPrecisionMatrix() {
  Outcome o;
  const double printed[6][6] = {
      {1, 1, 1, 0, 0, 0},       {1, 0, 0, 1, 1, 0},
      {0, 1, 0, 1, 0, 1},       {0, 0, 1, 0, 1, 1},
      {-1, -1, -1, -1, -1, -1}, {-1, -1, -1, -1, -1, -1}};
  const IndexSet S = {0, 1, 2, 3};
  const BimatrixGame game = EnumHardLowGame(4, S);
  o.Require(game.n() == 6, "dimension");
  int mismatches = 0;
  for (int i = 0; i < 6 && o.ok; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (game.row_payoffs()(i, j) != printed[i][j]) ++mismatches;
    }
  }
  o.Require(mismatches == 0, std::to_string(mismatches) + " entries differ");
  if (o.ok) o.detail = "36/36 entries";
  return o;
}

// Stitched suite: bottom-block inputs, T = 2.
struct StitchInput {
  std::string name;
  BimatrixGame enum_game;
  SparseCorrelated block;  // distribution on the enumeration block
};

SparseCorrelated DynamicsBlockInput(const BimatrixGame& game) {
  const int n = game.n();
  std::vector<MixedStrategy> xs, ys;
  for (Algorithm algo : {Algorithm::kMwu, Algorithm::kPhi}) {
    auto mx = MakeMinimizer(algo, n, DeviationKind::kPhi, 11);
    auto my = MakeMinimizer(algo, n, DeviationKind::kPhi, 12);
    const SelfPlayResult run = SelfPlay(game, *mx, *my, 2000, 11);
    xs.push_back(MarginalAverage(run.dist, Player::kRow));
    ys.push_back(MarginalAverage(run.dist, Player::kCol));
  }
  return SparseCorrelated(std::move(xs), std::move(ys));
}

Outcome Stitching() {
  Outcome o;
  const int n = 6, T = 2;
  const double delta = 0.25;
  Graph triangle_free(3);
  triangle_free.AddEdge(0, 1);
  const BimatrixGame sos = IndependentSetGame(triangle_free, 2.0, 0.01, true);

  std::vector<StitchInput> inputs;
  {
    const IndexSet S = {0, 1, 2, 3};
    const BimatrixGame low = EnumHardLowGame(4, S);
    const SparseCorrelated planted = SparseCorrelated::Repeat(
        MixedStrategy::UniformOver(n, S), MixedStrategy::Uniform(n), T);
    inputs.push_back({"low planted", low, planted});
    inputs.push_back({"low dynamics", low, DynamicsBlockInput(low)});
  }
  {
    const IndexSet S = {1, 4};
    const BimatrixGame high = EnumHardHighGame(n, S);
    const MixedStrategy u = MixedStrategy::UniformOver(n, S);
    inputs.push_back({"high planted", high, SparseCorrelated::Repeat(u, u, T)});
    inputs.push_back({"high dynamics", high, DynamicsBlockInput(high)});
  }

  std::ostringstream detail;
  IndexSet bottom(n);
  for (int i = 0; i < n; ++i) bottom[i] = n + i;
  for (const StitchInput& in : inputs) {
    const double block_gap =
        CeGap(in.enum_game, in.block,
              DeviationSet::Enumerate(DeviationKind::kPhi, n))
            .epsilon_star;
    const double eps_prime = std::max(block_gap, 1e-3);
    const double k = std::ceil(60.0 * T / eps_prime);
    StitchParams params;
    params.delta = delta;
    params.k = k;
    const BimatrixGame stitched = StitchedGame(sos, in.enum_game, params);
    const SparseCorrelated dist = EmbedBlock(in.block, bottom, bottom, 2 * n);
    const double measured =
        CeGap(stitched, dist, DeviationSet::Enumerate(DeviationKind::kPhi, 2 * n))
            .epsilon_star;
    o.Require(measured <= eps_prime + 1e-12,
              in.name + ": input is not an eps'-CE of the stitched game");
    o.Require(k >= 12.0 * T, in.name + ": k below 12T");

    const LemmaVerdict dich = CheckStitchDichotomy(stitched, dist, k);
    o.Require(dich.hypothesis_met && dich.conclusion_met,
              in.name + ": dichotomy");
    const LemmaVerdict rv =
        RestrictAndVerifyStitched(stitched, in.enum_game, dist, eps_prime, k,
                                  delta);
    o.Require(rv.hypothesis_met, in.name + ": restriction hypothesis unmet");
    o.Require(rv.conclusion_met, in.name + ": restriction conclusion");
    o.Require(rv.measured.at("x_U_max") <= eps_prime &&
                  rv.measured.at("y_U_max") <= eps_prime,
              in.name + ": top mass above eps'");
    o.Require(rv.measured.at("restricted_gap") <= 7.0 * eps_prime,
              in.name + ": restricted gap");
    o.Require(rv.measured.at("drift_x") <= 2.0 * eps_prime &&
                  rv.measured.at("drift_y") <= 2.0 * eps_prime,
              in.name + ": drift");
    detail << in.name << " eps'=" << eps_prime << " k=" << k << "; ";
  }
  if (o.ok) o.detail = detail.str();
  return o;
}

Outcome PseudoSuite() {
  Outcome o;
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);

  // True distributions.
  int valid = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 7;
    const int count = 1 + trial % 5;
    std::vector<std::pair<double, Vector>> pts;
    double total = 0.0;
    for (int c = 0; c < count; ++c) {
      Vector z(m);
      for (int i = 0; i < m; ++i) z[i] = unif(rng);
      const double w = 0.1 + unif(rng);
      total += w;
      pts.emplace_back(w, z);
    }
    for (auto& p : pts) p.first /= total;
    const PseudoCheck c = CheckPseudo(MomentFromDistribution(pts), {});
    if (c.valid()) ++valid;
  }
  o.Require(valid == 200, std::to_string(valid) + "/200 true distributions");

  // Crafted failures with certificates.
  int certified = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 2 + trial % 6;
    Vector z(m);
    for (int i = 0; i < m; ++i) z[i] = unif(rng);
    const MomentMatrix base = MomentFromDistribution({{1.0, z}});
    if (trial % 2 == 0) {
      Vector v = Vector::Zero(m + 1);
      for (int i = 1; i <= m; ++i) v[i] = normal(rng);
      v.normalize();
      const double dip = v.dot(base.matrix() * v) + 0.1 + unif(rng);
      const MomentMatrix bad(base.matrix() - dip * v * v.transpose());
      const PseudoCheck c = CheckPseudo(bad, {});
      const bool ok = c.status == PseudoStatus::kPositivity &&
                      c.min_eigenvalue < 0.0 &&
                      std::abs(c.eigenvector.norm() - 1.0) < 1e-9 &&
                      std::abs(c.eigenvector.dot(bad.matrix() * c.eigenvector) -
                               c.min_eigenvalue) < 1e-9;
      if (ok) ++certified;
    } else {
      // sum_i z_i = s with s != the true sum.
      QuadraticConstraint eq;
      eq.constant = -(z.sum() + 0.5 + unif(rng));
      eq.linear = Vector::Ones(m);
      eq.quadratic = Matrix::Zero(m, m);
      eq.sense = QuadraticSense::kEq;
      QuadraticConstraint fine;
      fine.constant = 0.0;
      fine.linear = Vector::Zero(m);
      fine.quadratic = Matrix::Identity(m, m);
      fine.sense = QuadraticSense::kGeq;
      const PseudoCheck c = CheckPseudo(base, {fine, eq});
      const bool ok = c.status == PseudoStatus::kConstraint &&
                      c.constraint_index == 1 &&
                      std::abs(c.value - PseudoExpectation(base, eq)) < 1e-12 &&
                      std::abs(c.value) > 1e-9;
      if (ok) ++certified;
    }
  }
  o.Require(certified == 200, std::to_string(certified) +
                                  "/200 crafted matrices certified");

  // Lifts of planted independent sets.
  int lifts = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const int nv = 5 + trial % 4;
    const int k = 2 + trial % 3;
    const int T = 1 + trial % 2;
    const RandomGraphResult r =
        RandomGraph(nv, GraphKind::kPlantedIndependentSet, k, 500 + trial);
    Vector z = Vector::Zero(nv);
    for (int i : r.planted) z[i] = 1.0;
    const MomentMatrix mz = MomentFromDistribution({{1.0, z}});
    const double gamma = 0.01;
    const BimatrixGame game = IndependentSetGame(r.graph, k, gamma);
    const MomentMatrix lifted = LiftIsToGame(mz, k, T, nv);
    const double floor = (1.0 + gamma / k) / 2.0;
    const PseudoCheck c = CheckPseudo(
        lifted, PseudoCeConstraints(game, T,
                                    DeviationSet::Enumerate(DeviationKind::kPhi,
                                                            2 * nv),
                                    floor));
    o.Require(c.valid(), "lift invalid on trial " + std::to_string(trial) +
                             " (" + PseudoStatusName(c.status) + ")");
    // Stitching needs payoffs in [-1, 1]: use the game divided by k, whose
    // planted utility per player is floor / k.
    const int n = game.n();
    StitchParams params;
    params.delta = floor / k;
    const BimatrixGame stitched =
        StitchedGame(IndependentSetGame(r.graph, k, gamma, true),
                     EnumHardHighGame(n, IndexSet{0, 1}), params);
    const MomentMatrix extended = ExtendToStitched(lifted, n);
    const PseudoCheck ce = CheckPseudo(
        extended,
        PseudoCeConstraints(stitched, T,
                            DeviationSet::Enumerate(DeviationKind::kPhi, 2 * n),
                            params.delta));
    o.Require(ce.valid(), "extension invalid on trial " +
                              std::to_string(trial) + " (" +
                              PseudoStatusName(ce.status) + ")");
    ++lifts;
  }
  if (o.ok) {
    o.detail = "200 valid, 200 certified, " + std::to_string(lifts) + " lifts";
  }
  return o;
}

// Independent scan over the same grid and order as the library.
struct ScanResult {
  std::vector<Vector> xs, ys;
  double gap = 0.0;
};

double ScanGap(const BimatrixGame& game, const std::vector<Vector>& xs,
               const std::vector<Vector>& ys) {
  const int n = game.n();
  const int T = static_cast<int>(xs.size());
  // All maps [n] -> [n].
  std::vector<std::vector<int>> maps;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(n);
    int c = code;
    for (int i = 0; i < n; ++i) {
      f[i] = c % n;
      c /= n;
    }
    maps.push_back(f);
  }
  double best_row = 0.0, best_col = 0.0;
  for (const auto& f : maps) {
    double gr = 0.0, gc = 0.0;
    for (int t = 0; t < T; ++t) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const double p = xs[t][i] * ys[t][j] / T;
          gr += p * (game.row_payoffs()(f[i], j) - game.row_payoffs()(i, j));
          gc += p * (game.col_payoffs()(i, f[j]) - game.col_payoffs()(i, j));
        }
      }
    }
    best_row = std::max(best_row, gr);
    best_col = std::max(best_col, gc);
  }
  return std::max(best_row, best_col);
}

ScanResult IndependentScan(const BimatrixGame& game, int T, int grid) {
  std::vector<Vector> points;
  for (int a = 0; a <= grid; ++a) {
    Vector v(2);
    v << static_cast<double>(a) / grid, static_cast<double>(grid - a) / grid;
    points.push_back(v);
  }
  const int slots = 2 * T;
  std::vector<int> idx(slots, 0);
  ScanResult best;
  bool have = false;
  while (true) {
    std::vector<Vector> xs, ys;
    for (int s = 0; s < T; ++s) xs.push_back(points[idx[s]]);
    for (int s = 0; s < T; ++s) ys.push_back(points[idx[T + s]]);
    const double gap = ScanGap(game, xs, ys);
    if (!have || gap < best.gap - 1e-12) {
      best = {xs, ys, gap};
      have = true;
    }
    int pos = slots - 1;
    while (pos >= 0 && ++idx[pos] == static_cast<int>(points.size())) {
      idx[pos--] = 0;
    }
    if (pos < 0) break;
  }
  return best;
}

Outcome OracleCrossCheck() {
  Outcome o;
  const DeviationSet swap2 = DeviationSet::Enumerate(DeviationKind::kSwap, 2);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const BimatrixGame game = RandomGame(2, 300 + seed);
    const int T = seed % 2 == 0 ? 1 : 2;
    const int grid = T == 1 ? 12 : 4;
    const BruteForceResult lib = BruteForceMinGap(game, T, grid, swap2);
    const ScanResult ref = IndependentScan(game, T, grid);
    bool same = std::abs(lib.gap - ref.gap) <= 1e-12;
    for (int t = 0; t < T && same; ++t) {
      same = lib.dist.x(t).probs() == ref.xs[t] &&
             lib.dist.y(t).probs() == ref.ys[t];
    }
    o.Require(same, "brute force disagrees on seed " + std::to_string(seed));
  }
  int lps = 0;
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 2 + seed % 4;
    const BimatrixGame game = RandomGame(n, 700 + seed);
    for (DeviationKind kind : {DeviationKind::kPhi, DeviationKind::kSwap}) {
      const DeviationSet devs = DeviationSet::Enumerate(kind, n);
      for (CeObjective obj : {CeObjective::kNone, CeObjective::kMaxWelfare}) {
        const DenseCorrelated ce = ExactCeLp(game, devs, obj);
        o.Require(VerificationOracle(game, ce, 1e-8, devs) == Verdict::kAccept,
                  "LP output rejected on seed " + std::to_string(seed));
        ++lps;
      }
    }
  }
  if (o.ok) o.detail = "50 scans agree, " + std::to_string(lps) + " LP outputs accepted";
  return o;
}

}  // namespace
}  // namespace sparse_ce

int main() {
  using namespace sparse_ce;
  using Clock = std::chrono::steady_clock;
  int failed = 0;

  auto run = [&](int id, const char* name, double limit_s,
                 const std::function<Outcome()>& fn) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (limit_s > 0.0 && secs >= limit_s) {
      o.ok = false;
      o.detail += " (runtime limit exceeded)";
    }
    if (!o.ok) ++failed;
    std::printf("[%s] criterion %d %s: %s (%.2fs)\n", o.ok ? "PASS" : "FAIL",
                id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  };

  const std::vector<PlantedInstance> inst = PlantedInstances();
  std::vector<std::pair<int, SparseCorrelated>> measured;

  run(1, "regret-to-CE identity", 10.0, RegretIdentity);
  run(2, "completeness", 5.0, [&] { return Completeness(inst); });
  run(3, "independent-set extraction", 5.0,
      [&] { return Extraction(inst, &measured); });
  run(4, "probability bounds", 0.0,
      [&] { return ProbabilityBounds(inst, measured); });
  run(5, "zero-sum bridge", 5.0, ZeroSumBridgeCheck);
  run(6, "enumeration-hard distinctness", 0.0, EnumHardDistinct);
  run(7, "low-precision matrix", 0.0, LowPrecisionMatrix);
  run(8, "stitching suite", 30.0, Stitching);
  run(9, "pseudo-expectation suite", 10.0, PseudoSuite);
  run(10, "oracle cross-check", 0.0, OracleCrossCheck);

  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
