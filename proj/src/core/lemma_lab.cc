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

#include "core/lemma_lab.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <utility>

namespace sparse_ce {
namespace {

// Enumerated sets are reused across calls on the same thread.
const DeviationSet& Devs(DeviationKind kind, int n) {
  thread_local std::map<std::pair<DeviationKind, int>, DeviationSet> cache;
  const auto key = std::make_pair(kind, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, DeviationSet::Enumerate(kind, n)).first;
  }
  return it->second;
}

LemmaVerdict NewVerdict(const std::string& id) {
  LemmaVerdict v;
  v.lemma_id = id;
  v.slack = std::numeric_limits<double>::infinity();
  return v;
}

// Records measured <= threshold (+ kLemmaSlack) and returns whether it holds.
bool Bound(LemmaVerdict& v, const std::string& name, double measured,
           double threshold) {
  v.measured[name] = measured;
  v.threshold[name] = threshold;
  v.slack = std::min(v.slack, threshold - measured);
  return measured <= threshold + kLemmaSlack;
}

IndexSet Range(int begin, int end) {
  IndexSet out(end - begin);
  std::iota(out.begin(), out.end(), begin);
  return out;
}

double MaxOverT(const SparseCorrelated& dist, Player p,
                std::span<const int> block) {
  double best = 0.0;
  for (const MixedStrategy& s : dist.strategies(p)) {
    best = std::max(best, s.MassOn(block));
  }
  return best;
}

BimatrixGame TopLeft(const BimatrixGame& game, int n) {
  return BimatrixGame(game.row_payoffs().topLeftCorner(n, n),
                      game.col_payoffs().topLeftCorner(n, n));
}

void CheckTopSupport(const SparseCorrelated& dist, int n) {
  const IndexSet bottom = Range(n, 2 * n);
  Check(MaxOverT(dist, Player::kRow, bottom) <= kLemmaSlack &&
            MaxOverT(dist, Player::kCol, bottom) <= kLemmaSlack,
        ErrorCode::kInvalidArgument,
        "distribution is not supported on the top block");
}

}  // namespace

LemmaVerdict CheckCompletenessNe(const Graph& g, std::span<const int> S,
                                 double gamma, int k, int T) {
  LemmaVerdict v = NewVerdict("completeness");
  const IndexSet s = NormalizeIndexSet(S, g.n());
  v.measured["set_size"] = static_cast<double>(s.size());
  v.threshold["k"] = k;
  v.hypothesis_met =
      !s.empty() && static_cast<int>(s.size()) == k && g.IsIndependent(s);
  if (s.empty()) return v;
  const BimatrixGame game = IndependentSetGame(g, k, gamma);
  const SparseCorrelated dist = PlantedProfile(s, game.n(), T);
  const double gap = NashGap(game, dist.x(0), dist.y(0));
  const double welfare = SocialWelfare(game, dist);
  const double target = 1.0 + gamma / k;
  v.measured["nash_gap"] = gap;
  v.threshold["nash_gap"] = 1e-12;
  v.measured["welfare"] = welfare;
  v.threshold["welfare"] = target;
  v.slack = std::min(1e-12 - gap, 1e-12 - std::abs(welfare - target));
  v.conclusion_met = gap <= 1e-12 && std::abs(welfare - target) <= 1e-12;
  return v;
}

LemmaVerdict CheckConditioning(const Graph& g, double k, double gamma,
                               const SparseCorrelated& dist, double eps,
                               DeviationKind kind) {
  LemmaVerdict v = NewVerdict("conditioning");
  const BimatrixGame game = IndependentSetGame(g, k, gamma);
  const int n = g.n();
  const DeviationSet& devs = Devs(kind, 2 * n);
  const CEReport rep = CeGap(game, dist, devs);
  v.measured["eps_measured"] = rep.epsilon_star;
  v.threshold["eps"] = eps;
  v.measured["welfare"] = rep.welfare;
  v.threshold["welfare_min"] = 1.0;
  v.hypothesis_met = rep.epsilon_star <= eps + kOracleSlack &&
                     rep.welfare >= 1.0 - kOracleSlack;
  if (!v.hypothesis_met) return v;
  const IndexSet top = Range(0, n);
  const SparseCorrelated cond =
      EmbedBlock(ConditionToBlock(dist, top, top), top, top, 2 * n);
  v.conclusion_met = Bound(v, "conditioned_gap",
                           CeGap(game, cond, devs).epsilon_star,
                           eps + 4.0 * gamma * k);
  return v;
}

LemmaVerdict CheckProbabilityBounds(const Graph& g, double k, double gamma,
                                    const SparseCorrelated& dist) {
  LemmaVerdict v = NewVerdict("probability_bounds");
  const int n = g.n();
  const BimatrixGame game = IndependentSetGame(g, k, gamma);
  CheckDimension(game.n(), dist.n(), "distribution");
  CheckTopSupport(dist, n);
  v.hypothesis_met = true;
  const double eps_cce =
      CeGap(game, dist, Devs(DeviationKind::kExternal, 2 * n)).epsilon_star;
  const double eps_ce =
      CeGap(game, dist, Devs(DeviationKind::kPhi, 2 * n)).epsilon_star;
  const int T = dist.T();
  v.measured["eps_cce"] = eps_cce;
  v.measured["eps_ce"] = eps_ce;
  double max_entry = 0.0, max_product = 0.0;
  for (int t = 0; t < T; ++t) {
    for (int i = 0; i < n; ++i) {
      max_entry = std::max({max_entry, dist.x(t)[i], dist.y(t)[i]});
      max_product = std::max(max_product, dist.x(t)[i] * dist.y(t)[i]);
    }
  }
  const bool ub =
      Bound(v, "max_entry", max_entry, (1.0 + gamma + 2.0 * eps_cce) * T / k);
  const bool ref_premise = eps_ce <= 1.0 / (k * k) + kOracleSlack &&
                           gamma <= 0.25;
  v.measured["ref_premise"] = ref_premise ? 1.0 : 0.0;
  bool ref = true;
  if (ref_premise) {
    ref = Bound(v, "max_product", max_product, 4.0 * T / (k * k));
  } else {
    v.measured["max_product"] = max_product;
  }
  v.conclusion_met = ub && ref;
  return v;
}

ExtractionResult ExtractIndependentSet(const Graph& g, int k,
                                       const SparseCorrelated& dist, int t) {
  ExtractionResult out{{}, NewVerdict("independent_set_extraction")};
  LemmaVerdict& v = out.verdict;
  const int n = g.n();
  const int T = dist.T();
  Check(t >= 0 && t < T, ErrorCode::kInvalidArgument, "component out of range");
  const double gamma = 1.0 / (256.0 * k * std::pow(T, 3));
  const BimatrixGame game = IndependentSetGame(g, k, gamma);
  CheckDimension(game.n(), dist.n(), "distribution");
  CheckTopSupport(dist, n);

  const double cut = 1.0 / (16.0 * k * T);
  v.threshold["entry_cut"] = cut;
  for (int i = 0; i < n; ++i) {
    if (dist.x(t)[i] >= cut && dist.y(t)[i] >= cut) out.set.push_back(i);
  }

  const double gap =
      CeGap(game, dist, Devs(DeviationKind::kPhi, 2 * n)).epsilon_star;
  const double welfare = SocialWelfare(game, dist);
  const double wt = ExpectedUtility(game, dist.x(t), dist.y(t), Player::kRow) +
                    ExpectedUtility(game, dist.x(t), dist.y(t), Player::kCol);
  const double wmin = 1.0 + 3.0 * gamma / (4.0 * k);
  v.measured["gamma"] = gamma;
  v.measured["eps_measured"] = gap;
  v.threshold["eps"] = 1.0 / (4.0 * k * k);
  v.measured["welfare"] = welfare;
  v.measured["component_welfare"] = wt;
  v.threshold["welfare_min"] = wmin;
  v.hypothesis_met = gap <= 1.0 / (4.0 * k * k) + kOracleSlack &&
                     welfare >= wmin - kOracleSlack &&
                     wt >= wmin - kOracleSlack;
  const double size = static_cast<double>(out.set.size());
  v.measured["set_size"] = size;
  v.threshold["set_size_min"] = k / (16.0 * T);
  v.slack = size - k / (16.0 * T);
  const bool independent = g.IsIndependent(out.set);
  v.measured["independent"] = independent ? 1.0 : 0.0;
  v.conclusion_met = independent && size >= k / (16.0 * T) - kLemmaSlack;
  return out;
}

LemmaVerdict CheckStitchDichotomy(const BimatrixGame& stitched,
                                  const SparseCorrelated& dist, double k) {
  LemmaVerdict v = NewVerdict("stitch_dichotomy");
  Check(stitched.n() % 2 == 0, ErrorCode::kDimensionMismatch,
        "stitched game must have even dimension");
  const int n = stitched.n() / 2;
  const int T = dist.T();
  const double cce =
      CeGap(stitched, dist, Devs(DeviationKind::kExternal, 2 * n)).epsilon_star;
  v.measured["eps_cce"] = cce;
  v.threshold["eps_cce"] = 0.5;
  v.measured["k"] = k;
  v.threshold["k_min"] = 12.0 * T;
  v.hypothesis_met = cce <= 0.5 + kOracleSlack && k >= 12.0 * T;
  const double b = 6.0 * T / k;
  v.threshold["band"] = b;
  const IndexSet top = Range(0, n);
  bool all = true;
  for (int t = 0; t < T; ++t) {
    const double xu = dist.x(t).MassOn(top), yu = dist.y(t).MassOn(top);
    v.measured["x_U_" + std::to_string(t)] = xu;
    v.measured["y_U_" + std::to_string(t)] = yu;
    std::string regime = "none";
    if (xu <= b + kLemmaSlack && yu <= b + kLemmaSlack) {
      regime = "low";
    } else if (xu >= 1.0 - b - kLemmaSlack && yu >= 1.0 - b - kLemmaSlack) {
      regime = "high";
    } else {
      all = false;
    }
    v.notes["regime_" + std::to_string(t)] = regime;
  }
  v.conclusion_met = all;
  return v;
}

LemmaVerdict RestrictAndVerifyStitched(const BimatrixGame& stitched,
                                       const BimatrixGame& enum_game,
                                       const SparseCorrelated& dist,
                                       double eps_prime, double k,
                                       double delta,
                                       const StitchCheckOptions& options) {
  LemmaVerdict v = NewVerdict("stitch_restrict");
  Check(stitched.n() % 2 == 0, ErrorCode::kDimensionMismatch,
        "stitched game must have even dimension");
  const int n = stitched.n() / 2;
  CheckDimension(n, enum_game.n(), "enumeration block");
  CheckDimension(stitched.n(), dist.n(), "distribution");
  Check(eps_prime > 0.0, ErrorCode::kInvalidArgument, "eps' must be > 0");
  const int T = dist.T();
  const IndexSet top = Range(0, n), bottom = Range(n, 2 * n);

  const double gap =
      CeGap(stitched, dist, Devs(options.kind, 2 * n)).epsilon_star;
  v.measured["eps_measured"] = gap;
  v.threshold["eps_prime"] = eps_prime;
  v.measured["k"] = k;
  v.threshold["k_min_dichotomy"] = 12.0 * T;
  v.threshold["k_min_small"] = 60.0 * T / eps_prime;

  // A high-welfare top-block component would contradict the hardness premise
  // of the top game; such inputs fall outside the statement.
  std::vector<MixedStrategy> wx, wy;
  const double band = 6.0 * T / k;
  for (int t = 0; t < T; ++t) {
    if (dist.x(t).MassOn(top) >= 1.0 - band &&
        dist.y(t).MassOn(top) >= 1.0 - band) {
      wx.push_back(dist.x(t));
      wy.push_back(dist.y(t));
    }
  }
  bool witness = false;
  if (!wx.empty()) {
    const SparseCorrelated cond = ConditionToBlock(
        SparseCorrelated(std::move(wx), std::move(wy)), top, top);
    const double w = SocialWelfare(TopLeft(stitched, n), cond);
    v.measured["top_witness_welfare"] = w;
    witness = w > 2.0 * delta - 4.0 * eps_prime;
  }
  v.threshold["top_welfare_cap"] = 2.0 * delta - 4.0 * eps_prime;
  v.measured["top_witness"] = witness ? 1.0 : 0.0;
  v.hypothesis_met = gap <= eps_prime + kOracleSlack && eps_prime <= 0.5 &&
                     k >= 12.0 * T && k >= 60.0 * T / eps_prime && !witness;

  const bool mass =
      Bound(v, "x_U_max", MaxOverT(dist, Player::kRow, top), eps_prime) &
      Bound(v, "y_U_max", MaxOverT(dist, Player::kCol, top), eps_prime);
  if (!mass) {
    v.conclusion_met = false;
    return v;
  }
  const SparseCorrelated restricted = ConditionToBlock(dist, bottom, bottom);
  const double restricted_gap =
      CeGap(enum_game, restricted, Devs(options.kind, n)).epsilon_star;
  const bool sound = Bound(v, "restricted_gap", restricted_gap,
                           options.soundness_constant * eps_prime);
  const SparseCorrelated lifted = EmbedBlock(restricted, bottom, bottom, 2 * n);
  const double drift_x = (MarginalAverage(dist, Player::kRow).probs() -
                          MarginalAverage(lifted, Player::kRow).probs())
                             .lpNorm<1>();
  const double drift_y = (MarginalAverage(dist, Player::kCol).probs() -
                          MarginalAverage(lifted, Player::kCol).probs())
                             .lpNorm<1>();
  const bool drift =
      Bound(v, "drift_x", drift_x, options.drift_constant * eps_prime) &
      Bound(v, "drift_y", drift_y, options.drift_constant * eps_prime);
  v.conclusion_met = sound && drift;
  return v;
}

const char* MarginalKindName(MarginalKind kind) {
  switch (kind) {
    case MarginalKind::kLow: return "low";
    case MarginalKind::kGenMatch: return "gen-match";
    case MarginalKind::kHigh: return "high";
  }
  return "?";
}

MarginalKind ParseMarginalKind(const std::string& name) {
  if (name == "low") return MarginalKind::kLow;
  if (name == "gen-match") return MarginalKind::kGenMatch;
  if (name == "high") return MarginalKind::kHigh;
  Fail(ErrorCode::kInvalidArgument, "unknown marginal kind '" + name + "'");
}

double DefaultMarginalConstant(MarginalKind kind, int n) {
  switch (kind) {
    case MarginalKind::kLow: return 144.0;
    case MarginalKind::kGenMatch: return 4.0 * n * n;
    case MarginalKind::kHigh: return 140.0 * n * n;
  }
  return 0.0;
}

LemmaVerdict CheckEnumhardMarginals(MarginalKind kind, const BimatrixGame& game,
                                    std::span<const int> S,
                                    const SparseCorrelated& dist, double eps,
                                    double constant) {
  LemmaVerdict v = NewVerdict(std::string("enumhard_marginals_") +
                              MarginalKindName(kind));
  const int n = game.n();
  CheckDimension(n, dist.n(), "distribution");
  if (constant < 0.0) constant = DefaultMarginalConstant(kind, n);
  const MixedStrategy target = kind == MarginalKind::kGenMatch
                                   ? MixedStrategy::Uniform(n)
                                   : MixedStrategy::UniformOver(n, S);
  const double cce =
      CeGap(game, dist, Devs(DeviationKind::kExternal, n)).epsilon_star;
  v.measured["eps_measured"] = cce;
  v.threshold["eps"] = eps;
  v.threshold["constant"] = constant;
  v.hypothesis_met = cce <= eps + kOracleSlack;
  if (kind == MarginalKind::kLow) v.hypothesis_met &= 17.0 * eps < 1.0;
  const double dist_l1 =
      (MarginalAverage(dist, Player::kRow).probs() - target.probs())
          .lpNorm<1>();
  v.conclusion_met = Bound(v, "l1_distance", dist_l1, constant * eps);
  return v;
}

SparseCorrelated PlantedFamilyEquilibrium(const GameFamily& family, int index) {
  Check(index >= 0 && index < family.size(), ErrorCode::kInvalidArgument,
        "family index out of range");
  const int n = family.games[index].n();
  const MixedStrategy x = MixedStrategy::UniformOver(n, family.sets[index]);
  const MixedStrategy y = family.kind == FamilyKind::kEnumHardHigh
                              ? x
                              : MixedStrategy::Uniform(n);
  return SparseCorrelated::Repeat(x, y, 1);
}

std::vector<std::vector<bool>> FamilyAcceptance(const GameFamily& family,
                                                double eps,
                                                DeviationKind kind) {
  const int F = family.size();
  Check(F >= 1, ErrorCode::kInvalidArgument, "empty family");
  const DeviationSet& devs = Devs(kind, family.games.front().n());
  std::vector<SparseCorrelated> eq;
  for (int a = 0; a < F; ++a) eq.push_back(PlantedFamilyEquilibrium(family, a));
  std::vector<std::vector<bool>> accept(F, std::vector<bool>(F));
  for (int a = 0; a < F; ++a) {
    for (int b = 0; b < F; ++b) {
      accept[a][b] = VerificationOracle(family.games[b], eq[a], eps, devs) ==
                     Verdict::kAccept;
    }
  }
  return accept;
}

QueryResult QueryHarness(const GameFamily& family, int hidden, double eps,
                         QueryOrder order, uint64_t seed, DeviationKind kind) {
  return QueryHarness(family, hidden, eps, order, seed, kind,
                      FamilyAcceptance(family, eps, kind));
}

QueryResult QueryHarness(const GameFamily& family, int hidden, double eps,
                         QueryOrder order, uint64_t seed, DeviationKind kind,
                         const std::vector<std::vector<bool>>& acceptance) {
  const int F = family.size();
  Check(hidden >= 0 && hidden < F, ErrorCode::kInvalidArgument,
        "hidden index out of range");
  Check(static_cast<int>(acceptance.size()) == F, ErrorCode::kDimensionMismatch,
        "acceptance matrix does not match the family");
  QueryResult result;
  result.distinct = true;
  for (int a = 0; a < F; ++a) {
    for (int b = 0; b < F; ++b) {
      if (acceptance[a][b] != (a == b)) result.distinct = false;
    }
  }
  std::vector<int> perm(F);
  std::iota(perm.begin(), perm.end(), 0);
  if (order == QueryOrder::kRandom) {
    std::mt19937_64 rng(seed);
    for (int i = F - 1; i > 0; --i) {
      const int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
      std::swap(perm[i], perm[j]);
    }
  }
  const DeviationSet& devs = Devs(kind, family.games[hidden].n());
  result.single_elimination = true;
  for (int c : perm) {
    ++result.queries;
    const Verdict answer =
        VerificationOracle(family.games[hidden],
                           PlantedFamilyEquilibrium(family, c), eps, devs);
    if (answer == Verdict::kAccept) {
      result.found = true;
      break;
    }
    int eliminated = 0;
    for (int b = 0; b < F; ++b) eliminated += acceptance[c][b] ? 1 : 0;
    if (eliminated != 1) result.single_elimination = false;
  }
  return result;
}

}  // namespace sparse_ce
