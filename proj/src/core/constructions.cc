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

#include "core/constructions.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace sparse_ce {
namespace {

BimatrixGame GraphGame(const Matrix& top_left, double k, double gamma,
                       bool rescale, const std::string& label) {
  Check(k >= 1.0, ErrorCode::kInvalidArgument, "k must be >= 1");
  Check(gamma > 0.0, ErrorCode::kInvalidArgument, "gamma must be > 0");
  const int n = static_cast<int>(top_left.rows());
  const Matrix I = Matrix::Identity(n, n);
  Matrix R = Matrix::Zero(2 * n, 2 * n);
  Matrix C = Matrix::Zero(2 * n, 2 * n);
  R.topLeftCorner(n, n) = top_left;
  C.topLeftCorner(n, n) = top_left;
  R.topRightCorner(n, n) = -k * I;
  R.bottomLeftCorner(n, n) = k * I;
  C.topRightCorner(n, n) = k * I;
  C.bottomLeftCorner(n, n) = -k * I;
  R *= 0.5;
  C *= 0.5;
  if (rescale) {
    R /= k;
    C /= k;
  }
  return BimatrixGame(std::move(R), std::move(C), label);
}

Matrix AdjacencyAsDouble(const Graph& g) {
  return g.adjacency().cast<double>();
}

// Shifted (I_m, -I_m); m = 1 included.
void FillShiftedPennies(int m, Matrix* R, Matrix* C) {
  *R = Matrix::Identity(m, m).array() + (0.5 - 1.0 / m);
  *C = (-Matrix::Identity(m, m)).array() + (0.5 + 1.0 / m);
}

double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return std::round(out);
}

// Advances a sorted combination of [n] in lexicographic order.
bool NextCombination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

int IntersectionSize(const IndexSet& a, const IndexSet& b) {
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

}  // namespace

BimatrixGame IndependentSetGame(const Graph& g, double k, double gamma,
                                bool rescale) {
  const int n = g.n();
  const Matrix top = (Matrix::Ones(n, n) - AdjacencyAsDouble(g) +
                      (gamma + 1.0) * Matrix::Identity(n, n));
  return GraphGame(top, k, gamma, rescale, "is-game");
}

BimatrixGame CliqueGame(const Graph& g, double k, double gamma, bool rescale) {
  const int n = g.n();
  const Matrix top = AdjacencyAsDouble(g) - Matrix::Identity(n, n) +
                     (gamma + 1.0) * Matrix::Identity(n, n);
  return GraphGame(top, k, gamma, rescale, "clique-game");
}

SparseCorrelated PlantedProfile(std::span<const int> S, int n2, int T) {
  Check(!S.empty(), ErrorCode::kInvalidArgument, "planted set is empty");
  Check(T >= 1, ErrorCode::kInvalidArgument, "T must be >= 1");
  const MixedStrategy u = MixedStrategy::UniformOver(n2, S);
  return SparseCorrelated::Repeat(u, u, T);
}

std::vector<IndexSet> Subsets(std::span<const int> items, int size) {
  IndexSet sorted(items.begin(), items.end());
  std::sort(sorted.begin(), sorted.end());
  const int m = static_cast<int>(sorted.size());
  std::vector<IndexSet> out;
  if (size < 0 || size > m) return out;
  std::vector<int> c(size);
  for (int i = 0; i < size; ++i) c[i] = i;
  do {
    IndexSet s(size);
    for (int i = 0; i < size; ++i) s[i] = sorted[c[i]];
    out.push_back(std::move(s));
  } while (NextCombination(c, m));
  return out;
}

BimatrixGame EnumHardLowGame(int ell, std::span<const int> S) {
  Check(ell >= 2 && ell % 2 == 0, ErrorCode::kInvalidArgument,
        "ell must be even and >= 2");
  const int n = static_cast<int>(Binomial(ell, ell / 2));
  const IndexSet s = NormalizeIndexSet(S, n);
  Check(static_cast<int>(s.size()) == ell, ErrorCode::kInvalidArgument,
        "set must have exactly ell distinct elements");
  const std::vector<IndexSet> cols = Subsets(s, ell / 2);
  Matrix R(n, n), C(n, n);
  for (int i = 0; i < n; ++i) {
    const bool in_s = std::binary_search(s.begin(), s.end(), i);
    for (int j = 0; j < n; ++j) {
      if (!in_s) {
        R(i, j) = -1.0;
        C(i, j) = 1.0;
      } else if (std::binary_search(cols[j].begin(), cols[j].end(), i)) {
        R(i, j) = 1.0;
        C(i, j) = 0.0;
      } else {
        R(i, j) = 0.0;
        C(i, j) = 1.0;
      }
    }
  }
  return BimatrixGame(std::move(R), std::move(C),
                      "enumhard-low:" + SubsetKey(s));
}

BimatrixGame MatchingPennies(int m, bool shifted) {
  Check(m >= 2, ErrorCode::kInvalidArgument, "matching pennies needs m >= 2");
  if (!shifted) {
    return BimatrixGame(Matrix::Identity(m, m), -Matrix::Identity(m, m),
                        "pennies");
  }
  Matrix R, C;
  FillShiftedPennies(m, &R, &C);
  return BimatrixGame(std::move(R), std::move(C), "pennies-shifted");
}

BimatrixGame EnumHardHighGame(int n, std::span<const int> S) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "n must be >= 1");
  const IndexSet s = NormalizeIndexSet(S, n);
  Check(!s.empty(), ErrorCode::kInvalidArgument, "set must be nonempty");
  const int m = static_cast<int>(s.size());
  std::vector<int> pos(n, -1);
  for (int a = 0; a < m; ++a) pos[s[a]] = a;
  Matrix PR, PC;
  FillShiftedPennies(m, &PR, &PC);
  Matrix R(n, n), C(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool ri = pos[i] >= 0, cj = pos[j] >= 0;
      if (ri && cj) {
        R(i, j) = PR(pos[i], pos[j]);
        C(i, j) = PC(pos[i], pos[j]);
      } else if (ri) {
        R(i, j) = 0.5;
        C(i, j) = -1.0;
      } else if (cj) {
        R(i, j) = -1.0;
        C(i, j) = 0.5;
      } else {
        R(i, j) = -1.0;
        C(i, j) = -1.0;
      }
    }
  }
  return BimatrixGame(std::move(R), std::move(C),
                      "enumhard-high:" + SubsetKey(s));
}

const char* FamilyKindName(FamilyKind kind) {
  return kind == FamilyKind::kEnumHardLow ? "enumhard-low" : "enumhard-high";
}

FamilyKind ParseFamilyKind(const std::string& name) {
  if (name == "enumhard-low") return FamilyKind::kEnumHardLow;
  if (name == "enumhard-high") return FamilyKind::kEnumHardHigh;
  Fail(ErrorCode::kInvalidArgument, "unknown family kind '" + name + "'");
}

int GameFamily::IndexOf(const std::string& key) const {
  for (int i = 0; i < size(); ++i) {
    if (keys[i] == key) return i;
  }
  Fail(ErrorCode::kInvalidArgument, "no family member with key '" + key + "'");
}

std::string SubsetKey(std::span<const int> S) {
  std::ostringstream out;
  for (size_t i = 0; i < S.size(); ++i) out << (i ? "," : "") << S[i];
  return out.str();
}

GameFamily EnumHardLowFamily(int ell, bool packed, double min_l1) {
  Check(ell >= 2 && ell % 2 == 0, ErrorCode::kInvalidArgument,
        "ell must be even and >= 2");
  Check(min_l1 >= 0.0, ErrorCode::kInvalidArgument, "min_l1 must be >= 0");
  const double nd = Binomial(ell, ell / 2);
  Check(Binomial(static_cast<int>(nd), ell) <= kMaxFamilyEnumeration,
        ErrorCode::kSizeLimit, "low-precision family too large to enumerate");
  const int n = static_cast<int>(nd);
  GameFamily family;
  family.kind = FamilyKind::kEnumHardLow;
  family.params = {{"ell", ell}, {"n", n}, {"packed", packed ? 1 : 0},
                   {"min_l1", min_l1}};
  std::vector<int> c(ell);
  for (int i = 0; i < ell; ++i) c[i] = i;
  do {
    bool keep = true;
    if (packed) {
      for (const IndexSet& kept : family.sets) {
        const double dist = 2.0 * (ell - IntersectionSize(c, kept)) / ell;
        if (dist < min_l1 - 1e-12) {
          keep = false;
          break;
        }
      }
    }
    if (!keep) continue;
    Check(family.size() < kMaxFamilySize, ErrorCode::kSizeLimit,
          "low-precision family exceeds the member limit");
    family.sets.push_back(c);
    family.keys.push_back(SubsetKey(c));
    family.games.push_back(EnumHardLowGame(ell, c));
  } while (NextCombination(c, n));
  return family;
}

GameFamily EnumHardHighFamily(int n) {
  Check(n >= 1 && n <= kMaxHighFamilyDimension, ErrorCode::kSizeLimit,
        "high-precision family limited to 1 <= n <= 12");
  GameFamily family;
  family.kind = FamilyKind::kEnumHardHigh;
  family.params = {{"n", n}};
  for (int mask = 1; mask < (1 << n); ++mask) {
    IndexSet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) s.push_back(i);
    }
    family.keys.push_back(SubsetKey(s));
    family.games.push_back(EnumHardHighGame(n, s));
    family.sets.push_back(std::move(s));
  }
  return family;
}

BimatrixGame StitchedGame(const BimatrixGame& sos, const BimatrixGame& enum_game,
                          const StitchParams& params, bool normalize,
                          double* scale) {
  CheckDimension(sos.n(), enum_game.n(), "stitched blocks");
  Check(params.delta > 0.0 && params.delta < 0.5, ErrorCode::kInvalidArgument,
        "delta must lie in (0, 1/2)");
  Check(params.k >= 1.0, ErrorCode::kInvalidArgument, "k must be >= 1");
  for (const BimatrixGame* g : {&sos, &enum_game}) {
    Check(g->MinPayoff() >= -1.0 && g->MaxPayoff() <= 1.0,
          ErrorCode::kInvalidArgument,
          "stitched inputs must have payoffs in [-1, 1]");
  }
  const int n = sos.n();
  const Matrix ones = Matrix::Ones(n, n);
  Matrix R(2 * n, 2 * n), C(2 * n, 2 * n);
  R << sos.row_payoffs(), -params.k * ones, params.delta * ones,
      enum_game.row_payoffs();
  C << sos.col_payoffs(), params.delta * ones, -params.k * ones,
      enum_game.col_payoffs();
  const double divisor = normalize ? std::max(params.k, 1.0) : 1.0;
  if (normalize) {
    R /= divisor;
    C /= divisor;
  }
  if (scale != nullptr) *scale = divisor;
  return BimatrixGame(std::move(R), std::move(C), "stitched");
}

RandomGraphResult RandomGraph(int n, GraphKind kind, int k, uint64_t seed) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "graph needs n >= 1");
  std::mt19937_64 rng(seed);
  IndexSet planted;
  if (kind != GraphKind::kErdosRenyiHalf) {
    Check(k >= 1 && k <= n, ErrorCode::kInvalidArgument,
          "planted size must satisfy 1 <= k <= n");
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) {
      const int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
      std::swap(perm[i], perm[j]);
    }
    planted.assign(perm.begin(), perm.begin() + k);
    std::sort(planted.begin(), planted.end());
  }
  std::vector<bool> in_planted(n, false);
  for (int i : planted) in_planted[i] = true;
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool coin = (rng() >> 63) != 0;
      bool edge = coin;
      if (in_planted[i] && in_planted[j]) {
        edge = kind == GraphKind::kPlantedClique;
      }
      if (edge) g.AddEdge(i, j);
    }
  }
  return RandomGraphResult{std::move(g), std::move(planted)};
}

}  // namespace sparse_ce
