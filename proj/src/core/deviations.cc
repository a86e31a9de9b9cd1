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

#include "core/deviations.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace sparse_ce {
namespace {

void CheckAction(int n, int a, const char* what) {
  Check(a >= 0 && a < n, ErrorCode::kInvalidArgument,
        std::string(what) + " " + std::to_string(a) + " out of range [0, " +
            std::to_string(n) + ")");
}

}  // namespace

Deviation::Deviation(DeviationVariant variant, std::vector<int> params,
                     std::vector<int> map)
    : variant_(variant), params_(std::move(params)), map_(std::move(map)) {}

Deviation Deviation::Identity(int n) { return Internal(n, 0, 0); }

Deviation Deviation::External(int n, int target) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "deviation needs n >= 1");
  CheckAction(n, target, "target");
  return Deviation(DeviationVariant::kExternal, {target},
                   std::vector<int>(n, target));
}

Deviation Deviation::Internal(int n, int source, int target) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "deviation needs n >= 1");
  CheckAction(n, source, "source");
  CheckAction(n, target, "target");
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i;
  map[source] = target;
  return Deviation(DeviationVariant::kInternal, {source, target},
                   std::move(map));
}

Deviation Deviation::Threshold(int n, int cutoff, int target) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "deviation needs n >= 1");
  CheckAction(n, cutoff, "cutoff");
  CheckAction(n, target, "target");
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i <= cutoff ? target : i;
  return Deviation(DeviationVariant::kThreshold, {cutoff, target},
                   std::move(map));
}

Deviation Deviation::Explicit(std::vector<int> map) {
  const int n = static_cast<int>(map.size());
  Check(n >= 1, ErrorCode::kInvalidArgument, "deviation needs n >= 1");
  for (int a : map) CheckAction(n, a, "image");
  std::vector<int> params = map;
  return Deviation(DeviationVariant::kExplicit, std::move(params),
                   std::move(map));
}

bool Deviation::IsIdentity() const {
  for (int i = 0; i < n(); ++i) {
    if (map_[i] != i) return false;
  }
  return true;
}

Vector Deviation::Apply(const Vector& x) const {
  CheckDimension(n(), static_cast<int>(x.size()), "deviation input");
  Vector out = Vector::Zero(n());
  for (int i = 0; i < n(); ++i) out[map_[i]] += x[i];
  return out;
}

MixedStrategy Deviation::Apply(const MixedStrategy& x) const {
  return MixedStrategy(Apply(x.probs()));
}

Matrix Deviation::AsStochasticMatrix() const {
  Matrix m = Matrix::Zero(n(), n());
  for (int j = 0; j < n(); ++j) m(map_[j], j) = 1.0;
  return m;
}

std::string Deviation::ToString() const {
  std::ostringstream out;
  switch (variant_) {
    case DeviationVariant::kExternal:
      out << "external(" << params_[0] << ")";
      break;
    case DeviationVariant::kInternal:
      if (IsIdentity()) {
        out << "identity";
      } else {
        out << "internal(" << params_[0] << "->" << params_[1] << ")";
      }
      break;
    case DeviationVariant::kThreshold:
      out << "threshold(<=" << params_[0] << "->" << params_[1] << ")";
      break;
    case DeviationVariant::kExplicit:
      out << "explicit[";
      for (int i = 0; i < n(); ++i) out << (i ? "," : "") << map_[i];
      out << "]";
      break;
  }
  return out.str();
}

DeviationSet DeviationSet::FromDeviations(DeviationKind kind,
                                          std::vector<Deviation> devs, int n) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "deviation set needs n >= 1");
  std::vector<Deviation> out;
  std::set<std::vector<int>> seen;
  Deviation identity = Deviation::Identity(n);
  out.push_back(identity);
  seen.insert(identity.map());
  for (auto& d : devs) {
    CheckDimension(n, d.n(), "deviation");
    if (seen.insert(d.map()).second) out.push_back(std::move(d));
  }
  return DeviationSet(kind, n, std::move(out));
}

DeviationSet DeviationSet::Enumerate(DeviationKind kind, int n) {
  Check(n >= 1, ErrorCode::kInvalidArgument, "deviation set needs n >= 1");
  std::vector<Deviation> devs;
  auto add_external = [&] {
    for (int t = 0; t < n; ++t) devs.push_back(Deviation::External(n, t));
  };
  auto add_threshold = [&] {
    for (int c = 0; c < n; ++c) {
      for (int t = 0; t < n; ++t) devs.push_back(Deviation::Threshold(n, c, t));
    }
  };
  auto add_internal = [&] {
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s != t) devs.push_back(Deviation::Internal(n, s, t));
      }
    }
  };
  switch (kind) {
    case DeviationKind::kExternal:
      add_external();
      break;
    case DeviationKind::kInternal:
      add_internal();
      break;
    case DeviationKind::kPhiHat:
      add_threshold();
      break;
    case DeviationKind::kPhi:
      add_threshold();
      add_internal();
      break;
    case DeviationKind::kSwap: {
      Check(n <= kMaxSwapDimension, ErrorCode::kSizeLimit,
            "full swap enumeration is limited to n <= 6");
      std::vector<int> map(n, 0);
      while (true) {
        devs.push_back(Deviation::Explicit(map));
        int pos = n - 1;
        while (pos >= 0 && map[pos] == n - 1) map[pos--] = 0;
        if (pos < 0) break;
        ++map[pos];
      }
      break;
    }
    case DeviationKind::kCustom:
      Fail(ErrorCode::kInvalidArgument, "custom sets cannot be enumerated");
  }
  return FromDeviations(kind, std::move(devs), n);
}

bool DeviationSet::Contains(const Deviation& d) const {
  return std::any_of(devs_.begin(), devs_.end(),
                     [&](const Deviation& e) { return e == d; });
}

const char* DeviationKindName(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::kExternal: return "ext";
    case DeviationKind::kInternal: return "int";
    case DeviationKind::kPhiHat: return "phihat";
    case DeviationKind::kPhi: return "phi";
    case DeviationKind::kSwap: return "swap";
    case DeviationKind::kCustom: return "custom";
  }
  return "?";
}

DeviationKind ParseDeviationKind(const std::string& name) {
  if (name == "ext" || name == "external") return DeviationKind::kExternal;
  if (name == "int" || name == "internal") return DeviationKind::kInternal;
  if (name == "phihat") return DeviationKind::kPhiHat;
  if (name == "phi") return DeviationKind::kPhi;
  if (name == "swap") return DeviationKind::kSwap;
  Fail(ErrorCode::kInvalidArgument, "unknown deviation set '" + name + "'");
}

}  // namespace sparse_ce
