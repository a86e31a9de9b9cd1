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

// Deviation maps [n] -> [n] and the families used to define (coarse)
// correlated equilibria:
//
//   External   constant maps i -> i'
//   Internal   a single source i0 rerouted to i', everything else fixed
//   PhiHat     threshold swaps: i -> i' for i <= i0, identity above i0
//   Phi        PhiHat united with Internal
//   Swap       every map [n] -> [n] (n <= 6)
//
// Every set contains the identity exactly once and no map twice. Indices are
// 0-based throughout.

#ifndef SPARSE_CE_CORE_DEVIATIONS_H_
#define SPARSE_CE_CORE_DEVIATIONS_H_

#include <string>
#include <vector>

#include "core/game.h"

namespace sparse_ce {

enum class DeviationVariant { kExternal, kInternal, kThreshold, kExplicit };

class Deviation {
 public:
  static Deviation Identity(int n);
  static Deviation External(int n, int target);
  static Deviation Internal(int n, int source, int target);
  static Deviation Threshold(int n, int cutoff, int target);
  static Deviation Explicit(std::vector<int> map);

  int n() const { return static_cast<int>(map_.size()); }
  DeviationVariant variant() const { return variant_; }
  // Constructor arguments: {target}, {source, target}, {cutoff, target}, or
  // the full map for explicit deviations.
  const std::vector<int>& params() const { return params_; }
  // Normal form: map()[i] is the action i is sent to.
  const std::vector<int>& map() const { return map_; }
  bool IsIdentity() const;

  // output_j = sum_{i : phi(i) = j} x_i, i.e. M_phi x without forming M_phi.
  Vector Apply(const Vector& x) const;
  MixedStrategy Apply(const MixedStrategy& x) const;

  // Column j is e_{phi(j)}.
  Matrix AsStochasticMatrix() const;

  std::string ToString() const;

  friend bool operator==(const Deviation& a, const Deviation& b) {
    return a.map_ == b.map_;
  }

 private:
  Deviation(DeviationVariant variant, std::vector<int> params,
            std::vector<int> map);

  DeviationVariant variant_;
  std::vector<int> params_;
  std::vector<int> map_;
};

enum class DeviationKind { kExternal, kInternal, kPhiHat, kPhi, kSwap, kCustom };

inline constexpr int kMaxSwapDimension = 6;

class DeviationSet {
 public:
  static DeviationSet Enumerate(DeviationKind kind, int n);
  // Builds a set from arbitrary deviations: the identity is prepended when
  // missing and duplicates (by map) are dropped, keeping first occurrences.
  static DeviationSet FromDeviations(DeviationKind kind,
                                     std::vector<Deviation> devs, int n);

  DeviationKind kind() const { return kind_; }
  int n() const { return n_; }
  int size() const { return static_cast<int>(devs_.size()); }
  const std::vector<Deviation>& devs() const { return devs_; }
  const Deviation& operator[](int i) const { return devs_[i]; }
  bool Contains(const Deviation& d) const;

 private:
  DeviationSet(DeviationKind kind, int n, std::vector<Deviation> devs)
      : kind_(kind), n_(n), devs_(std::move(devs)) {}

  DeviationKind kind_;
  int n_;
  std::vector<Deviation> devs_;
};

const char* DeviationKindName(DeviationKind kind);
DeviationKind ParseDeviationKind(const std::string& name);

}  // namespace sparse_ce

#endif  // SPARSE_CE_CORE_DEVIATIONS_H_
