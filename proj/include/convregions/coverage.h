// Copyright 2026 The convregions Authors
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

#ifndef CONVREGIONS_COVERAGE_H_
#define CONVREGIONS_COVERAGE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace convregions {

// Output-grid index (i, j), 1-based.
struct Position {
  int i = 1;
  int j = 1;

  friend auto operator<=>(const Position&, const Position&) = default;
};

// The family of receptive-field sets S_{i,j} of a convolutional layer,
// together with their union. Elements are opaque integer ids; maps built
// from a layer geometry use the flattened 0-based input-neuron index (see
// FlatInputIndex in arch.h).
//
// Positions are kept in the order given at construction. Geometry-built
// maps use row-major (i, j) order, which is also the coordinate order of
// every MultiIndex handled by this module.
class ReceptiveFieldMap {
 public:
  // Throws Error(kInvalidArgument) on empty sets, duplicate positions or a
  // positions/sets length mismatch. Duplicate elements inside a set are
  // collapsed.
  ReceptiveFieldMap(std::vector<Position> positions,
                    std::vector<std::vector<int64_t>> sets);

  size_t size() const { return positions_.size(); }
  const std::vector<Position>& positions() const { return positions_; }
  // Sorted, duplicate-free.
  const std::vector<int64_t>& set(size_t index) const { return sets_[index]; }
  const std::vector<int64_t>& universe() const { return universe_; }

  std::optional<size_t> IndexOf(Position p) const;

  // Dense relabelling of set(index) onto [0, universe().size()).
  const std::vector<int>& local_set(size_t index) const {
    return local_sets_[index];
  }

 private:
  std::vector<Position> positions_;
  std::vector<std::vector<int64_t>> sets_;
  std::vector<std::vector<int>> local_sets_;
  std::vector<int64_t> universe_;
};

// t_{i,j} per position, in ReceptiveFieldMap::positions() order.
using MultiIndex = std::vector<int>;

// |union of S_p over p in subset|. Throws Error(kUnknownPosition) when the
// subset names a position that is not in the map.
int64_t CoverageRank(const ReceptiveFieldMap& rf,
                     std::span<const Position> subset);

// Same, addressing positions by their index in rf.positions().
int64_t CoverageRankByIndex(const ReceptiveFieldMap& rf,
                            std::span<const size_t> subset);

// Incremental transversal (distinct representatives) builder: position p
// asks for demand(p) pairwise distinct elements of its own set, no element
// shared between positions. A demand vector is realizable exactly when it
// satisfies every subset inequality sum_J t <= |union_J S|.
class TransversalMatcher {
 public:
  explicit TransversalMatcher(const ReceptiveFieldMap& rf);

  // Raises demand(position) by one through an augmenting path. Returns false
  // and leaves the state untouched when no such path exists.
  bool AddDemand(size_t position);

  int demand(size_t position) const { return demand_[position]; }

 private:
  bool Augment(size_t position, std::vector<char>& visited);

  const ReceptiveFieldMap* rf_;
  std::vector<int> demand_;
  // owner_[e] is the position holding element e, or -1.
  std::vector<int> owner_;
};

// Whether t lies in K_N. Throws Error(kDimensionMismatch) if t.size() differs
// from rf.size() and Error(kInvalidArgument) on negative entries.
bool IsFeasible(const ReceptiveFieldMap& rf, const MultiIndex& t);

// Visits every element of K_N (each coordinate additionally capped at `cap`
// when given) exactly once, in lexicographic order.
void EnumerateK(const ReceptiveFieldMap& rf, std::optional<int> cap,
                const std::function<void(const MultiIndex&)>& visit);

std::vector<MultiIndex> EnumerateKList(const ReceptiveFieldMap& rf,
                                       std::optional<int> cap = std::nullopt);

// A member of K_N whose total equals |universe|: position m takes the
// elements of S_m not covered by earlier positions.
MultiIndex MaxTotal(const ReceptiveFieldMap& rf);

}  // namespace convregions

#endif  // CONVREGIONS_COVERAGE_H_
