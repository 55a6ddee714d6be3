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

#include "convregions/coverage.h"

#include <algorithm>
#include <string>

#include "convregions/error.h"

namespace convregions {

ReceptiveFieldMap::ReceptiveFieldMap(std::vector<Position> positions,
                                     std::vector<std::vector<int64_t>> sets)
    : positions_(std::move(positions)), sets_(std::move(sets)) {
  if (positions_.size() != sets_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "receptive field map: " + std::to_string(positions_.size()) +
                    " positions but " + std::to_string(sets_.size()) +
                    " sets");
  }
  std::vector<Position> sorted = positions_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument,
                "receptive field map: duplicate position");
  }
  for (auto& s : sets_) {
    if (s.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "receptive field map: empty receptive field");
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    universe_.insert(universe_.end(), s.begin(), s.end());
  }
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()),
                  universe_.end());

  local_sets_.reserve(sets_.size());
  for (const auto& s : sets_) {
    std::vector<int> local;
    local.reserve(s.size());
    for (int64_t e : s) {
      local.push_back(static_cast<int>(
          std::lower_bound(universe_.begin(), universe_.end(), e) -
          universe_.begin()));
    }
    local_sets_.push_back(std::move(local));
  }
}

std::optional<size_t> ReceptiveFieldMap::IndexOf(Position p) const {
  auto it = std::find(positions_.begin(), positions_.end(), p);
  if (it == positions_.end()) return std::nullopt;
  return static_cast<size_t>(it - positions_.begin());
}

int64_t CoverageRankByIndex(const ReceptiveFieldMap& rf,
                            std::span<const size_t> subset) {
  std::vector<char> covered(rf.universe().size(), 0);
  int64_t rank = 0;
  for (size_t index : subset) {
    if (index >= rf.size()) {
      throw Error(ErrorCode::kUnknownPosition,
                  "position index " + std::to_string(index) + " out of range");
    }
    for (int e : rf.local_set(index)) {
      if (!covered[e]) {
        covered[e] = 1;
        ++rank;
      }
    }
  }
  return rank;
}

int64_t CoverageRank(const ReceptiveFieldMap& rf,
                     std::span<const Position> subset) {
  std::vector<size_t> indices;
  indices.reserve(subset.size());
  for (const Position& p : subset) {
    auto index = rf.IndexOf(p);
    if (!index) {
      throw Error(ErrorCode::kUnknownPosition,
                  "position (" + std::to_string(p.i) + "," +
                      std::to_string(p.j) + ") is not an output position");
    }
    indices.push_back(*index);
  }
  return CoverageRankByIndex(rf, indices);
}

TransversalMatcher::TransversalMatcher(const ReceptiveFieldMap& rf)
    : rf_(&rf), demand_(rf.size(), 0), owner_(rf.universe().size(), -1) {}

bool TransversalMatcher::AddDemand(size_t position) {
  std::vector<char> visited(rf_->size(), 0);
  if (!Augment(position, visited)) return false;
  ++demand_[position];
  return true;
}

// Kuhn-style search. Every unit of demand at a position is interchangeable,
// so visiting a position once per search is enough.
bool TransversalMatcher::Augment(size_t position, std::vector<char>& visited) {
  visited[position] = 1;
  const auto& elements = rf_->local_set(position);
  for (int e : elements) {
    if (owner_[e] < 0) {
      owner_[e] = static_cast<int>(position);
      return true;
    }
  }
  for (int e : elements) {
    const int holder = owner_[e];
    if (holder == static_cast<int>(position) || visited[holder]) continue;
    if (Augment(holder, visited)) {
      owner_[e] = static_cast<int>(position);
      return true;
    }
  }
  return false;
}

bool IsFeasible(const ReceptiveFieldMap& rf, const MultiIndex& t) {
  if (t.size() != rf.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "multi-index has " + std::to_string(t.size()) +
                    " entries, receptive field map has " +
                    std::to_string(rf.size()) + " positions");
  }
  TransversalMatcher matcher(rf);
  for (size_t p = 0; p < t.size(); ++p) {
    if (t[p] < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative multi-index entry");
    }
    if (static_cast<size_t>(t[p]) > rf.set(p).size()) return false;
    for (int k = 0; k < t[p]; ++k) {
      if (!matcher.AddDemand(p)) return false;
    }
  }
  return true;
}

namespace {

// K_N is down-closed, so at each coordinate the feasible values form a
// prefix 0..v and the first failed augmentation ends the loop.
void EnumerateFrom(const ReceptiveFieldMap& rf, int cap, size_t position,
                   const TransversalMatcher& matcher, MultiIndex& t,
                   const std::function<void(const MultiIndex&)>& visit) {
  if (position == rf.size()) {
    visit(t);
    return;
  }
  const int limit =
      std::min(cap, static_cast<int>(rf.set(position).size()));
  TransversalMatcher current = matcher;
  for (int value = 0;; ++value) {
    t[position] = value;
    EnumerateFrom(rf, cap, position + 1, current, t, visit);
    if (value == limit || !current.AddDemand(position)) break;
  }
  t[position] = 0;
}

}  // namespace

void EnumerateK(const ReceptiveFieldMap& rf, std::optional<int> cap,
                const std::function<void(const MultiIndex&)>& visit) {
  const int c = cap.value_or(static_cast<int>(rf.universe().size()));
  if (c < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative enumeration cap");
  }
  MultiIndex t(rf.size(), 0);
  TransversalMatcher matcher(rf);
  EnumerateFrom(rf, c, 0, matcher, t, visit);
}

std::vector<MultiIndex> EnumerateKList(const ReceptiveFieldMap& rf,
                                       std::optional<int> cap) {
  std::vector<MultiIndex> out;
  EnumerateK(rf, cap, [&](const MultiIndex& t) { out.push_back(t); });
  return out;
}

MultiIndex MaxTotal(const ReceptiveFieldMap& rf) {
  std::vector<char> covered(rf.universe().size(), 0);
  MultiIndex t(rf.size(), 0);
  for (size_t p = 0; p < rf.size(); ++p) {
    for (int e : rf.local_set(p)) {
      if (!covered[e]) {
        covered[e] = 1;
        ++t[p];
      }
    }
  }
  return t;
}

}  // namespace convregions
