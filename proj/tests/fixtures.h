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

#ifndef CONVREGIONS_TESTS_FIXTURES_H_
#define CONVREGIONS_TESTS_FIXTURES_H_

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "convregions/arch.h"
#include "convregions/coverage.h"
#include "convregions/numeric.h"

namespace convregions::testing {

struct Geometry {
  std::string name;
  Dims input;
  LayerSpec layer;  // depth unset (1)
};

inline LayerSpec Filter(int fh, int fw, int stride, int depth = 1) {
  return LayerSpec{fh, fw, stride, depth};
}

inline LayerSpec WithDepth(LayerSpec layer, int depth) {
  layer.depth = depth;
  return layer;
}

// One-layer geometries used across the suites.
inline std::vector<Geometry> GeometrySuite() {
  return {
      {"1x3x1 f1x2 s1", {1, 3, 1}, Filter(1, 2, 1)},
      {"2x2x1 f1x2 s1", {2, 2, 1}, Filter(1, 2, 1)},
      {"1x4x1 f1x2 s1", {1, 4, 1}, Filter(1, 2, 1)},
      {"2x3x1 f2x2 s1", {2, 3, 1}, Filter(2, 2, 1)},
      {"6x6x1 f1x3 s2", {6, 6, 1}, Filter(1, 3, 2)},
      {"3x3x2 f2x2 s1", {3, 3, 2}, Filter(2, 2, 1)},
      {"1x5x1 f1x2 s3", {1, 5, 1}, Filter(1, 2, 3)},
      {"1x5x1 f1x3 s1", {1, 5, 1}, Filter(1, 3, 1)},
      {"1x2x2 f1x1 s1", {1, 2, 2}, Filter(1, 1, 1)},
      {"3x4x1 f2x2 s1", {3, 4, 1}, Filter(2, 2, 1)},
      {"2x5x1 f1x2 s1", {2, 5, 1}, Filter(1, 2, 1)},
      {"3x3x1 f3x3 s1", {3, 3, 1}, Filter(3, 3, 1)},
      {"4x4x1 f2x2 s2", {4, 4, 1}, Filter(2, 2, 2)},
      {"1x6x1 f1x4 s2", {1, 6, 1}, Filter(1, 4, 2)},
  };
}

inline int64_t UnionSize(const ReceptiveFieldMap& rf, unsigned mask) {
  std::set<int64_t> covered;
  for (size_t m = 0; m < rf.size(); ++m) {
    if (mask >> m & 1u) covered.insert(rf.set(m).begin(), rf.set(m).end());
  }
  return static_cast<int64_t>(covered.size());
}

// K_N by checking all 2^|I| subset inequalities for every tuple of the
// box prod [0, min(|S_m|, cap)], in lexicographic order.
inline std::vector<MultiIndex> BruteForceK(const ReceptiveFieldMap& rf,
                                           int cap) {
  const size_t n = rf.size();
  std::vector<int64_t> unions(size_t{1} << n);
  for (unsigned mask = 0; mask < unions.size(); ++mask) {
    unions[mask] = UnionSize(rf, mask);
  }
  std::vector<int> limit(n);
  for (size_t m = 0; m < n; ++m) {
    limit[m] = std::min<int>(cap, static_cast<int>(rf.set(m).size()));
  }
  std::vector<MultiIndex> out;
  MultiIndex t(n, 0);
  while (true) {
    bool ok = true;
    for (unsigned mask = 1; ok && mask < unions.size(); ++mask) {
      int64_t sum = 0;
      for (size_t m = 0; m < n; ++m) {
        if (mask >> m & 1u) sum += t[m];
      }
      ok = sum <= unions[mask];
    }
    if (ok) out.push_back(t);
    size_t m = n;
    while (m > 0 && t[m - 1] == limit[m - 1]) t[--m] = 0;
    if (m == 0) break;
    ++t[m - 1];
  }
  return out;
}

// sum over K of prod C(d1, t), computed from the brute-force K.
inline BigInt BruteForceCount(const ReceptiveFieldMap& rf, int d1) {
  BigInt total = 0;
  for (const MultiIndex& t : BruteForceK(rf, d1)) {
    BigInt term = 1;
    for (int v : t) term *= Binomial(d1, v);
    total += term;
  }
  return total;
}

}  // namespace convregions::testing

#endif  // CONVREGIONS_TESTS_FIXTURES_H_
