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

#ifndef CONVREGIONS_ORACLE_H_
#define CONVREGIONS_ORACLE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "convregions/arch.h"
#include "convregions/numeric.h"
#include "convregions/weights.h"

namespace convregions {

// The affine hyperplane {x : normal . x = offset}.
struct Hyperplane {
  std::vector<Rational> normal;
  Rational offset;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

class Arrangement {
 public:
  explicit Arrangement(int ambient_dim);

  // Throws Error(kDimensionMismatch) on a wrong-length normal and
  // Error(kInvalidArgument) on a zero normal.
  void Add(Hyperplane h);

  int ambient_dim() const { return ambient_dim_; }
  size_t size() const { return hyperplanes_.size(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  int ambient_dim_;
  std::vector<Hyperplane> hyperplanes_;
};

// Hard limit of CountRegionsWhitney.
inline constexpr size_t kMaxOracleHyperplanes = 20;

// Every weight and bias an integer drawn uniformly from [-10^6, 10^6]; a
// filter that comes out identically zero is redrawn. Deterministic per seed.
WeightSet<Rational> SampleRationalWeights(const Architecture& arch,
                                          uint64_t seed);

// One hyperplane per hidden neuron (i, j, k), in row-major (i, j) order with
// k fastest: filter k placed at window (i, j) of the flattened input, offset
// -B^k.
Arrangement BuildLayerArrangement(const Dims& input, const LayerSpec& layer,
                                  const LayerWeights<Rational>& weights);

// Number of regions of the complement of the arrangement, by the signed sum
// over central subarrangements B of (-1)^(|B| - rank B). Exact throughout.
// Throws Error(kTooManyHyperplanes) beyond kMaxOracleHyperplanes. `threads`
// only changes how the subsets are split, never the result.
BigInt CountRegionsWhitney(const Arrangement& arrangement, int threads = 1);

// sum_{i <= n} C(m, i): the region count of m hyperplanes in general
// position in R^n, and an upper bound for any m hyperplanes.
BigInt ZaslavskyGeneralPositionBound(int64_t n, int64_t m);

// Outcome of comparing the closed-form one-layer count with the oracle.
struct OracleCheck {
  BigInt formula;
  // Seeds tried, in order, with the oracle count for each.
  std::vector<uint64_t> seeds;
  std::vector<BigInt> oracle_counts;
  bool match = false;
};

// Seed used for the single retry after a mismatch. Integer weights can land
// on a degenerate arrangement with tiny probability.
uint64_t RetrySeed(uint64_t seed);

// ExactRegionCount(input, layer) against CountRegionsWhitney on the layer's
// arrangement for weights drawn from `seed`, retried once on mismatch.
OracleCheck CheckRegionFormula(const Dims& input, const LayerSpec& layer,
                               uint64_t seed, int threads = 1);

// Plain text: an "# ambient_dim n" header, then one hyperplane per line as
// n normal entries followed by the offset, fractions written "p/q".
std::string FormatArrangement(const Arrangement& arrangement);
// Accepts the output of FormatArrangement. Lines starting with '#' other
// than the header are comments; without a header the dimension is the
// column count minus one. Throws Error(kParseError) with the line number.
Arrangement ParseArrangement(std::string_view text);

}  // namespace convregions

#endif  // CONVREGIONS_ORACLE_H_
