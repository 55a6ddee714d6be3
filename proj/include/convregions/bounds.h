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

#ifndef CONVREGIONS_BOUNDS_H_
#define CONVREGIONS_BOUNDS_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "convregions/arch.h"
#include "convregions/numeric.h"

namespace convregions {

// 2^(hidden neurons): one region per activation pattern at most.
BigInt NaiveBound(const Architecture& arch);

// Regions of the last layer acting on an input of depth d_0, multiplied by
// floor(d_l / d_0)^(n_l^(1) n_l^(2) d_0) for every earlier layer. Requires
// d_l >= d_0 for every layer, else throws Error(kHypothesisViolated).
BigInt MultilayerLowerBound(const Architecture& arch);

// Which dimension caps the per-layer binomial sum of the upper bound.
enum class UpperBoundLimit {
  // sum_{i <= n_{l-1}^(1) n_{l-1}^(2) d_{l-1}} C(n_l^(1) n_l^(2) d_l, i).
  // Matches the built-in T2 table.
  kPreviousLayerNeurons,
  // sum_{i <= n_0^(1) n_0^(2) d_0} C(n_l^(1) n_l^(2) d_l, i).
  kInputDimension,
};

// Exact regions of layer 1 times the per-layer binomial sums of layers
// 2..L.
BigInt MultilayerUpperBound(
    const Architecture& arch,
    UpperBoundLimit limit = UpperBoundLimit::kPreviousLayerNeurons);

struct BoundReport {
  // Absent when the lower bound's hypothesis fails.
  std::optional<BigInt> lower;
  BigInt upper;
  BigInt naive_upper;
  std::string lower_method;
  std::string upper_method;
  std::string naive_method;
  // Why `lower` is absent.
  std::string lower_unavailable;
};

// Lower and upper bound for a fully connected ReLU network with d_0 inputs
// and hidden widths `depths`. naive_upper is 2^(sum of widths).
BoundReport FcBounds(int d0, std::span<const int> depths);

// All applicable bounds for a CNN. For one layer every field is the exact
// count except naive_upper.
BoundReport ComputeBounds(const Architecture& arch);

struct ArchExpressivity {
  BigInt parameters;
  BoundReport bounds;
  std::optional<Rational> lower_per_parameter;
  Rational upper_per_parameter;
};

struct ExpressivityReport {
  ArchExpressivity first;
  ArchExpressivity second;
};

ArchExpressivity EvaluateExpressivity(const Architecture& arch);
ExpressivityReport CompareExpressivity(const Architecture& first,
                                       const Architecture& second);

}  // namespace convregions

#endif  // CONVREGIONS_BOUNDS_H_
