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

#ifndef CONVREGIONS_ARCH_H_
#define CONVREGIONS_ARCH_H_

#include <cstdint>
#include <string>
#include <vector>

#include "convregions/coverage.h"
#include "convregions/numeric.h"

namespace convregions {

// Height x width x depth of a feature map.
struct Dims {
  int height = 1;
  int width = 1;
  int depth = 1;

  int64_t size() const {
    return static_cast<int64_t>(height) * width * depth;
  }
  friend bool operator==(const Dims&, const Dims&) = default;
};

// d filters of size filter_height x filter_width x (previous depth), slid
// with the same stride along both axes. No padding, no dilation.
struct LayerSpec {
  int filter_height = 1;
  int filter_width = 1;
  int stride = 1;
  int depth = 1;

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

struct Architecture {
  Dims input;
  std::vector<LayerSpec> layers;

  friend bool operator==(const Architecture&, const Architecture&) = default;
};

// 1-based input-neuron index (a, b, c).
struct InputIndex {
  int a = 1;
  int b = 1;
  int c = 1;

  friend auto operator<=>(const InputIndex&, const InputIndex&) = default;
};

// Row-major, channel fastest, 0-based. This is the coordinate order of the
// flattened input space used by the hyperplane oracle and the sampler.
// Both throw Error(kInvalidArgument) for out-of-range arguments.
int64_t FlatInputIndex(const Dims& dims, InputIndex index);
InputIndex UnflattenInputIndex(const Dims& dims, int64_t flat);

std::string ToString(const Dims& dims);
std::string ToString(const LayerSpec& layer);

// Output feature-map size of one layer: floor((n - f) / s) + 1 per axis.
// Throws Error(kFilterExceedsInput) when the filter does not fit and
// Error(kInvalidArgument) on nonpositive fields.
Dims LayerOutputDims(const Dims& input, const LayerSpec& layer);

// Hidden-layer dimensions for every layer, in order. Throws
// Error(kFilterExceedsInput) naming the first offending layer (1-based).
std::vector<Dims> ValidateArchitecture(const Architecture& arch);

// Total hidden neurons over all layers.
int64_t HiddenNeuronCount(const Architecture& arch);

// Weights plus biases: sum_l (f1 * f2 * d_{l-1} * d_l + d_l).
BigInt ParameterCount(const Architecture& arch);

// S_{i,j} for every output position of the layer, positions row-major. The
// union can miss input neurons when the stride exceeds the filter size.
ReceptiveFieldMap ReceptiveFields(const Dims& input, const LayerSpec& layer);

// The single linear layer equivalent to `first` followed by `second` with
// no activation in between: filter (f1 + (f2 - 1) * s1) per axis, stride
// s1 * s2, depth of `second`. `input` is the input of `first`; both layers
// must fit on the chained geometry.
LayerSpec ComposeLinearLayers(const LayerSpec& first, const LayerSpec& second,
                              const Dims& input);

}  // namespace convregions

#endif  // CONVREGIONS_ARCH_H_
