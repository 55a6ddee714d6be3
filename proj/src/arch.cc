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

#include "convregions/arch.h"

#include "convregions/error.h"

namespace convregions {
namespace {

void CheckPositive(int value, const char* what) {
  if (value < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be >= 1, got " +
                    std::to_string(value));
  }
}

void CheckDims(const Dims& dims) {
  CheckPositive(dims.height, "height");
  CheckPositive(dims.width, "width");
  CheckPositive(dims.depth, "depth");
}

void CheckLayer(const LayerSpec& layer) {
  CheckPositive(layer.filter_height, "filter height");
  CheckPositive(layer.filter_width, "filter width");
  CheckPositive(layer.stride, "stride");
  CheckPositive(layer.depth, "layer depth");
}

}  // namespace

int64_t FlatInputIndex(const Dims& dims, InputIndex index) {
  if (index.a < 1 || index.a > dims.height || index.b < 1 ||
      index.b > dims.width || index.c < 1 || index.c > dims.depth) {
    throw Error(ErrorCode::kInvalidArgument,
                "input index outside " + ToString(dims));
  }
  return ((static_cast<int64_t>(index.a) - 1) * dims.width + (index.b - 1)) *
             dims.depth +
         (index.c - 1);
}

InputIndex UnflattenInputIndex(const Dims& dims, int64_t flat) {
  if (flat < 0 || flat >= dims.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "flat index " + std::to_string(flat) + " outside " +
                    ToString(dims));
  }
  InputIndex index;
  index.c = static_cast<int>(flat % dims.depth) + 1;
  flat /= dims.depth;
  index.b = static_cast<int>(flat % dims.width) + 1;
  index.a = static_cast<int>(flat / dims.width) + 1;
  return index;
}

std::string ToString(const Dims& dims) {
  return std::to_string(dims.height) + "x" + std::to_string(dims.width) +
         "x" + std::to_string(dims.depth);
}

std::string ToString(const LayerSpec& layer) {
  return std::to_string(layer.depth) + " filters " +
         std::to_string(layer.filter_height) + "x" +
         std::to_string(layer.filter_width) + " stride " +
         std::to_string(layer.stride);
}

Dims LayerOutputDims(const Dims& input, const LayerSpec& layer) {
  CheckDims(input);
  CheckLayer(layer);
  if (layer.filter_height > input.height || layer.filter_width > input.width) {
    throw Error(ErrorCode::kFilterExceedsInput,
                "filter " + std::to_string(layer.filter_height) + "x" +
                    std::to_string(layer.filter_width) +
                    " does not fit input " + ToString(input));
  }
  return Dims{(input.height - layer.filter_height) / layer.stride + 1,
              (input.width - layer.filter_width) / layer.stride + 1,
              layer.depth};
}

std::vector<Dims> ValidateArchitecture(const Architecture& arch) {
  if (arch.layers.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "architecture needs at least one layer");
  }
  std::vector<Dims> out;
  out.reserve(arch.layers.size());
  Dims current = arch.input;
  for (size_t l = 0; l < arch.layers.size(); ++l) {
    try {
      current = LayerOutputDims(current, arch.layers[l]);
    } catch (const Error& e) {
      throw Error(e.code(),
                  "layer " + std::to_string(l + 1) + ": " + e.what());
    }
    out.push_back(current);
  }
  return out;
}

int64_t HiddenNeuronCount(const Architecture& arch) {
  int64_t total = 0;
  for (const Dims& d : ValidateArchitecture(arch)) total += d.size();
  return total;
}

BigInt ParameterCount(const Architecture& arch) {
  ValidateArchitecture(arch);
  BigInt total = 0;
  int previous_depth = arch.input.depth;
  for (const LayerSpec& layer : arch.layers) {
    BigInt per_filter = BigInt(layer.filter_height) * layer.filter_width *
                        previous_depth;
    total += per_filter * layer.depth + layer.depth;
    previous_depth = layer.depth;
  }
  return total;
}

ReceptiveFieldMap ReceptiveFields(const Dims& input, const LayerSpec& layer) {
  const Dims out = LayerOutputDims(input, layer);
  std::vector<Position> positions;
  std::vector<std::vector<int64_t>> sets;
  positions.reserve(static_cast<size_t>(out.height) * out.width);
  for (int i = 1; i <= out.height; ++i) {
    for (int j = 1; j <= out.width; ++j) {
      positions.push_back(Position{i, j});
      std::vector<int64_t> s;
      s.reserve(static_cast<size_t>(layer.filter_height) *
                layer.filter_width * input.depth);
      for (int a = 1; a <= layer.filter_height; ++a) {
        for (int b = 1; b <= layer.filter_width; ++b) {
          for (int c = 1; c <= input.depth; ++c) {
            s.push_back(FlatInputIndex(
                input, InputIndex{a + (i - 1) * layer.stride,
                                  b + (j - 1) * layer.stride, c}));
          }
        }
      }
      sets.push_back(std::move(s));
    }
  }
  return ReceptiveFieldMap(std::move(positions), std::move(sets));
}

LayerSpec ComposeLinearLayers(const LayerSpec& first, const LayerSpec& second,
                              const Dims& input) {
  const Dims hidden = LayerOutputDims(input, first);
  LayerOutputDims(hidden, second);
  return LayerSpec{
      first.filter_height + (second.filter_height - 1) * first.stride,
      first.filter_width + (second.filter_width - 1) * first.stride,
      first.stride * second.stride, second.depth};
}

}  // namespace convregions
