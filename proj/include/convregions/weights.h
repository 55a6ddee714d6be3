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

#ifndef CONVREGIONS_WEIGHTS_H_
#define CONVREGIONS_WEIGHTS_H_

#include <cstddef>
#include <string>
#include <vector>

#include "convregions/arch.h"
#include "convregions/error.h"
#include "convregions/numeric.h"

namespace convregions {

// Dense height x width x depth tensor, 0-based, channel fastest (the same
// order as FlatInputIndex).
template <typename T>
class Tensor3 {
 public:
  Tensor3() = default;
  explicit Tensor3(const Dims& dims, T fill = T(0))
      : dims_(dims), data_(static_cast<size_t>(dims.size()), fill) {}
  Tensor3(const Dims& dims, std::vector<T> data)
      : dims_(dims), data_(std::move(data)) {
    if (static_cast<int64_t>(data_.size()) != dims_.size()) {
      throw Error(ErrorCode::kShapeMismatch,
                  "tensor data does not match " + ToString(dims_));
    }
  }

  const Dims& dims() const { return dims_; }
  size_t size() const { return data_.size(); }

  T& at(int a, int b, int c) { return data_[Offset(a, b, c)]; }
  const T& at(int a, int b, int c) const { return data_[Offset(a, b, c)]; }

  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Tensor3&, const Tensor3&) = default;

 private:
  size_t Offset(int a, int b, int c) const {
    return (static_cast<size_t>(a) * dims_.width + b) * dims_.depth + c;
  }

  Dims dims_;
  std::vector<T> data_;
};

// The d filters of one layer plus their biases. Filter k occupies
// weights[k * filter_size() + (a * f2 + b) * in_depth + c] for 0-based
// (a, b, c).
template <typename T>
struct LayerWeights {
  LayerSpec spec;
  int in_depth = 1;
  std::vector<T> weights;
  std::vector<T> bias;

  size_t filter_size() const {
    return static_cast<size_t>(spec.filter_height) * spec.filter_width *
           in_depth;
  }
  const T& w(int k, int a, int b, int c) const {
    return weights[k * filter_size() +
                   (static_cast<size_t>(a) * spec.filter_width + b) *
                       in_depth +
                   c];
  }
  T& w(int k, int a, int b, int c) {
    return weights[k * filter_size() +
                   (static_cast<size_t>(a) * spec.filter_width + b) *
                       in_depth +
                   c];
  }

  friend bool operator==(const LayerWeights&, const LayerWeights&) = default;
};

template <typename T>
LayerWeights<T> ZeroLayerWeights(const LayerSpec& spec, int in_depth) {
  LayerWeights<T> lw;
  lw.spec = spec;
  lw.in_depth = in_depth;
  lw.weights.assign(lw.filter_size() * spec.depth, T(0));
  lw.bias.assign(spec.depth, T(0));
  return lw;
}

template <typename T>
struct WeightSet {
  std::vector<LayerWeights<T>> layers;

  friend bool operator==(const WeightSet&, const WeightSet&) = default;
};

// Throws Error(kShapeMismatch) unless `w` has one correctly sized entry per
// layer of `arch`.
template <typename T>
void CheckWeightShapes(const Architecture& arch, const WeightSet<T>& w) {
  if (w.layers.size() != arch.layers.size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "weight set has " + std::to_string(w.layers.size()) +
                    " layers, architecture has " +
                    std::to_string(arch.layers.size()));
  }
  int in_depth = arch.input.depth;
  for (size_t l = 0; l < arch.layers.size(); ++l) {
    const LayerWeights<T>& lw = w.layers[l];
    if (!(lw.spec == arch.layers[l]) || lw.in_depth != in_depth ||
        lw.weights.size() != lw.filter_size() * lw.spec.depth ||
        lw.bias.size() != static_cast<size_t>(lw.spec.depth)) {
      throw Error(ErrorCode::kShapeMismatch,
                  "weights of layer " + std::to_string(l + 1) +
                      " do not match its spec");
    }
    in_depth = arch.layers[l].depth;
  }
}

// Z_{i,j,k} = sum_{a,b,c} W^k_{a,b,c} X_{a + i s, b + j s, c} + B^k (0-based).
template <typename T>
Tensor3<T> Convolve(const Tensor3<T>& x, const LayerWeights<T>& lw) {
  if (x.dims().depth != lw.in_depth) {
    throw Error(ErrorCode::kShapeMismatch,
                "input depth " + std::to_string(x.dims().depth) +
                    " does not match filter depth " +
                    std::to_string(lw.in_depth));
  }
  const Dims out_dims = LayerOutputDims(x.dims(), lw.spec);
  Tensor3<T> z(out_dims);
  const int s = lw.spec.stride;
  for (int i = 0; i < out_dims.height; ++i) {
    for (int j = 0; j < out_dims.width; ++j) {
      for (int k = 0; k < out_dims.depth; ++k) {
        T acc = lw.bias[k];
        for (int a = 0; a < lw.spec.filter_height; ++a) {
          for (int b = 0; b < lw.spec.filter_width; ++b) {
            for (int c = 0; c < lw.in_depth; ++c) {
              acc += lw.w(k, a, b, c) * x.at(a + i * s, b + j * s, c);
            }
          }
        }
        z.at(i, j, k) = acc;
      }
    }
  }
  return z;
}

// Weights of the single layer that reproduces `second` applied to the
// output of `first` with no activation in between. Its spec is
// ComposeLinearLayers(first.spec, second.spec, input).
LayerWeights<Rational> FoldLinearLayers(const Dims& input,
                                        const LayerWeights<Rational>& first,
                                        const LayerWeights<Rational>& second);

}  // namespace convregions

#endif  // CONVREGIONS_WEIGHTS_H_
