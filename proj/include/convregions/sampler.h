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

#ifndef CONVREGIONS_SAMPLER_H_
#define CONVREGIONS_SAMPLER_H_

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "convregions/arch.h"
#include "convregions/weights.h"

namespace convregions {

// One bit per hidden neuron in (layer, i, j, k) order, k fastest; a bit is
// set iff the neuron's pre-activation is strictly positive. A pre-activation
// of exactly zero therefore reads as inactive.
class ActivationPattern {
 public:
  ActivationPattern() = default;
  explicit ActivationPattern(size_t bits)
      : bits_(bits), words_((bits + 63) / 64, 0) {}

  size_t size() const { return bits_; }
  bool bit(size_t index) const {
    return (words_[index / 64] >> (index % 64)) & 1u;
  }
  void set(size_t index) { words_[index / 64] |= uint64_t{1} << (index % 64); }
  // Clears every bit and resizes to `bits`, reusing storage.
  void Reset(size_t bits) {
    bits_ = bits;
    words_.assign((bits + 63) / 64, 0);
  }

  // '1'/'0' characters in neuron order.
  std::string ToString() const;

  const std::vector<uint64_t>& words() const { return words_; }

  friend bool operator==(const ActivationPattern&,
                         const ActivationPattern&) = default;

 private:
  size_t bits_ = 0;
  std::vector<uint64_t> words_;
};

struct ActivationPatternHash {
  size_t operator()(const ActivationPattern& p) const;
};

// Weights ~ N(0, sqrt(2 / fan_in)) with fan_in = f1 * f2 * d_{l-1}; biases
// from the same distribution. Deterministic per seed.
WeightSet<double> HeInit(const Architecture& arch, uint64_t seed);

// Z^1, ..., Z^L; each layer convolves the ReLU of the previous one.
template <typename T>
std::vector<Tensor3<T>> ForwardPreactivations(const Architecture& arch,
                                              const WeightSet<T>& w,
                                              const Tensor3<T>& x) {
  CheckWeightShapes(arch, w);
  if (!(x.dims() == arch.input)) {
    throw Error(ErrorCode::kShapeMismatch,
                "input tensor is " + ToString(x.dims()) + ", expected " +
                    ToString(arch.input));
  }
  std::vector<Tensor3<T>> z;
  z.reserve(arch.layers.size());
  Tensor3<T> activations = x;
  for (const LayerWeights<T>& lw : w.layers) {
    z.push_back(Convolve(activations, lw));
    activations = z.back();
    for (T& v : activations.data()) {
      if (v < T(0)) v = T(0);
    }
  }
  return z;
}

template <typename T>
ActivationPattern ComputeActivationPattern(const Architecture& arch,
                                           const WeightSet<T>& w,
                                           const Tensor3<T>& x) {
  const std::vector<Tensor3<T>> z = ForwardPreactivations(arch, w, x);
  size_t total = 0;
  for (const auto& layer : z) total += layer.size();
  ActivationPattern pattern(total);
  size_t index = 0;
  for (const auto& layer : z) {
    for (const T& v : layer.data()) {
      if (v > T(0)) pattern.set(index);
      ++index;
    }
  }
  return pattern;
}

struct SamplingConfig {
  // Inputs drawn per standard deviation.
  int64_t num_samples = 1000000;
  std::vector<double> std_values = {3, 5, 7, 9, 11, 13};
  uint64_t seed = 0;
  int64_t batch_size = 65536;
  int threads = 1;
};

struct StdBreakdown {
  double v = 0;
  int64_t distinct = 0;
};

struct SamplingResult {
  int64_t max_distinct = 0;
  std::vector<StdBreakdown> per_v;
};

// For every v, draws num_samples inputs with i.i.d. N(0, v) coordinates and
// counts distinct activation patterns; reports the per-v counts and their
// maximum. Sample n of the v-th sweep entry depends only on
// (seed, v index, n), so the result does not depend on batch_size or
// threads, and a larger budget only adds samples.
SamplingResult EstimateRegionCount(const Architecture& arch,
                                   const WeightSet<double>& w,
                                   const SamplingConfig& config);

// The input tensor used for sample `index` of sweep entry `v_index`.
Tensor3<double> SampleInput(const Dims& dims, double v, uint64_t seed,
                            uint64_t v_index, uint64_t index);

}  // namespace convregions

#endif  // CONVREGIONS_SAMPLER_H_
