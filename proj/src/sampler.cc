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

#include "convregions/sampler.h"

#include <atomic>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>
#include <unordered_set>

namespace convregions {
namespace {

uint64_t Finalize(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// SplitMix64 seeded from a hash of (seed, v index, sample index).
class KeyedStream {
 public:
  KeyedStream(uint64_t seed, uint64_t v_index, uint64_t index)
      : state_(Finalize(Finalize(Finalize(seed + kGolden) ^ (v_index + kGolden)) ^
                        (index + kGolden))) {}

  uint64_t Next() {
    state_ += kGolden;
    return Finalize(state_);
  }

  // Uniform in [0, 1).
  double NextUnit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

// Box-Muller, both outputs used.
void FillGaussian(KeyedStream& stream, double stddev, std::vector<double>& out) {
  for (size_t i = 0; i < out.size(); i += 2) {
    const double u1 = 1.0 - stream.NextUnit();
    const double u2 = stream.NextUnit();
    const double radius = std::sqrt(-2.0 * std::log(u1)) * stddev;
    const double angle = 2.0 * std::numbers::pi * u2;
    out[i] = radius * std::cos(angle);
    if (i + 1 < out.size()) out[i + 1] = radius * std::sin(angle);
  }
}

// Allocation-free forward pass producing the activation pattern directly.
class PatternEvaluator {
 public:
  PatternEvaluator(const Architecture& arch, const WeightSet<double>& w)
      : weights_(&w) {
    const std::vector<Dims> dims = ValidateArchitecture(arch);
    Dims in = arch.input;
    for (size_t l = 0; l < dims.size(); ++l) {
      in_dims_.push_back(in);
      out_dims_.push_back(dims[l]);
      total_ += static_cast<size_t>(dims[l].size());
      buffers_.emplace_back(static_cast<size_t>(dims[l].size()));
      in = dims[l];
    }
  }

  size_t neurons() const { return total_; }

  void Evaluate(const std::vector<double>& x, ActivationPattern& pattern) {
    pattern.Reset(total_);
    const double* input = x.data();
    size_t bit = 0;
    for (size_t l = 0; l < buffers_.size(); ++l) {
      const LayerWeights<double>& lw = weights_->layers[l];
      const Dims& in = in_dims_[l];
      const Dims& out = out_dims_[l];
      const int s = lw.spec.stride;
      const size_t fsize = lw.filter_size();
      double* z = buffers_[l].data();
      for (int i = 0; i < out.height; ++i) {
        for (int j = 0; j < out.width; ++j) {
          for (int k = 0; k < out.depth; ++k) {
            const double* filter = lw.weights.data() + k * fsize;
            double acc = lw.bias[k];
            size_t e = 0;
            for (int a = 0; a < lw.spec.filter_height; ++a) {
              const double* row =
                  input + (static_cast<size_t>(a + i * s) * in.width + j * s) *
                              in.depth;
              const size_t span = static_cast<size_t>(lw.spec.filter_width) *
                                  in.depth;
              for (size_t q = 0; q < span; ++q) acc += filter[e++] * row[q];
            }
            if (acc > 0) {
              pattern.set(bit);
            } else {
              acc = 0;
            }
            ++bit;
            *z++ = acc;
          }
        }
      }
      input = buffers_[l].data();
    }
  }

 private:
  const WeightSet<double>* weights_;
  std::vector<Dims> in_dims_;
  std::vector<Dims> out_dims_;
  std::vector<std::vector<double>> buffers_;
  size_t total_ = 0;
};

}  // namespace

std::string ActivationPattern::ToString() const {
  std::string out;
  out.reserve(bits_);
  for (size_t i = 0; i < bits_; ++i) out += bit(i) ? '1' : '0';
  return out;
}

size_t ActivationPatternHash::operator()(const ActivationPattern& p) const {
  uint64_t h = p.size();
  for (uint64_t w : p.words()) h = Finalize(h ^ (w + kGolden));
  return static_cast<size_t>(h);
}

WeightSet<double> HeInit(const Architecture& arch, uint64_t seed) {
  ValidateArchitecture(arch);
  std::mt19937_64 engine(seed);
  WeightSet<double> w;
  int in_depth = arch.input.depth;
  for (const LayerSpec& spec : arch.layers) {
    LayerWeights<double> lw = ZeroLayerWeights<double>(spec, in_depth);
    const double fan_in = static_cast<double>(lw.filter_size());
    std::normal_distribution<double> normal(0.0, std::sqrt(2.0 / fan_in));
    for (double& v : lw.weights) v = normal(engine);
    for (double& v : lw.bias) v = normal(engine);
    w.layers.push_back(std::move(lw));
    in_depth = spec.depth;
  }
  return w;
}

Tensor3<double> SampleInput(const Dims& dims, double v, uint64_t seed,
                            uint64_t v_index, uint64_t index) {
  std::vector<double> data(static_cast<size_t>(dims.size()));
  KeyedStream stream(seed, v_index, index);
  FillGaussian(stream, v, data);
  return Tensor3<double>(dims, std::move(data));
}

SamplingResult EstimateRegionCount(const Architecture& arch,
                                   const WeightSet<double>& w,
                                   const SamplingConfig& config) {
  CheckWeightShapes(arch, w);
  if (config.num_samples < 1 || config.std_values.empty() ||
      config.batch_size < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "sampling needs num_samples >= 1, batch_size >= 1 and at "
                "least one standard deviation");
  }
  for (double v : config.std_values) {
    if (!(v > 0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "standard deviations must be positive");
    }
  }
  using PatternSet = std::unordered_set<ActivationPattern, ActivationPatternHash>;
  const int64_t batches =
      (config.num_samples + config.batch_size - 1) / config.batch_size;
  const int workers = static_cast<int>(
      std::max<int64_t>(1, std::min<int64_t>(config.threads, batches)));

  SamplingResult result;
  for (size_t vi = 0; vi < config.std_values.size(); ++vi) {
    const double v = config.std_values[vi];
    std::vector<PatternSet> local(workers);
    std::atomic<int64_t> next_batch{0};
    auto work = [&](int worker) {
      PatternEvaluator evaluator(arch, w);
      std::vector<double> x(static_cast<size_t>(arch.input.size()));
      ActivationPattern pattern;
      for (int64_t b = next_batch++; b < batches; b = next_batch++) {
        const int64_t begin = b * config.batch_size;
        const int64_t end =
            std::min(config.num_samples, begin + config.batch_size);
        for (int64_t n = begin; n < end; ++n) {
          KeyedStream stream(config.seed, vi, static_cast<uint64_t>(n));
          FillGaussian(stream, v, x);
          evaluator.Evaluate(x, pattern);
          local[worker].insert(pattern);
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    PatternSet merged = std::move(local[0]);
    for (int t = 1; t < workers; ++t) merged.merge(local[t]);
    const int64_t distinct = static_cast<int64_t>(merged.size());
    result.per_v.push_back(StdBreakdown{v, distinct});
    result.max_distinct = std::max(result.max_distinct, distinct);
  }
  return result;
}

}  // namespace convregions
