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

#include "convregions/bounds.h"

#include "convregions/counting.h"
#include "convregions/error.h"

namespace convregions {

BigInt NaiveBound(const Architecture& arch) {
  return Pow(BigInt(2), static_cast<uint64_t>(HiddenNeuronCount(arch)));
}

BigInt MultilayerLowerBound(const Architecture& arch) {
  const std::vector<Dims> dims = ValidateArchitecture(arch);
  const int d0 = arch.input.depth;
  for (size_t l = 0; l < arch.layers.size(); ++l) {
    if (arch.layers[l].depth < d0) {
      throw Error(ErrorCode::kHypothesisViolated,
                  "lower bound needs d_l >= d_0; layer " +
                      std::to_string(l + 1) + " has depth " +
                      std::to_string(arch.layers[l].depth) + " < " +
                      std::to_string(d0));
    }
  }
  const size_t last = arch.layers.size() - 1;
  const Dims before_last = last == 0 ? arch.input : dims[last - 1];
  // The last layer sees an input of depth d_0, whatever d_{L-1} is.
  const Dims reduced_input{before_last.height, before_last.width, d0};
  BigInt bound = ExactRegionCount(reduced_input, arch.layers[last]);
  for (size_t l = 0; l < last; ++l) {
    const int64_t exponent =
        static_cast<int64_t>(dims[l].height) * dims[l].width * d0;
    bound *= Pow(BigInt(arch.layers[l].depth / d0),
                 static_cast<uint64_t>(exponent));
  }
  return bound;
}

BigInt MultilayerUpperBound(const Architecture& arch, UpperBoundLimit limit) {
  const std::vector<Dims> dims = ValidateArchitecture(arch);
  BigInt bound = ExactRegionCount(arch.input, arch.layers[0]);
  for (size_t l = 1; l < arch.layers.size(); ++l) {
    const int64_t cap = limit == UpperBoundLimit::kInputDimension
                            ? arch.input.size()
                            : dims[l - 1].size();
    bound *= BinomialPrefixSum(dims[l].size(), cap);
  }
  return bound;
}

BoundReport FcBounds(int d0, std::span<const int> depths) {
  if (depths.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "need at least one hidden layer");
  }
  if (d0 < 1) throw Error(ErrorCode::kInvalidArgument, "d_0 must be >= 1");
  BoundReport report;
  BigInt lower = BinomialPrefixSum(depths.back(), d0);
  BigInt upper = 1;
  int64_t width = 0;
  for (size_t l = 0; l < depths.size(); ++l) {
    if (depths[l] < 1) {
      throw Error(ErrorCode::kInvalidArgument, "hidden width must be >= 1");
    }
    if (l + 1 < depths.size()) {
      lower *= Pow(BigInt(depths[l] / d0), static_cast<uint64_t>(d0));
    }
    upper *= BinomialPrefixSum(depths[l], d0);
    width += depths[l];
  }
  report.lower = std::move(lower);
  report.upper = std::move(upper);
  report.naive_upper = Pow(BigInt(2), static_cast<uint64_t>(width));
  report.lower_method = "fully-connected lower bound";
  report.upper_method = "fully-connected upper bound";
  report.naive_method = "2^neurons";
  return report;
}

BoundReport ComputeBounds(const Architecture& arch) {
  BoundReport report;
  report.naive_upper = NaiveBound(arch);
  report.naive_method = "2^neurons";
  if (arch.layers.size() == 1) {
    report.upper = ExactRegionCount(arch.input, arch.layers[0]);
    report.upper_method = "exact one-layer count";
  } else {
    report.upper = MultilayerUpperBound(arch);
    report.upper_method = "multilayer upper bound";
  }
  try {
    report.lower = MultilayerLowerBound(arch);
    report.lower_method = arch.layers.size() == 1 ? "exact one-layer count"
                                                  : "multilayer lower bound";
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kHypothesisViolated) throw;
    report.lower_unavailable = e.what();
  }
  return report;
}

ArchExpressivity EvaluateExpressivity(const Architecture& arch) {
  ArchExpressivity out;
  out.parameters = ParameterCount(arch);
  out.bounds = ComputeBounds(arch);
  if (out.bounds.lower) {
    out.lower_per_parameter = Rational(*out.bounds.lower, out.parameters);
  }
  out.upper_per_parameter = Rational(out.bounds.upper, out.parameters);
  return out;
}

ExpressivityReport CompareExpressivity(const Architecture& first,
                                       const Architecture& second) {
  return ExpressivityReport{EvaluateExpressivity(first),
                            EvaluateExpressivity(second)};
}

}  // namespace convregions
