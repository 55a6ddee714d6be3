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

#include "convregions/weights.h"

namespace convregions {

LayerWeights<Rational> FoldLinearLayers(const Dims& input,
                                        const LayerWeights<Rational>& first,
                                        const LayerWeights<Rational>& second) {
  if (first.in_depth != input.depth || second.in_depth != first.spec.depth) {
    throw Error(ErrorCode::kShapeMismatch,
                "layer depths do not chain for composition");
  }
  const LayerSpec spec = ComposeLinearLayers(first.spec, second.spec, input);
  LayerWeights<Rational> folded = ZeroLayerWeights<Rational>(spec, input.depth);
  const int s1 = first.spec.stride;
  for (int k = 0; k < second.spec.depth; ++k) {
    Rational bias = second.bias[k];
    for (int a2 = 0; a2 < second.spec.filter_height; ++a2) {
      for (int b2 = 0; b2 < second.spec.filter_width; ++b2) {
        for (int c2 = 0; c2 < second.in_depth; ++c2) {
          const Rational& outer = second.w(k, a2, b2, c2);
          if (outer == 0) continue;
          bias += outer * first.bias[c2];
          for (int a1 = 0; a1 < first.spec.filter_height; ++a1) {
            for (int b1 = 0; b1 < first.spec.filter_width; ++b1) {
              for (int c = 0; c < first.in_depth; ++c) {
                folded.w(k, a1 + a2 * s1, b1 + b2 * s1, c) +=
                    outer * first.w(c2, a1, b1, c);
              }
            }
          }
        }
      }
    }
    folded.bias[k] = bias;
  }
  return folded;
}

}  // namespace convregions
