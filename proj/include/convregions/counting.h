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

#ifndef CONVREGIONS_COUNTING_H_
#define CONVREGIONS_COUNTING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "convregions/arch.h"
#include "convregions/coverage.h"
#include "convregions/numeric.h"

namespace convregions {

// A polynomial in the number of filters d_1 with exact rational
// coefficients; coefficients()[p] multiplies d_1^p. Trailing zeros are
// trimmed, so degree() is exact.
class CountPolynomial {
 public:
  CountPolynomial() = default;
  explicit CountPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational leading_coefficient() const;

  Rational Evaluate(const Rational& x) const;
  // Evaluates at a nonnegative integer and checks the value is integral.
  BigInt EvaluateCount(int64_t d1) const;

  // "d^3 + d^2 + d + 1" style rendering, highest power first.
  std::string ToString() const;

 private:
  std::vector<Rational> coefficients_;
};

// Maximal number of linear regions of the one-layer ReLU CNN `layer` on
// `input`: sum over t in K_N of prod_p C(d_1, t_p), in exact integers.
BigInt ExactRegionCount(const Dims& input, const LayerSpec& layer);
BigInt ExactRegionCount(const ReceptiveFieldMap& rf, int64_t filters);

// The expected region count under any parameter distribution with a
// density. It coincides with ExactRegionCount; the separate name records
// which of the two claims a caller relies on.
BigInt ExpectedRegionCount(const Dims& input, const LayerSpec& layer);

// The region count as a polynomial in d_1 (layer.depth is ignored).
CountPolynomial RegionPolynomial(const Dims& input, const LayerSpec& layer);
CountPolynomial RegionPolynomial(const ReceptiveFieldMap& rf);

// Degree of the region count in d_1: the number of input neurons touched by
// at least one filter window.
int64_t AsymptoticExponent(const Dims& input, const LayerSpec& layer);

// Maximal regions of a one-layer fully connected ReLU network with n0
// inputs and n1 hidden units: sum_{i <= n0} C(n1, i).
BigInt FcRegionCount(int64_t n0, int64_t n1);

}  // namespace convregions

#endif  // CONVREGIONS_COUNTING_H_
