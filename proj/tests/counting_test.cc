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

#include "convregions/counting.h"

#include <gtest/gtest.h>

#include "convregions/arch.h"
#include "convregions/error.h"
#include "fixtures.h"

namespace convregions {
namespace {

using testing::BruteForceCount;
using testing::GeometrySuite;
using testing::WithDepth;

TEST(ExactRegionCountTest, Examples) {
  EXPECT_EQ(ExactRegionCount({1, 3, 1}, {1, 2, 1, 3}), 40);
  EXPECT_EQ(ExactRegionCount({2, 2, 1}, {1, 2, 1, 4}), 121);
  EXPECT_EQ(ExactRegionCount({3, 3, 2}, {2, 2, 1, 8}),
            BigInt("3459170397"));
}

TEST(ExactRegionCountTest, ZeroFiltersGiveOneRegion) {
  for (const auto& g : GeometrySuite()) {
    EXPECT_EQ(ExactRegionCount(ReceptiveFields(g.input, g.layer), 0), 1)
        << g.name;
  }
}

TEST(ExactRegionCountTest, MatchesBruteForceK) {
  for (const auto& g : GeometrySuite()) {
    const ReceptiveFieldMap rf = ReceptiveFields(g.input, g.layer);
    if (rf.size() > 8) continue;
    for (int d1 = 1; d1 <= 5; ++d1) {
      EXPECT_EQ(ExactRegionCount(g.input, WithDepth(g.layer, d1)),
                BruteForceCount(rf, d1))
          << g.name << " d1=" << d1;
    }
  }
}

TEST(ExactRegionCountTest, FullyConnectedDegenerateCase) {
  // One window over the whole input: sum_{k<=n0} C(d1, k).
  for (int d1 = 0; d1 <= 12; ++d1) {
    EXPECT_EQ(ExactRegionCount(ReceptiveFields({2, 2, 1}, {2, 2, 1, 1}), d1),
              BinomialPrefixSum(d1, 4));
  }
}

TEST(ExactRegionCountTest, HeightWidthSymmetry) {
  for (int d1 = 1; d1 <= 6; ++d1) {
    EXPECT_EQ(ExactRegionCount({2, 3, 1}, {1, 2, 1, d1}),
              ExactRegionCount({3, 2, 1}, {2, 1, 1, d1}));
    EXPECT_EQ(ExactRegionCount({1, 5, 1}, {1, 2, 3, d1}),
              ExactRegionCount({5, 1, 1}, {2, 1, 3, d1}));
  }
}

TEST(ExactRegionCountTest, NegativeFiltersThrow) {
  EXPECT_THROW(ExactRegionCount(ReceptiveFields({1, 3, 1}, {1, 2, 1, 1}), -1),
               Error);
}

TEST(ExpectedRegionCountTest, EqualsExact) {
  EXPECT_EQ(ExpectedRegionCount({1, 3, 1}, {1, 2, 1, 3}), 40);
  EXPECT_EQ(ExpectedRegionCount({2, 2, 1}, {1, 2, 1, 4}), 121);
}

TEST(RegionPolynomialTest, OneRowInput) {
  const CountPolynomial p = RegionPolynomial({1, 3, 1}, {1, 2, 1, 1});
  EXPECT_EQ(p.coefficients(),
            (std::vector<Rational>{1, 1, 1, 1}));
  EXPECT_EQ(p.ToString(), "d^3 + d^2 + d + 1");
}

TEST(RegionPolynomialTest, SinglePosition) {
  const ReceptiveFieldMap rf({{1, 1}}, {{0, 1, 2}});
  const CountPolynomial p = RegionPolynomial(rf);
  for (int d1 = 0; d1 <= 10; ++d1) {
    EXPECT_EQ(p.EvaluateCount(d1), BinomialPrefixSum(d1, 3));
  }
}

TEST(RegionPolynomialTest, EvaluatesToExactCount) {
  for (const auto& g : GeometrySuite()) {
    const ReceptiveFieldMap rf = ReceptiveFields(g.input, g.layer);
    const CountPolynomial p = RegionPolynomial(rf);
    EXPECT_EQ(p.degree(), AsymptoticExponent(g.input, g.layer)) << g.name;
    for (int d1 = 0; d1 <= 10; ++d1) {
      EXPECT_EQ(p.EvaluateCount(d1), ExactRegionCount(rf, d1))
          << g.name << " d1=" << d1;
    }
  }
}

TEST(RegionPolynomialTest, FiniteDifferencesVanish) {
  for (const auto& g : GeometrySuite()) {
    const ReceptiveFieldMap rf = ReceptiveFields(g.input, g.layer);
    const int deg = static_cast<int>(AsymptoticExponent(g.input, g.layer));
    std::vector<BigInt> values;
    for (int d1 = 0; d1 <= 2 * deg + 3; ++d1) {
      values.push_back(ExactRegionCount(rf, d1));
    }
    for (int order = 0; order <= deg; ++order) {
      for (size_t i = 0; i + 1 < values.size(); ++i) {
        values[i] = values[i + 1] - values[i];
      }
      values.pop_back();
    }
    // values now holds the (deg+1)-th differences at d1 = 0..deg+2.
    for (const BigInt& v : values) EXPECT_EQ(v, 0) << g.name;
  }
}

// Leading coefficients for 1 x n x 1 inputs with a 1 x 2 filter, computed
// from the enumeration of K_N and cross-checked independently.
TEST(RegionPolynomialTest, LeadingCoefficientsOfOneRowInputs) {
  const std::vector<Rational> expected{Rational(1), Rational(7, 4),
                                       Rational(3), Rational(41, 8),
                                       Rational(35, 4)};
  for (int n = 3; n <= 7; ++n) {
    const CountPolynomial p = RegionPolynomial({1, n, 1}, {1, 2, 1, 1});
    EXPECT_EQ(p.degree(), n);
    EXPECT_EQ(p.leading_coefficient(), expected[n - 3]) << "n=" << n;
  }
}

TEST(CountPolynomialTest, EvaluateCountRejectsNonInteger) {
  const CountPolynomial half({Rational(0), Rational(1, 2)});
  EXPECT_EQ(half.Evaluate(3), Rational(3, 2));
  EXPECT_THROW(half.EvaluateCount(3), Error);
  EXPECT_EQ(half.EvaluateCount(4), 2);
}

TEST(AsymptoticExponentTest, Examples) {
  EXPECT_EQ(AsymptoticExponent({1, 3, 1}, {1, 2, 1, 1}), 3);
  EXPECT_EQ(AsymptoticExponent({3, 4, 2}, {1, 1, 1, 1}), 24);
  EXPECT_EQ(AsymptoticExponent({1, 5, 1}, {1, 2, 3, 1}), 4);
}

TEST(FcRegionCountTest, Examples) {
  EXPECT_EQ(FcRegionCount(3, 6), 42);
  EXPECT_EQ(FcRegionCount(5, 3), 8);
  EXPECT_EQ(FcRegionCount(2, 3), 7);
}

}  // namespace
}  // namespace convregions
