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

#include <algorithm>
#include <map>

#include "convregions/error.h"

namespace convregions {
namespace {

void Trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// d(d-1)...(d-t+1) as integer coefficients in d.
std::vector<BigInt> FallingFactorial(int t) {
  std::vector<BigInt> poly{1};
  for (int r = 0; r < t; ++r) {
    std::vector<BigInt> next(poly.size() + 1, 0);
    for (size_t p = 0; p < poly.size(); ++p) {
      next[p + 1] += poly[p];
      next[p] -= poly[p] * r;
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<BigInt> Multiply(const std::vector<BigInt>& x,
                             const std::vector<BigInt>& y) {
  std::vector<BigInt> out(x.size() + y.size() - 1, 0);
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

}  // namespace

CountPolynomial::CountPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  Trim(coefficients_);
}

Rational CountPolynomial::leading_coefficient() const {
  return coefficients_.empty() ? Rational(0) : coefficients_.back();
}

Rational CountPolynomial::Evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

BigInt CountPolynomial::EvaluateCount(int64_t d1) const {
  const Rational value = Evaluate(Rational(d1));
  if (boost::multiprecision::denominator(value) != 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomial value at " + std::to_string(d1) +
                    " is not an integer: " + convregions::ToString(value));
  }
  return boost::multiprecision::numerator(value);
}

std::string CountPolynomial::ToString() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (int p = degree(); p >= 0; --p) {
    const Rational& c = coefficients_[p];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = magnitude == 1;
    if (!unit || p == 0) out += convregions::ToString(magnitude);
    if (p > 0) {
      if (!unit) out += "*";
      out += "d";
      if (p > 1) out += "^" + std::to_string(p);
    }
  }
  return out;
}

BigInt ExactRegionCount(const ReceptiveFieldMap& rf, int64_t filters) {
  if (filters < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative filter count");
  }
  size_t widest = 0;
  for (size_t p = 0; p < rf.size(); ++p) {
    widest = std::max(widest, rf.set(p).size());
  }
  // Terms with some t_p > d_1 vanish.
  const int cap =
      static_cast<int>(std::min<int64_t>(filters, static_cast<int64_t>(widest)));
  std::vector<BigInt> choose(cap + 1);
  for (int t = 0; t <= cap; ++t) choose[t] = Binomial(filters, t);

  BigInt total = 0;
  EnumerateK(rf, cap, [&](const MultiIndex& t) {
    BigInt term = 1;
    for (int v : t) {
      if (v == 0) continue;
      term *= choose[v];
    }
    total += term;
  });
  return total;
}

BigInt ExactRegionCount(const Dims& input, const LayerSpec& layer) {
  return ExactRegionCount(ReceptiveFields(input, layer), layer.depth);
}

BigInt ExpectedRegionCount(const Dims& input, const LayerSpec& layer) {
  return ExactRegionCount(input, layer);
}

CountPolynomial RegionPolynomial(const ReceptiveFieldMap& rf) {
  // prod_p C(d, t_p) only depends on the multiset of t values, so tuples are
  // grouped by their sorted form and each product is expanded once.
  std::map<std::vector<int>, BigInt> multiplicity;
  EnumerateK(rf, std::nullopt, [&](const MultiIndex& t) {
    std::vector<int> key;
    for (int v : t) {
      if (v > 0) key.push_back(v);
    }
    std::sort(key.begin(), key.end());
    multiplicity[key] += 1;
  });

  std::map<int, std::vector<BigInt>> falling;
  std::vector<Rational> coefficients(rf.universe().size() + 1, Rational(0));
  for (const auto& [key, count] : multiplicity) {
    std::vector<BigInt> product{1};
    BigInt denominator = 1;
    for (int v : key) {
      auto it = falling.find(v);
      if (it == falling.end()) it = falling.emplace(v, FallingFactorial(v)).first;
      product = Multiply(product, it->second);
      for (int r = 2; r <= v; ++r) denominator *= r;
    }
    for (size_t p = 0; p < product.size(); ++p) {
      if (product[p] != 0) {
        coefficients[p] += Rational(product[p] * count, denominator);
      }
    }
  }
  return CountPolynomial(std::move(coefficients));
}

CountPolynomial RegionPolynomial(const Dims& input, const LayerSpec& layer) {
  return RegionPolynomial(ReceptiveFields(input, layer));
}

int64_t AsymptoticExponent(const Dims& input, const LayerSpec& layer) {
  return static_cast<int64_t>(ReceptiveFields(input, layer).universe().size());
}

BigInt FcRegionCount(int64_t n0, int64_t n1) {
  if (n0 < 0 || n1 < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative neuron count");
  }
  return BinomialPrefixSum(n1, n0);
}

}  // namespace convregions
