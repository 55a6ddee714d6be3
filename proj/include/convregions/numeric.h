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

#ifndef CONVREGIONS_NUMERIC_H_
#define CONVREGIONS_NUMERIC_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace convregions {

// Region counts and bounds routinely exceed 64 bits, so every count in the
// library is an arbitrary-precision integer.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) by the exact multiplicative formula. Zero when k < 0 or k > n;
// throws Error(kInvalidArgument) when n < 0.
BigInt Binomial(int64_t n, int64_t k);

// Sum_{i=0}^{k} C(n, i). Equals 2^n once k >= n.
BigInt BinomialPrefixSum(int64_t n, int64_t k);

BigInt Pow(const BigInt& base, uint64_t exponent);

std::string ToString(const BigInt& value);
// "p/q", or "p" when the denominator is one.
std::string ToString(const Rational& value);

// Accepts "p", "-p" and "p/q". Throws Error(kParseError) otherwise.
Rational ParseRational(const std::string& text);

}  // namespace convregions

#endif  // CONVREGIONS_NUMERIC_H_
