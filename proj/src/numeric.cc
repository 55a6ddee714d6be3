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

#include "convregions/numeric.h"

#include <algorithm>
#include <cctype>

#include "convregions/error.h"

namespace convregions {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFilterExceedsInput:
      return "FilterExceedsInput";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kUnknownPosition:
      return "UnknownPosition";
    case ErrorCode::kDimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::kShapeMismatch:
      return "ShapeMismatch";
    case ErrorCode::kHypothesisViolated:
      return "HypothesisViolated";
    case ErrorCode::kTooManyHyperplanes:
      return "TooManyHyperplanes";
    case ErrorCode::kParseError:
      return "ParseError";
    case ErrorCode::kValidationError:
      return "ValidationError";
    case ErrorCode::kOracleMismatch:
      return "OracleMismatch";
  }
  return "Unknown";
}

BigInt Binomial(int64_t n, int64_t k) {
  if (n < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "binomial with negative n " + std::to_string(n));
  }
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  // After step i the accumulator holds C(n - k + i, i), so each division is
  // exact.
  for (int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt BinomialPrefixSum(int64_t n, int64_t k) {
  if (n < 0 || k < 0) return 0;
  if (k >= n) return Pow(BigInt(2), static_cast<uint64_t>(n));
  BigInt term = 1;
  BigInt sum = 1;
  for (int64_t i = 1; i <= k; ++i) {
    term *= n - i + 1;
    term /= i;
    sum += term;
  }
  return sum;
}

BigInt Pow(const BigInt& base, uint64_t exponent) {
  BigInt result = 1;
  BigInt b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string ToString(const BigInt& value) { return value.str(); }

std::string ToString(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt ParseInteger(const std::string& text, const std::string& whole) {
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  if (pos == text.size() ||
      !std::all_of(text.begin() + pos, text.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw Error(ErrorCode::kParseError, "malformed rational '" + whole + "'");
  }
  return BigInt(text[0] == '+' ? text.substr(1) : text);
}

}  // namespace

Rational ParseRational(const std::string& text) {
  const size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(ParseInteger(text, text));
  const BigInt num = ParseInteger(text.substr(0, slash), text);
  const BigInt den = ParseInteger(text.substr(slash + 1), text);
  if (den == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator in '" + text + "'");
  }
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

}  // namespace convregions
