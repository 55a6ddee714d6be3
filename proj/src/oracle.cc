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

#include "convregions/oracle.h"

#include <atomic>
#include <random>
#include <sstream>
#include <thread>

#include "convregions/counting.h"
#include "convregions/error.h"

namespace convregions {
namespace {

constexpr int64_t kWeightRange = 1000000;

using Row = std::vector<BigInt>;

// Hyperplane as an integer row [normal | offset], scaled by the lcm of its
// denominators (scaling does not move the hyperplane).
Row IntegerRow(const Hyperplane& h) {
  BigInt scale = 1;
  auto absorb = [&scale](const Rational& r) {
    const BigInt den = boost::multiprecision::denominator(r);
    scale = scale / boost::multiprecision::gcd(scale, den) * den;
  };
  for (const Rational& r : h.normal) absorb(r);
  absorb(h.offset);
  Row row;
  row.reserve(h.normal.size() + 1);
  auto push = [&](const Rational& r) {
    row.push_back(boost::multiprecision::numerator(r) *
                  (scale / boost::multiprecision::denominator(r)));
  };
  for (const Rational& r : h.normal) push(r);
  push(h.offset);
  return row;
}

void DivideByContent(Row& row) {
  BigInt g = 0;
  for (const BigInt& v : row) {
    if (v != 0) g = boost::multiprecision::gcd(g, abs(v));
  }
  if (g > 1) {
    for (BigInt& v : row) v /= g;
  }
}

// Row echelon form of the augmented matrix of the current subarrangement,
// grown and shrunk one hyperplane at a time. Each stored row is already
// reduced against all rows before it, so a single forward pass reduces a
// new row.
class IncrementalEchelon {
 public:
  explicit IncrementalEchelon(int dim) : dim_(dim) {}

  enum class Outcome { kIndependent, kDependent, kInconsistent };

  Outcome Add(const Row& input) {
    Row r = input;
    for (size_t k = 0; k < rows_.size(); ++k) {
      const int pc = pivots_[k];
      if (r[pc] == 0) continue;
      const BigInt factor = r[pc];
      const BigInt pivot = rows_[k][pc];
      for (int c = 0; c <= dim_; ++c) {
        r[c] = r[c] * pivot - rows_[k][c] * factor;
      }
      DivideByContent(r);
    }
    for (int c = 0; c < dim_; ++c) {
      if (r[c] != 0) {
        rows_.push_back(std::move(r));
        pivots_.push_back(c);
        return Outcome::kIndependent;
      }
    }
    return r[dim_] == 0 ? Outcome::kDependent : Outcome::kInconsistent;
  }

  void PopIndependent() {
    rows_.pop_back();
    pivots_.pop_back();
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  int dim_;
  std::vector<Row> rows_;
  std::vector<int> pivots_;
};

// Adds the signed contributions of every central subset whose smallest
// index is >= `next` and that extends the current (central) subset.
// Supersets of a non-central subset are non-central, so inconsistent
// branches are cut.
void Explore(const std::vector<Row>& rows, size_t next, int subset_size,
             IncrementalEchelon& echelon, BigInt& sum) {
  for (size_t h = next; h < rows.size(); ++h) {
    const auto outcome = echelon.Add(rows[h]);
    if (outcome == IncrementalEchelon::Outcome::kInconsistent) continue;
    const int size = subset_size + 1;
    if ((size - echelon.rank()) % 2 == 0) {
      sum += 1;
    } else {
      sum -= 1;
    }
    Explore(rows, h + 1, size, echelon, sum);
    if (outcome == IncrementalEchelon::Outcome::kIndependent) {
      echelon.PopIndependent();
    }
  }
}

}  // namespace

Arrangement::Arrangement(int ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim < 1) {
    throw Error(ErrorCode::kInvalidArgument, "ambient dimension must be >= 1");
  }
}

void Arrangement::Add(Hyperplane h) {
  if (static_cast<int>(h.normal.size()) != ambient_dim_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "normal of length " + std::to_string(h.normal.size()) +
                    " in a " + std::to_string(ambient_dim_) +
                    "-dimensional arrangement");
  }
  bool nonzero = false;
  for (const Rational& r : h.normal) nonzero = nonzero || r != 0;
  if (!nonzero) {
    throw Error(ErrorCode::kInvalidArgument, "hyperplane with zero normal");
  }
  hyperplanes_.push_back(std::move(h));
}

WeightSet<Rational> SampleRationalWeights(const Architecture& arch,
                                          uint64_t seed) {
  ValidateArchitecture(arch);
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<int64_t> draw(-kWeightRange, kWeightRange);
  WeightSet<Rational> w;
  int in_depth = arch.input.depth;
  for (const LayerSpec& spec : arch.layers) {
    LayerWeights<Rational> lw = ZeroLayerWeights<Rational>(spec, in_depth);
    const size_t n = lw.filter_size();
    for (int k = 0; k < spec.depth; ++k) {
      bool all_zero = true;
      while (all_zero) {
        for (size_t e = 0; e < n; ++e) {
          const int64_t v = draw(engine);
          all_zero = all_zero && v == 0;
          lw.weights[k * n + e] = v;
        }
      }
      lw.bias[k] = draw(engine);
    }
    w.layers.push_back(std::move(lw));
    in_depth = spec.depth;
  }
  return w;
}

Arrangement BuildLayerArrangement(const Dims& input, const LayerSpec& layer,
                                  const LayerWeights<Rational>& weights) {
  if (!(weights.spec == layer) || weights.in_depth != input.depth ||
      weights.weights.size() != weights.filter_size() * layer.depth ||
      weights.bias.size() != static_cast<size_t>(layer.depth)) {
    throw Error(ErrorCode::kShapeMismatch,
                "weights do not match the layer geometry");
  }
  const Dims out = LayerOutputDims(input, layer);
  Arrangement arrangement(static_cast<int>(input.size()));
  for (int i = 0; i < out.height; ++i) {
    for (int j = 0; j < out.width; ++j) {
      for (int k = 0; k < layer.depth; ++k) {
        Hyperplane h;
        h.normal.assign(static_cast<size_t>(input.size()), Rational(0));
        for (int a = 0; a < layer.filter_height; ++a) {
          for (int b = 0; b < layer.filter_width; ++b) {
            for (int c = 0; c < input.depth; ++c) {
              const InputIndex index{a + i * layer.stride + 1,
                                     b + j * layer.stride + 1, c + 1};
              h.normal[FlatInputIndex(input, index)] = weights.w(k, a, b, c);
            }
          }
        }
        h.offset = -weights.bias[k];
        arrangement.Add(std::move(h));
      }
    }
  }
  return arrangement;
}

BigInt CountRegionsWhitney(const Arrangement& arrangement, int threads) {
  if (arrangement.size() > kMaxOracleHyperplanes) {
    throw Error(ErrorCode::kTooManyHyperplanes,
                std::to_string(arrangement.size()) + " hyperplanes exceed " +
                    std::to_string(kMaxOracleHyperplanes));
  }
  std::vector<Row> rows;
  rows.reserve(arrangement.size());
  for (const Hyperplane& h : arrangement.hyperplanes()) {
    rows.push_back(IntegerRow(h));
  }
  const int dim = arrangement.ambient_dim();
  const size_t m = rows.size();
  // The empty subarrangement is central with rank 0.
  BigInt total = 1;
  if (m == 0) return total;

  // Branch on the smallest member of the subset; branches are independent.
  auto branch = [&](size_t first, BigInt& sum) {
    IncrementalEchelon echelon(dim);
    if (echelon.Add(rows[first]) != IncrementalEchelon::Outcome::kIndependent) {
      return;  // unreachable: normals are nonzero
    }
    sum += 1;
    Explore(rows, first + 1, 1, echelon, sum);
  };

  const size_t workers =
      std::min<size_t>(m, static_cast<size_t>(std::max(threads, 1)));
  std::vector<BigInt> partial(m, 0);
  if (workers <= 1) {
    for (size_t h = 0; h < m; ++h) branch(h, partial[h]);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (size_t h = next++; h < m; h = next++) branch(h, partial[h]);
      });
    }
    for (auto& th : pool) th.join();
  }
  for (const BigInt& p : partial) total += p;
  return total;
}

BigInt ZaslavskyGeneralPositionBound(int64_t n, int64_t m) {
  if (n < 0 || m < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative dimension or count");
  }
  return BinomialPrefixSum(m, n);
}

uint64_t RetrySeed(uint64_t seed) {
  return seed ^ 0x5bd1e9955bd1e995ULL;
}

OracleCheck CheckRegionFormula(const Dims& input, const LayerSpec& layer,
                               uint64_t seed, int threads) {
  OracleCheck check;
  check.formula = ExactRegionCount(input, layer);
  const Architecture arch{input, {layer}};
  for (uint64_t s : {seed, RetrySeed(seed)}) {
    const WeightSet<Rational> w = SampleRationalWeights(arch, s);
    const Arrangement arrangement =
        BuildLayerArrangement(input, layer, w.layers[0]);
    check.seeds.push_back(s);
    check.oracle_counts.push_back(CountRegionsWhitney(arrangement, threads));
    if (check.oracle_counts.back() == check.formula) {
      check.match = true;
      break;
    }
  }
  return check;
}

std::string FormatArrangement(const Arrangement& arrangement) {
  std::ostringstream out;
  out << "# ambient_dim " << arrangement.ambient_dim() << "\n";
  for (const Hyperplane& h : arrangement.hyperplanes()) {
    for (const Rational& r : h.normal) out << ToString(r) << ' ';
    out << ToString(h.offset) << "\n";
  }
  return out.str();
}

Arrangement ParseArrangement(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_number = 0;
  int dim = -1;
  std::vector<std::vector<Rational>> parsed;
  std::vector<int> parsed_lines;
  while (std::getline(in, line)) {
    ++line_number;
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    if (token[0] == '#') {
      std::string key;
      if (token == "#" && fields >> key && key == "ambient_dim") {
        if (!(fields >> dim) || dim < 1) {
          throw Error(ErrorCode::kParseError,
                      "line " + std::to_string(line_number) +
                          ": bad ambient_dim header");
        }
      }
      continue;
    }
    std::vector<Rational> values;
    do {
      try {
        values.push_back(ParseRational(token));
      } catch (const Error& e) {
        throw Error(ErrorCode::kParseError,
                    "line " + std::to_string(line_number) + ": " + e.what());
      }
    } while (fields >> token);
    parsed.push_back(std::move(values));
    parsed_lines.push_back(line_number);
  }
  if (dim < 0) {
    if (parsed.empty()) {
      throw Error(ErrorCode::kParseError,
                  "empty arrangement without ambient_dim header");
    }
    dim = static_cast<int>(parsed.front().size()) - 1;
  }
  Arrangement arrangement(dim);
  for (size_t r = 0; r < parsed.size(); ++r) {
    auto& values = parsed[r];
    if (static_cast<int>(values.size()) != dim + 1) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(parsed_lines[r]) + ": expected " +
                      std::to_string(dim + 1) + " fields, got " +
                      std::to_string(values.size()));
    }
    Hyperplane h;
    h.offset = values.back();
    values.pop_back();
    h.normal = std::move(values);
    try {
      arrangement.Add(std::move(h));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParseError,
                  "line " + std::to_string(parsed_lines[r]) + ": " + e.what());
    }
  }
  return arrangement;
}

}  // namespace convregions
