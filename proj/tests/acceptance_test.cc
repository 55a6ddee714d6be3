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

// Acceptance gate: one PASS/FAIL line per criterion. With --criterion N only
// that criterion runs; the exit status is nonzero if any selected criterion
// fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "convregions/arch.h"
#include "convregions/bounds.h"
#include "convregions/counting.h"
#include "convregions/coverage.h"
#include "convregions/oracle.h"
#include "convregions/sampler.h"
#include "convregions/tables.h"
#include "convregions/weights.h"
#include "fixtures.h"

namespace convregions {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

using Values = std::vector<std::string>;

std::string Join(const Values& v) {
  std::string out;
  for (const std::string& s : v) out += (out.empty() ? "" : " ") + s;
  return out;
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

int Threads() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

void CheckRow(Verdict& v, const std::string& name, const Values& got,
              const Values& want) {
  v.Require(got == want, name + " = [" + Join(got) + "], expected [" +
                             Join(want) + "]");
}

Values OneLayerRow(const Dims& input, LayerSpec layer,
                   const std::function<BigInt(const Dims&, LayerSpec)>& f) {
  Values out;
  for (int d1 = 1; d1 <= 8; ++d1) {
    layer.depth = d1;
    out.push_back(ToString(f(input, layer)));
  }
  return out;
}

BigInt Exact(const Dims& input, LayerSpec layer) {
  return ExactRegionCount(input, layer);
}

BigInt FlattenedFc(const Dims& input, LayerSpec layer) {
  return FcRegionCount(input.size(), LayerOutputDims(input, layer).size());
}

BigInt Naive(const Dims& input, LayerSpec layer) {
  return NaiveBound({input, {layer}});
}

Verdict Criterion1() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const Dims input{1, 3, 1};
  const LayerSpec layer{1, 2, 1, 1};
  CheckRow(v, "exact", OneLayerRow(input, layer, Exact),
           {"4", "15", "40", "85", "156", "259", "400", "585"});
  CheckRow(v, "fc", OneLayerRow(input, layer, FlattenedFc),
           {"4", "15", "42", "93", "176", "299", "470", "697"});
  CheckRow(v, "naive", OneLayerRow(input, layer, Naive),
           {"4", "16", "64", "256", "1024", "4096", "16384", "65536"});
  const double t = Seconds(start);
  v.Require(t < 1.0, "runtime " + std::to_string(t) + " s >= 1 s");
  return v;
}

struct OneLayerTable {
  TableId id;
  Values exact;
  Values fc;
};

Verdict Criterion2() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const std::vector<OneLayerTable> tables{
      {TableId::kS1,
       {"4", "16", "49", "121", "256", "484", "841", "1369"},
       {"4", "16", "57", "163", "386", "794", "1471", "2517"}},
      {TableId::kS2,
       {"8", "55", "217", "611", "1396", "2773", "4985", "8317"},
       {"8", "57", "256", "794", "1941", "4048", "7547", "12951"}},
      {TableId::kS3,
       {"4", "16", "64", "247", "836", "2424", "6126", "13829"},
       {"4", "16", "64", "247", "848", "2510", "6476", "14893"}},
      {TableId::kS4,
       {"64", "4096", "250047", "9129329", "191102976", "2537716544",
        "23664622311", "167557540697"},
       {"64", "4096", "262144", "16777216", "1073741824", "68719476736",
        "4398045536122", "281443698512817"}},
      {TableId::kS5,
       {"16", "256", "4096", "65536", "1048555", "16721253", "256376253",
        "3459170397"},
       {"16", "256", "4096", "65536", "1048555", "16721761", "256737233",
        "3485182163"}},
  };
  for (const OneLayerTable& t : tables) {
    const OneLayerFixture g = OneLayerTableGeometry(t.id);
    const std::string name(TableIdName(t.id));
    CheckRow(v, name + " exact", OneLayerRow(g.input, g.layer, Exact),
             t.exact);
    CheckRow(v, name + " fc", OneLayerRow(g.input, g.layer, FlattenedFc),
             t.fc);
    const int64_t positions = LayerOutputDims(g.input, g.layer).size();
    Values naive;
    for (int d1 = 1; d1 <= 8; ++d1) {
      naive.push_back(ToString(Pow(2, positions * d1)));
    }
    CheckRow(v, name + " naive", OneLayerRow(g.input, g.layer, Naive), naive);
    // The CLI artifact carries the same rows.
    const TableArtifact artifact = ReproduceTable(t.id);
    v.Require(artifact.rows.size() == 3 && artifact.rows[0].values == t.exact &&
                  artifact.rows[1].values == t.fc &&
                  artifact.rows[2].values == naive,
              name + " artifact rows differ");
  }
  const double t = Seconds(start);
  v.Require(t < 30.0, "runtime " + std::to_string(t) + " s >= 30 s");
  return v;
}

Verdict Criterion3() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  Values upper, lower;
  for (int d2 = 1; d2 <= 8; ++d2) {
    const Architecture arch = Table2Architecture(d2);
    upper.push_back(ToString(MultilayerUpperBound(arch)));
    lower.push_back(ToString(MultilayerLowerBound(arch)));
  }
  CheckRow(v, "upper", upper,
           {"220", "880", "3520", "13585", "46640", "138050", "356180",
            "819115"});
  CheckRow(v, "lower", lower,
           {"32", "120", "320", "680", "1248", "2072", "3200", "4680"});
  const double t = Seconds(start);
  v.Require(t < 5.0, "runtime " + std::to_string(t) + " s >= 5 s");
  return v;
}

Verdict Criterion4() {
  Verdict v;
  struct Case {
    Dims input;
    LayerSpec layer;
  };
  const std::vector<Case> cases{
      {{1, 3, 1}, {1, 2, 1, 5}}, {{2, 2, 1}, {1, 2, 1, 4}},
      {{1, 4, 1}, {1, 2, 1, 5}}, {{1, 5, 1}, {1, 2, 3, 4}},
      {{1, 5, 1}, {1, 3, 1, 5}}, {{1, 2, 2}, {1, 1, 1, 3}},
  };
  std::ostringstream summary;
  for (const Case& c : cases) {
    const auto start = std::chrono::steady_clock::now();
    const std::string name = ToString(c.input) + " " + ToString(c.layer);
    const int64_t neurons = LayerOutputDims(c.input, c.layer).size();
    v.Require(neurons <= 16 && c.input.size() <= 5, name + " too large");
    int retries = 0;
    for (uint64_t seed = 1; seed <= 5; ++seed) {
      const OracleCheck check =
          CheckRegionFormula(c.input, c.layer, seed, Threads());
      retries += static_cast<int>(check.seeds.size()) - 1;
      v.Require(check.match,
                name + " seed " + std::to_string(seed) + ": formula " +
                    ToString(check.formula) + ", oracle " +
                    ToString(check.oracle_counts.back()));
    }
    const double t = Seconds(start);
    v.Require(t < 60.0, name + " runtime " + std::to_string(t) + " s");
    summary << name << " retries=" << retries << "; ";
  }
  if (v.pass) v.detail = summary.str();
  return v;
}

Verdict Criterion5() {
  Verdict v;
  int geometries = 0;
  for (const auto& g : testing::GeometrySuite()) {
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
    bool vanish = values.size() == static_cast<size_t>(deg + 3);
    for (const BigInt& d : values) vanish = vanish && d == 0;
    v.Require(vanish, g.name + ": finite difference of order " +
                          std::to_string(deg + 1) + " does not vanish");
    ++geometries;
  }
  v.Require(geometries >= 5, "fewer than 5 geometries");
  std::string coefficients;
  for (int n = 3; n <= 5; ++n) {
    const CountPolynomial p = RegionPolynomial({1, n, 1}, {1, 2, 1, 1});
    const Rational expected(n - 1, 2);
    coefficients += " n=" + std::to_string(n) + ":" +
                    ToString(p.leading_coefficient());
    v.Require(p.degree() == n, "1x" + std::to_string(n) + "x1 degree " +
                                   std::to_string(p.degree()));
    v.Require(p.leading_coefficient() == expected,
              "1x" + std::to_string(n) + "x1 leading coefficient " +
                  ToString(p.leading_coefficient()) + ", expected " +
                  ToString(expected));
  }
  if (v.pass) {
    v.detail = std::to_string(geometries) + " geometries; leading" +
               coefficients;
  }
  return v;
}

Verdict Criterion6() {
  Verdict v;
  int checked = 0;
  for (const auto& g : testing::GeometrySuite()) {
    const ReceptiveFieldMap rf = ReceptiveFields(g.input, g.layer);
    if (rf.size() > 8) continue;
    v.Require(EnumerateKList(rf) == testing::BruteForceK(rf, 1 << 20),
              g.name + ": enumeration differs from brute force");
    for (int cap = 1; cap <= 3; ++cap) {
      v.Require(EnumerateKList(rf, cap) == testing::BruteForceK(rf, cap),
                g.name + ": capped enumeration differs (cap " +
                    std::to_string(cap) + ")");
    }
    ++checked;
  }
  const std::vector<MultiIndex> one_row{{0, 0}, {0, 1}, {0, 2}, {1, 0},
                                         {1, 1}, {1, 2}, {2, 0}, {2, 1}};
  v.Require(EnumerateKList(ReceptiveFields({1, 3, 1}, {1, 2, 1, 1})) ==
                one_row,
            "1x3x1 listing differs");
  if (v.pass) v.detail = std::to_string(checked) + " geometries";
  return v;
}

Verdict Criterion7() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream summary;
  SamplingConfig config;
  config.num_samples = 1000000;
  config.threads = Threads();
  for (int d1 = 1; d1 <= 3; ++d1) {
    const Architecture arch{{1, 3, 1}, {{1, 2, 1, d1}}};
    const BigInt exact = ExactRegionCount(arch.input, arch.layers[0]);
    int saturated = 0;
    summary << "d1=" << d1 << " R=" << exact << " estimates";
    for (uint64_t seed = 0; seed < 3; ++seed) {
      config.seed = seed;
      const int64_t count =
          EstimateRegionCount(arch, HeInit(arch, seed), config).max_distinct;
      summary << " " << count;
      v.Require(BigInt(count) <= exact, "estimate above exact count");
      saturated += BigInt(count) == exact;
    }
    summary << "; ";
    v.Require(saturated >= 2, "d1=" + std::to_string(d1) + ": only " +
                                  std::to_string(saturated) +
                                  " of 3 seeds reached R_N");
  }
  // Bracket check on the other fixtures.
  SamplingConfig small;
  small.num_samples = 100000;
  small.threads = Threads();
  for (const auto& g : testing::GeometrySuite()) {
    const Architecture arch{g.input, {testing::WithDepth(g.layer, 2)}};
    const int64_t count =
        EstimateRegionCount(arch, HeInit(arch, 1), small).max_distinct;
    v.Require(BigInt(count) <= ExactRegionCount(arch.input, arch.layers[0]),
              g.name + ": estimate above exact count");
  }
  for (int d2 = 1; d2 <= 4; ++d2) {
    const Architecture arch = Table2Architecture(d2);
    const int64_t count =
        EstimateRegionCount(arch, HeInit(arch, 1), small).max_distinct;
    v.Require(BigInt(count) <= MultilayerUpperBound(arch),
              "T2 d2=" + std::to_string(d2) + ": estimate above upper bound");
    summary << "T2 d2=" << d2 << " " << count << "; ";
  }
  const double t = Seconds(start);
  v.Require(t < 120.0, "runtime " + std::to_string(t) + " s >= 120 s");
  v.detail = v.pass ? summary.str() : v.detail + " [" + summary.str() + "]";
  return v;
}

Verdict Criterion8() {
  Verdict v;
  std::mt19937_64 engine(2026);
  auto uniform = [&engine](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine);
  };
  std::uniform_int_distribution<int64_t> value(-1000, 1000);
  for (int trial = 0; trial < 10; ++trial) {
    const LayerSpec first{uniform(1, 3), uniform(1, 3), uniform(1, 2),
                          uniform(1, 3)};
    const LayerSpec second{uniform(1, 3), uniform(1, 3), uniform(1, 2),
                           uniform(1, 3)};
    const int fh = first.filter_height +
                   (second.filter_height - 1) * first.stride;
    const int fw = first.filter_width + (second.filter_width - 1) * first.stride;
    const Dims input{fh + uniform(0, 4), fw + uniform(0, 4), uniform(1, 2)};
    const std::string name = "trial " + std::to_string(trial);

    const LayerSpec composed = ComposeLinearLayers(first, second, input);
    v.Require(composed == LayerSpec{fh, fw, first.stride * second.stride,
                                    second.depth},
              name + ": composed spec " + ToString(composed));

    const Architecture arch{input, {first, second}};
    const WeightSet<Rational> w = SampleRationalWeights(arch, trial);
    const LayerWeights<Rational> folded =
        FoldLinearLayers(input, w.layers[0], w.layers[1]);
    v.Require(folded.spec == composed, name + ": folded spec differs");
    for (int sample = 0; sample < 5; ++sample) {
      Tensor3<Rational> x(input);
      for (Rational& e : x.data()) e = Rational(value(engine), 1 + uniform(0, 9));
      const Tensor3<Rational> stacked =
          Convolve(Convolve(x, w.layers[0]), w.layers[1]);
      v.Require(stacked == Convolve(x, folded),
                name + ": folded pre-activations differ");
    }
  }
  if (v.pass) v.detail = "10 random stacks, 5 rational inputs each";
  return v;
}

struct Criterion {
  int id;
  const char* title;
  Verdict (*run)();
};

constexpr Criterion kCriteria[] = {
    {1, "Table 1 reproduction", Criterion1},
    {2, "tables S1-S5", Criterion2},
    {3, "Table 2 bounds", Criterion3},
    {4, "oracle equivalence", Criterion4},
    {5, "polynomial property", Criterion5},
    {6, "K_N enumeration", Criterion6},
    {7, "sampler saturation", Criterion7},
    {8, "linear composition", Criterion8},
};

}  // namespace
}  // namespace convregions

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }
  bool all_pass = true;
  bool ran = false;
  for (const auto& c : convregions::kCriteria) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    const auto start = std::chrono::steady_clock::now();
    convregions::Verdict verdict;
    try {
      verdict = c.run();
    } catch (const std::exception& e) {
      verdict.pass = false;
      verdict.detail = std::string("exception: ") + e.what();
    }
    all_pass = all_pass && verdict.pass;
    std::printf("criterion %d (%s): %s [%.2fs] %s\n", c.id, c.title,
                verdict.pass ? "PASS" : "FAIL",
                convregions::Seconds(start), verdict.detail.c_str());
  }
  if (!ran) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all_pass ? 0 : 1;
}
