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

#include "convregions/tables.h"

#include "convregions/bounds.h"
#include "convregions/counting.h"
#include "convregions/error.h"
#include "convregions/sampler.h"

namespace convregions {
namespace {

constexpr int kSweepMax = 8;

struct TableInfo {
  TableId id;
  const char* name;
  Dims input;
  LayerSpec layer;
};

constexpr TableInfo kTables[] = {
    {TableId::kT1, "T1", {1, 3, 1}, {1, 2, 1, 1}},
    {TableId::kT2, "T2", {1, 4, 1}, {1, 2, 1, 2}},
    {TableId::kS1, "S1", {2, 2, 1}, {1, 2, 1, 1}},
    {TableId::kS2, "S2", {1, 4, 1}, {1, 2, 1, 1}},
    {TableId::kS3, "S3", {2, 3, 1}, {2, 2, 1, 1}},
    {TableId::kS4, "S4", {6, 6, 1}, {1, 3, 2, 1}},
    {TableId::kS5, "S5", {3, 3, 2}, {2, 2, 1, 1}},
};

const TableInfo& Info(TableId id) {
  for (const TableInfo& info : kTables) {
    if (info.id == id) return info;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown table");
}

std::vector<int> Sweep() {
  std::vector<int> sweep;
  for (int d = 1; d <= kSweepMax; ++d) sweep.push_back(d);
  return sweep;
}

TableArtifact OneLayerTable(const TableInfo& info) {
  TableArtifact table;
  table.id = info.name;
  const Dims hidden = LayerOutputDims(info.input, info.layer);
  table.caption = "one-layer ReLU CNN, input " + ToString(info.input) +
                  ", d_1 filters " + std::to_string(info.layer.filter_height) +
                  "x" + std::to_string(info.layer.filter_width) + "x" +
                  std::to_string(info.input.depth) + ", stride " +
                  std::to_string(info.layer.stride) + ", hidden " +
                  std::to_string(hidden.height) + "x" +
                  std::to_string(hidden.width) + "xd_1";
  table.sweep_name = "d1";
  table.sweep = Sweep();
  TableRow exact{"exact", {}, ""};
  TableRow fc{"fc_upper", {}, ""};
  TableRow naive{"naive_upper", {}, ""};
  for (int d1 : table.sweep) {
    LayerSpec layer = info.layer;
    layer.depth = d1;
    const Architecture arch{info.input, {layer}};
    exact.values.push_back(ToString(ExactRegionCount(info.input, layer)));
    fc.values.push_back(
        ToString(FcRegionCount(info.input.size(), HiddenNeuronCount(arch))));
    naive.values.push_back(ToString(NaiveBound(arch)));
  }
  table.rows = {exact, fc, naive};
  return table;
}

TableArtifact TwoLayerTable(const TableOptions& options) {
  TableArtifact table;
  table.id = "T2";
  table.caption =
      "two-layer ReLU CNN, input 1x4x1, 2 filters 1x2x1 stride 1, d_2 "
      "filters 1x2x2 stride 1";
  table.sweep_name = "d2";
  table.sweep = Sweep();
  TableRow upper{"upper", {}, ""};
  TableRow estimate{"sampling_estimate", {},
                    "seed-dependent estimate: seed=" +
                        std::to_string(options.seed) + ", " +
                        std::to_string(options.samples) +
                        " samples per std in {3,5,7,9,11,13}"};
  TableRow lower{"lower", {}, ""};
  for (int d2 : table.sweep) {
    const Architecture arch = Table2Architecture(d2);
    upper.values.push_back(ToString(MultilayerUpperBound(arch)));
    lower.values.push_back(ToString(MultilayerLowerBound(arch)));
    SamplingConfig config;
    config.num_samples = options.samples;
    config.seed = options.seed;
    config.threads = options.threads;
    const SamplingResult r =
        EstimateRegionCount(arch, HeInit(arch, options.seed), config);
    estimate.values.push_back(std::to_string(r.max_distinct));
  }
  table.rows = {upper, estimate, lower};
  return table;
}

}  // namespace

std::optional<TableId> ParseTableId(std::string_view name) {
  for (const TableInfo& info : kTables) {
    if (name == info.name) return info.id;
  }
  return std::nullopt;
}

std::string_view TableIdName(TableId id) { return Info(id).name; }

std::vector<TableId> AllTableIds() {
  std::vector<TableId> ids;
  for (const TableInfo& info : kTables) ids.push_back(info.id);
  return ids;
}

OneLayerFixture OneLayerTableGeometry(TableId id) {
  if (id == TableId::kT2) {
    throw Error(ErrorCode::kInvalidArgument, "T2 is a two-layer table");
  }
  const TableInfo& info = Info(id);
  return OneLayerFixture{info.input, info.layer};
}

Architecture Table2Architecture(int d2) {
  const TableInfo& info = Info(TableId::kT2);
  return Architecture{info.input, {info.layer, LayerSpec{1, 2, 1, d2}}};
}

TableArtifact ReproduceTable(TableId id, const TableOptions& options) {
  if (id == TableId::kT2) return TwoLayerTable(options);
  return OneLayerTable(Info(id));
}

}  // namespace convregions
