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

#ifndef CONVREGIONS_TABLES_H_
#define CONVREGIONS_TABLES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "convregions/arch.h"

namespace convregions {

// Built-in table fixtures. T1 and S1-S5 are one-layer geometries swept over
// d_1 = 1..8; T2 is the two-layer network 1x4x1 -> 2 filters 1x2 ->
// d_2 filters 1x2 swept over d_2 = 1..8.
enum class TableId { kT1, kT2, kS1, kS2, kS3, kS4, kS5 };

std::optional<TableId> ParseTableId(std::string_view name);
std::string_view TableIdName(TableId id);
std::vector<TableId> AllTableIds();

struct OneLayerFixture {
  Dims input;
  // depth is the swept quantity and is left at 1 here.
  LayerSpec layer;
};

// Geometry of a one-layer table. Throws Error(kInvalidArgument) for T2.
OneLayerFixture OneLayerTableGeometry(TableId id);

// The T2 network with d_2 filters in its second layer.
Architecture Table2Architecture(int d2);

struct TableRow {
  std::string label;
  std::vector<std::string> values;
  // Empty for deterministic rows.
  std::string note;
};

struct TableArtifact {
  std::string id;
  std::string caption;
  std::string sweep_name;
  std::vector<int> sweep;
  std::vector<TableRow> rows;
};

struct TableOptions {
  uint64_t seed = 0;
  // Samples per standard deviation for the T2 sampling row.
  int64_t samples = 100000;
  int threads = 1;
};

// One-layer tables: rows "exact", "fc_upper" (the flattened fully connected
// count) and "naive_upper". T2: rows "upper", "sampling_estimate" and
// "lower"; the estimate is freshly computed and labelled as seed-dependent.
TableArtifact ReproduceTable(TableId id, const TableOptions& options = {});

}  // namespace convregions

#endif  // CONVREGIONS_TABLES_H_
