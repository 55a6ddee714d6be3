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

#ifndef CONVREGIONS_CLI_H_
#define CONVREGIONS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "convregions/arch.h"
#include "convregions/error.h"
#include "convregions/tables.h"
#include "json.hpp"

namespace convregions::cli {

enum class Command {
  kDims,
  kParams,
  kExact,
  kPoly,
  kBounds,
  kOracle,
  kSample,
  kCompose,
  kTable,
  kCompare,
};

enum class OutputFormat { kCsv, kJson };

struct RunSpec {
  Command command = Command::kDims;
  std::optional<Architecture> arch;
  // Second architecture of `compare`.
  std::optional<Architecture> arch_b;
  std::optional<TableId> table;
  // Inclusive d_1 sweep for exact, poly and oracle.
  std::optional<std::pair<int, int>> d1_range;
  uint64_t seed = 0;
  int threads = 1;
  std::optional<int64_t> samples;
  std::vector<double> std_values;
  OutputFormat format = OutputFormat::kCsv;
  std::string out_path;
};

// Parses the arguments after the program name. Architectures come from
// --config <file> / --config-b <file> or inline --arch / --arch-b JSON.
// Throws Error(kParseError) on malformed flags or configs and geometry
// errors for invalid architectures.
RunSpec ParseRunSpec(const std::vector<std::string>& args);

// One output cell. Counts are kept as decimal strings so they survive JSON
// consumers limited to doubles.
struct Cell {
  enum class Kind { kInteger, kBigInteger, kReal, kText };
  Kind kind = Kind::kText;
  std::string text;
};

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Full JSON document; carries the same numbers as `rows`.
  nlohmann::json json;
  // Set when the command ran but its check failed (oracle mismatch, lower
  // bound hypothesis violated). The report is still emitted.
  std::optional<Error> failure;
};

Report Run(const RunSpec& spec);

std::string Render(const Report& report, OutputFormat format);

// 0 ok, 2 parse, 3 validation, 4 hypothesis violation, 5 oracle mismatch.
int ExitCodeFor(ErrorCode code);

// {"error": {"code": .., "message": .., "exit_code": ..}}
std::string ErrorObject(const Error& error);

// Whole program: parse, run, write to `out` or --out, errors to `err`.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace convregions::cli

#endif  // CONVREGIONS_CLI_H_
