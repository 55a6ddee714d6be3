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

#include "convregions/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "convregions/arch_json.h"
#include "convregions/bounds.h"
#include "convregions/counting.h"
#include "convregions/oracle.h"
#include "convregions/sampler.h"
#include "convregions/weights.h"

namespace convregions::cli {
namespace {

using nlohmann::json;

struct HelpRequested {
  std::string text;
};

struct CommandInfo {
  const char* name;
  Command command;
  const char* help;
};

constexpr CommandInfo kCommands[] = {
    {"dims", Command::kDims, "Layer output dimensions"},
    {"params", Command::kParams, "Trainable parameter count"},
    {"exact", Command::kExact, "Exact region count of a one-layer network"},
    {"poly", Command::kPoly, "Region count as a polynomial in the filter count"},
    {"bounds", Command::kBounds, "Naive, upper and lower region bounds"},
    {"oracle", Command::kOracle,
     "Check the exact count against a hyperplane-arrangement count"},
    {"sample", Command::kSample, "Sampling estimate of the region count"},
    {"compose", Command::kCompose, "Fold two linear convolution layers"},
    {"table", Command::kTable, "Reproduce a built-in table"},
    {"compare", Command::kCompare, "Compare the bounds of two networks"},
};

const char* CommandName(Command c) {
  for (const CommandInfo& info : kCommands) {
    if (info.command == c) return info.name;
  }
  return "?";
}

Cell Int(int64_t v) { return Cell{Cell::Kind::kInteger, std::to_string(v)}; }
Cell Big(const BigInt& v) { return Cell{Cell::Kind::kBigInteger, ToString(v)}; }
Cell Text(std::string v) { return Cell{Cell::Kind::kText, std::move(v)}; }
Cell Real(double v) {
  std::ostringstream s;
  s << v;
  return Cell{Cell::Kind::kReal, s.str()};
}

json CellJson(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::kInteger:
      return std::stoll(c.text);
    case Cell::Kind::kReal:
      return std::stod(c.text);
    case Cell::Kind::kBigInteger:
    case Cell::Kind::kText:
      return c.text;
  }
  return c.text;
}

// Generic document: the columns plus one object per row.
json TableJson(const Report& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    json object = json::object();
    for (size_t c = 0; c < row.size(); ++c) {
      object[r.columns[c]] = CellJson(row[c]);
    }
    rows.push_back(std::move(object));
  }
  return json{{"columns", r.columns}, {"rows", rows}};
}

std::pair<int, int> ParseRange(const std::string& text) {
  const size_t dots = text.find("..");
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::kParseError,
                "--d1: expected <a>..<b> or <a>, got '" + text + "'");
  }
}

std::vector<double> ParseStdList(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kParseError,
                  "--std: expected a comma separated list of numbers, got '" +
                      text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::kParseError, "--std: empty list");
  return out;
}

Architecture LoadArchitecture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParseError, "cannot read config " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return ParseArchitecture(buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

const LayerSpec& SingleLayer(const Architecture& arch, const char* command) {
  if (arch.layers.size() != 1) {
    throw Error(ErrorCode::kValidationError,
                std::string(command) + " needs a one-layer architecture, got " +
                    std::to_string(arch.layers.size()) + " layers");
  }
  return arch.layers[0];
}

std::vector<int> SweepValues(const RunSpec& spec, int fallback, int minimum) {
  auto [lo, hi] = spec.d1_range.value_or(std::pair{fallback, fallback});
  if (lo < minimum || hi < lo) {
    throw Error(ErrorCode::kValidationError,
                "--d1 range must satisfy " + std::to_string(minimum) +
                    " <= a <= b");
  }
  std::vector<int> values;
  for (int d = lo; d <= hi; ++d) values.push_back(d);
  return values;
}

Report RunDims(const Architecture& arch) {
  Report r;
  r.columns = {"layer", "height", "width", "depth"};
  r.rows.push_back({Int(0), Int(arch.input.height), Int(arch.input.width),
                    Int(arch.input.depth)});
  const auto dims = ValidateArchitecture(arch);
  for (size_t l = 0; l < dims.size(); ++l) {
    r.rows.push_back({Int(static_cast<int64_t>(l + 1)), Int(dims[l].height),
                      Int(dims[l].width), Int(dims[l].depth)});
  }
  r.json = TableJson(r);
  return r;
}

Report RunParams(const Architecture& arch) {
  Report r;
  r.columns = {"parameters"};
  r.rows.push_back({Big(ParameterCount(arch))});
  r.json = TableJson(r);
  return r;
}

Report RunExact(const RunSpec& spec) {
  const Architecture& arch = *spec.arch;
  const LayerSpec& layer = SingleLayer(arch, "exact");
  const ReceptiveFieldMap rf = ReceptiveFields(arch.input, layer);
  Report r;
  r.columns = {"d1", "exact"};
  for (int d1 : SweepValues(spec, layer.depth, 0)) {
    r.rows.push_back({Int(d1), Big(ExactRegionCount(rf, d1))});
  }
  r.json = TableJson(r);
  return r;
}

Report RunPoly(const RunSpec& spec) {
  const Architecture& arch = *spec.arch;
  const LayerSpec& layer = SingleLayer(arch, "poly");
  const CountPolynomial poly = RegionPolynomial(arch.input, layer);
  Report r;
  r.columns = {"kind", "index", "value"};
  json coefficients = json::array();
  for (size_t p = 0; p < poly.coefficients().size(); ++p) {
    const std::string c = ToString(poly.coefficients()[p]);
    r.rows.push_back({Text("coefficient"), Int(static_cast<int64_t>(p)),
                      Text(c)});
    coefficients.push_back(c);
  }
  for (int d1 : SweepValues(spec, layer.depth, 0)) {
    r.rows.push_back({Text("value"), Int(d1), Big(poly.EvaluateCount(d1))});
  }
  r.json = TableJson(r);
  r.json["polynomial"] = poly.ToString();
  r.json["degree"] = poly.degree();
  r.json["coefficients"] = coefficients;
  r.json["asymptotic_exponent"] = AsymptoticExponent(arch.input, layer);
  return r;
}

Report RunBounds(const Architecture& arch) {
  const BoundReport b = ComputeBounds(arch);
  Report r;
  r.columns = {"bound", "value", "method"};
  r.rows.push_back({Text("naive_upper"), Big(b.naive_upper),
                    Text(b.naive_method)});
  r.rows.push_back({Text("upper"), Big(b.upper), Text(b.upper_method)});
  if (b.lower) {
    r.rows.push_back({Text("lower"), Big(*b.lower), Text(b.lower_method)});
  } else {
    r.rows.push_back({Text("lower"), Text("unavailable"),
                      Text(b.lower_unavailable)});
    r.failure = Error(ErrorCode::kHypothesisViolated, b.lower_unavailable);
  }
  r.json = TableJson(r);
  return r;
}

Report RunOracle(const RunSpec& spec) {
  const Architecture& arch = *spec.arch;
  const LayerSpec& base = SingleLayer(arch, "oracle");
  Report r;
  r.columns = {"d1", "formula", "oracle", "seed", "retried", "match"};
  std::string mismatches;
  for (int d1 : SweepValues(spec, base.depth, 1)) {
    LayerSpec layer = base;
    layer.depth = d1;
    const OracleCheck check =
        CheckRegionFormula(arch.input, layer, spec.seed, spec.threads);
    r.rows.push_back({Int(d1), Big(check.formula),
                      Big(check.oracle_counts.back()),
                      Text(std::to_string(check.seeds.back())),
                      Text(check.seeds.size() > 1 ? "true" : "false"),
                      Text(check.match ? "true" : "false")});
    if (!check.match) {
      mismatches += " d1=" + std::to_string(d1) + " (seeds " +
                    std::to_string(check.seeds.front()) + ", " +
                    std::to_string(check.seeds.back()) + ")";
    }
  }
  if (!mismatches.empty()) {
    r.failure = Error(ErrorCode::kOracleMismatch,
                      "oracle disagrees with the formula after retry:" +
                          mismatches);
  }
  r.json = TableJson(r);
  return r;
}

Report RunSample(const RunSpec& spec) {
  const Architecture& arch = *spec.arch;
  SamplingConfig config;
  config.seed = spec.seed;
  config.threads = spec.threads;
  if (spec.samples) config.num_samples = *spec.samples;
  if (!spec.std_values.empty()) config.std_values = spec.std_values;
  const SamplingResult result =
      EstimateRegionCount(arch, HeInit(arch, spec.seed), config);
  Report r;
  r.columns = {"v", "distinct"};
  json per_v = json::array();
  for (const StdBreakdown& b : result.per_v) {
    r.rows.push_back({Real(b.v), Int(b.distinct)});
    per_v.push_back({{"v", b.v}, {"distinct", b.distinct}});
  }
  r.rows.push_back({Text("max"), Int(result.max_distinct)});
  r.json = json{{"arch", ArchitectureToJson(arch)},
                {"seed", spec.seed},
                {"samples_per_v", config.num_samples},
                {"per_v", per_v},
                {"max_distinct", result.max_distinct}};
  return r;
}

// Random integer inputs through the two-layer linear stack and through the
// folded layer must agree exactly.
bool FoldingReproducesStack(const Dims& input, const LayerWeights<Rational>& a,
                            const LayerWeights<Rational>& b,
                            const LayerWeights<Rational>& folded,
                            uint64_t seed) {
  std::mt19937_64 engine(seed);
  std::uniform_int_distribution<int64_t> draw(-1000, 1000);
  for (int trial = 0; trial < 10; ++trial) {
    Tensor3<Rational> x(input);
    for (Rational& v : x.data()) v = draw(engine);
    if (!(Convolve(Convolve(x, a), b) == Convolve(x, folded))) return false;
  }
  return true;
}

Report RunCompose(const RunSpec& spec) {
  const Architecture& arch = *spec.arch;
  if (arch.layers.size() < 2) {
    throw Error(ErrorCode::kValidationError,
                "compose needs at least two layers");
  }
  const LayerSpec composed =
      ComposeLinearLayers(arch.layers[0], arch.layers[1], arch.input);
  const Architecture pair{arch.input, {arch.layers[0], arch.layers[1]}};
  const WeightSet<Rational> w = SampleRationalWeights(pair, spec.seed);
  const LayerWeights<Rational> folded =
      FoldLinearLayers(arch.input, w.layers[0], w.layers[1]);
  const bool verified = FoldingReproducesStack(arch.input, w.layers[0],
                                               w.layers[1], folded, spec.seed);
  Report r;
  r.columns = {"fh", "fw", "stride", "depth", "verified"};
  r.rows.push_back({Int(composed.filter_height), Int(composed.filter_width),
                    Int(composed.stride), Int(composed.depth),
                    Text(verified ? "true" : "false")});
  if (!verified) {
    r.failure = Error(ErrorCode::kValidationError,
                      "folded layer does not reproduce the linear stack");
  }
  r.json = TableJson(r);
  return r;
}

Report RunTable(const RunSpec& spec) {
  TableOptions options;
  options.seed = spec.seed;
  options.threads = spec.threads;
  if (spec.samples) options.samples = *spec.samples;
  const TableArtifact t = ReproduceTable(*spec.table, options);
  Report r;
  r.columns = {"row"};
  for (int d : t.sweep) {
    r.columns.push_back(t.sweep_name + "=" + std::to_string(d));
  }
  r.columns.push_back("note");
  json rows = json::array();
  for (const TableRow& row : t.rows) {
    std::vector<Cell> cells{Text(row.label)};
    for (const std::string& v : row.values) {
      cells.push_back(Cell{Cell::Kind::kBigInteger, v});
    }
    cells.push_back(Text(row.note));
    r.rows.push_back(std::move(cells));
    rows.push_back(
        {{"label", row.label}, {"values", row.values}, {"note", row.note}});
  }
  r.json = json{{"table", t.id},
                {"caption", t.caption},
                {"sweep_name", t.sweep_name},
                {"sweep", t.sweep},
                {"rows", rows}};
  return r;
}

std::vector<Cell> ExpressivityRow(const std::string& name,
                                  const ArchExpressivity& e) {
  return {Text(name),
          Big(e.parameters),
          e.bounds.lower ? Big(*e.bounds.lower) : Text("unavailable"),
          Big(e.bounds.upper),
          Big(e.bounds.naive_upper),
          e.lower_per_parameter ? Text(ToString(*e.lower_per_parameter))
                                : Text("unavailable"),
          Text(ToString(e.upper_per_parameter))};
}

Report RunCompare(const RunSpec& spec) {
  const ExpressivityReport report =
      CompareExpressivity(*spec.arch, *spec.arch_b);
  Report r;
  r.columns = {"arch",        "parameters",          "lower",
               "upper",       "naive_upper",         "lower_per_parameter",
               "upper_per_parameter"};
  r.rows.push_back(ExpressivityRow("a", report.first));
  r.rows.push_back(ExpressivityRow("b", report.second));
  r.json = TableJson(r);
  r.json["arch_a"] = ArchitectureToJson(*spec.arch);
  r.json["arch_b"] = ArchitectureToJson(*spec.arch_b);
  return r;
}

std::string CsvField(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

RunSpec ParseRunSpec(const std::vector<std::string>& args) {
  CLI::App app{"Exact counts, bounds and sampling estimates for the linear "
               "regions of ReLU CNNs",
               "convregions"};
  app.fallthrough();
  app.require_subcommand(1, 1);

  std::string config, arch_inline, config_b, arch_b_inline, format = "csv",
                                                            d1, stds;
  RunSpec spec;
  int64_t samples = 0;
  app.add_option("--config", config, "Architecture JSON file");
  app.add_option("--arch", arch_inline, "Architecture as inline JSON");
  app.add_option("--config-b", config_b, "Second architecture (compare)");
  app.add_option("--arch-b", arch_b_inline,
                 "Second architecture as inline JSON (compare)");
  app.add_option("--out", spec.out_path, "Write the report to this file");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", spec.seed, "Random seed");
  app.add_option("--threads", spec.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--d1", d1, "Filter-count sweep <a>..<b>");
  app.add_option("--samples", samples, "Samples per standard deviation")
      ->check(CLI::PositiveNumber);
  app.add_option("--std", stds, "Comma separated input standard deviations");

  std::string table_id;
  for (const CommandInfo& info : kCommands) {
    CLI::App* sub = app.add_subcommand(info.name, info.help);
    if (info.command == Command::kTable) {
      sub->add_option("id", table_id, "T1, T2, S1, S2, S3, S4 or S5")
          ->required();
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }

  for (const CommandInfo& info : kCommands) {
    if (app.got_subcommand(info.name)) spec.command = info.command;
  }
  spec.format = format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  if (!d1.empty()) spec.d1_range = ParseRange(d1);
  if (!stds.empty()) spec.std_values = ParseStdList(stds);
  if (samples > 0) spec.samples = samples;

  if (!config.empty() && !arch_inline.empty()) {
    throw Error(ErrorCode::kParseError, "give --config or --arch, not both");
  }
  if (!config.empty()) spec.arch = LoadArchitecture(config);
  if (!arch_inline.empty()) spec.arch = ParseArchitecture(arch_inline);
  if (!config_b.empty()) spec.arch_b = LoadArchitecture(config_b);
  if (!arch_b_inline.empty()) spec.arch_b = ParseArchitecture(arch_b_inline);

  if (spec.command == Command::kTable) {
    spec.table = ParseTableId(table_id);
    if (!spec.table) {
      throw Error(ErrorCode::kParseError, "unknown table '" + table_id + "'");
    }
  } else if (!spec.arch) {
    throw Error(ErrorCode::kParseError,
                std::string(CommandName(spec.command)) +
                    " needs an architecture (--config or --arch)");
  }
  if (spec.command == Command::kCompare && !spec.arch_b) {
    throw Error(ErrorCode::kParseError,
                "compare needs a second architecture (--config-b or --arch-b)");
  }
  return spec;
}

Report Run(const RunSpec& spec) {
  Report r;
  switch (spec.command) {
    case Command::kDims:
      r = RunDims(*spec.arch);
      break;
    case Command::kParams:
      r = RunParams(*spec.arch);
      break;
    case Command::kExact:
      r = RunExact(spec);
      break;
    case Command::kPoly:
      r = RunPoly(spec);
      break;
    case Command::kBounds:
      r = RunBounds(*spec.arch);
      break;
    case Command::kOracle:
      r = RunOracle(spec);
      break;
    case Command::kSample:
      r = RunSample(spec);
      break;
    case Command::kCompose:
      r = RunCompose(spec);
      break;
    case Command::kTable:
      r = RunTable(spec);
      break;
    case Command::kCompare:
      r = RunCompare(spec);
      break;
  }
  r.json["command"] = CommandName(spec.command);
  return r;
}

std::string Render(const Report& report, OutputFormat format) {
  if (format == OutputFormat::kJson) return report.json.dump(2) + "\n";
  std::string out;
  for (size_t c = 0; c < report.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += CsvField(report.columns[c]);
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += CsvField(row[c].text);
    }
    out += '\n';
  }
  return out;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError:
      return 2;
    case ErrorCode::kHypothesisViolated:
      return 4;
    case ErrorCode::kOracleMismatch:
      return 5;
    default:
      return 3;
  }
}

std::string ErrorObject(const Error& error) {
  return json{{"error",
               {{"code", std::string(ErrorCodeName(error.code()))},
                {"message", error.what()},
                {"exit_code", ExitCodeFor(error.code())}}}}
             .dump();
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  try {
    const RunSpec spec = ParseRunSpec(args);
    const Report report = Run(spec);
    const std::string text = Render(report, spec.format);
    if (spec.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(spec.out_path);
      if (!(file << text)) {
        throw Error(ErrorCode::kValidationError,
                    "cannot write " + spec.out_path);
      }
    }
    if (report.failure) {
      err << ErrorObject(*report.failure) << "\n";
      return ExitCodeFor(report.failure->code());
    }
    return 0;
  } catch (const HelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const Error& e) {
    err << ErrorObject(e) << "\n";
    return ExitCodeFor(e.code());
  }
}

}  // namespace convregions::cli
