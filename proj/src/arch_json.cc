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

#include "convregions/arch_json.h"

#include <initializer_list>

#include "convregions/error.h"

namespace convregions {
namespace {

using nlohmann::json;

void RejectUnknownKeys(const json& object, const std::string& where,
                       std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* name : allowed) known = known || key == name;
    if (!known) {
      throw Error(ErrorCode::kParseError,
                  where + ": unknown key '" + key + "'");
    }
  }
}

const json& Require(const json& object, const std::string& where,
                    const char* key) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw Error(ErrorCode::kParseError,
                where + ": missing key '" + std::string(key) + "'");
  }
  return *it;
}

int RequireInt(const json& object, const std::string& where, const char* key) {
  const json& value = Require(object, where, key);
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::kParseError, where + "." + key +
                                            ": expected an integer, got " +
                                            value.dump());
  }
  const auto v = value.get<int64_t>();
  if (v < 1 || v > 1 << 20) {
    throw Error(ErrorCode::kValidationError,
                where + "." + key + ": must be in [1, 2^20], got " +
                    std::to_string(v));
  }
  return static_cast<int>(v);
}

}  // namespace

Architecture ArchitectureFromJson(const json& doc) {
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParseError, "architecture must be a JSON object");
  }
  RejectUnknownKeys(doc, "architecture", {"input", "layers"});
  const json& input = Require(doc, "architecture", "input");
  if (!input.is_object()) {
    throw Error(ErrorCode::kParseError, "input: expected an object");
  }
  RejectUnknownKeys(input, "input", {"h", "w", "d"});
  Architecture arch;
  arch.input = Dims{RequireInt(input, "input", "h"),
                    RequireInt(input, "input", "w"),
                    RequireInt(input, "input", "d")};
  const json& layers = Require(doc, "architecture", "layers");
  if (!layers.is_array() || layers.empty()) {
    throw Error(ErrorCode::kParseError, "layers: expected a nonempty array");
  }
  for (size_t l = 0; l < layers.size(); ++l) {
    const std::string where = "layers[" + std::to_string(l) + "]";
    if (!layers[l].is_object()) {
      throw Error(ErrorCode::kParseError, where + ": expected an object");
    }
    RejectUnknownKeys(layers[l], where, {"fh", "fw", "stride", "depth"});
    arch.layers.push_back(LayerSpec{RequireInt(layers[l], where, "fh"),
                                    RequireInt(layers[l], where, "fw"),
                                    RequireInt(layers[l], where, "stride"),
                                    RequireInt(layers[l], where, "depth")});
  }
  ValidateArchitecture(arch);
  return arch;
}

Architecture ParseArchitecture(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    size_t line = 1;
    size_t column = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + e.what());
  }
  return ArchitectureFromJson(doc);
}

json ArchitectureToJson(const Architecture& arch) {
  json layers = json::array();
  for (const LayerSpec& l : arch.layers) {
    layers.push_back({{"fh", l.filter_height},
                      {"fw", l.filter_width},
                      {"stride", l.stride},
                      {"depth", l.depth}});
  }
  return json{{"input",
               {{"h", arch.input.height},
                {"w", arch.input.width},
                {"d", arch.input.depth}}},
              {"layers", layers}};
}

}  // namespace convregions
