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

#ifndef CONVREGIONS_ARCH_JSON_H_
#define CONVREGIONS_ARCH_JSON_H_

#include <string>
#include <string_view>

#include "convregions/arch.h"
#include "json.hpp"

namespace convregions {

// {"input": {"h": .., "w": .., "d": ..},
//  "layers": [{"fh": .., "fw": .., "stride": .., "depth": ..}, ...]}
//
// Unknown keys, missing keys and non-integer values are rejected with
// Error(kParseError); the message names the offending field. Geometry is
// then checked with ValidateArchitecture, whose failures surface as
// Error(kValidationError) or Error(kFilterExceedsInput).
Architecture ArchitectureFromJson(const nlohmann::json& doc);

// Parses text, reporting syntax errors with line and column.
Architecture ParseArchitecture(std::string_view text);

nlohmann::json ArchitectureToJson(const Architecture& arch);

}  // namespace convregions

#endif  // CONVREGIONS_ARCH_JSON_H_
