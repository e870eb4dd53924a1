// Copyright 2026 The qdconcat Authors
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

#ifndef QDCONCAT_CLI_JSON_IO_H
#define QDCONCAT_CLI_JSON_IO_H

#include <string_view>

#include "json.hpp"
#include "qdconcat/concat.h"
#include "qdconcat/stabilizer.h"

namespace qdc::cli {

/// {name, n, k, generators, logical_x, logical_z, passive}
nlohmann::json code_to_json(const StabilizerCode &code);

/// Inverse of code_to_json. Throws ParseError on a malformed document.
StabilizerCode code_from_json(const nlohmann::json &doc);

/// A builtin code name, or a path to a JSON code description.
StabilizerCode load_code(std::string_view name_or_path);

nlohmann::json concat_to_json(const ConcatenatedCode &cc);

}  // namespace qdc::cli

#endif
