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

#ifndef QDCONCAT_CLI_VERIFY_H
#define QDCONCAT_CLI_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdconcat/concat.h"

namespace qdc::cli {

struct CheckResult {
    std::string suite;
    std::string name;
    bool ok = true;
    std::string detail;
    /// A documented discrepancy in a reference expansion; reported, not failed.
    bool note = false;
};

std::vector<std::string> suite_names();

/// Runs one suite ("all" runs every suite). `code` restricts code-specific
/// checks to one concatenated code. Throws LookupError for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite, std::optional<ConcatCode> code, uint64_t mc_shots);

}  // namespace qdc::cli

#endif
