// Copyright 2026 The photonic-bsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace bsa::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kIoError = 3,
  kInputError = 4,
  kUnsupported = 5,
};

/// Runs the experiment CLI on argv-style arguments (args[0] is the program
/// name). Reports go to `out`, progress and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Result document with the non-reproducible manifest fields removed.
nlohmann::json strip_timestamp(nlohmann::json doc);

/// Reads a JSON file, or the "# manifest: " header line of a CSV file.
nlohmann::json read_manifest(const std::filesystem::path& path);

}  // namespace bsa::cli
