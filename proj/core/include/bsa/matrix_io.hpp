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
#include <string>
#include <string_view>

#include "bsa/transfer.hpp"

namespace bsa {

/// Text form of a circuit matrix:
///   {"m": M, "entries": [[re, im], ...]}
/// with M*M entries in row-major order. Doubles are written in their
/// shortest form that reads back to the identical value.
std::string matrix_to_json(const CircuitMatrix& u);

/// Parses the text form. Errors name the offending line where the JSON is
/// malformed and the field where the schema is violated.
CircuitMatrix matrix_from_json(std::string_view text);

void write_matrix_file(const std::filesystem::path& path, const CircuitMatrix& u);
CircuitMatrix read_matrix_file(const std::filesystem::path& path);

}  // namespace bsa
