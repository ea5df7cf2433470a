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

#include <stdexcept>
#include <string>

namespace bsa {

/// Caller passed arguments that break an operation's preconditions.
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Matrix is not sub-unitary (some singular value exceeds one).
class InvalidMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Requested configuration is outside what a routine supports.
class UnsupportedConfiguration : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Problem size exceeds what a brute-force routine is willing to run.
class SizeRefused : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed matrix or result file.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bsa
