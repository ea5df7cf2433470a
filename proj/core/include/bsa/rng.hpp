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

#include <cstdint>
#include <random>
#include <string_view>

namespace bsa {

/// Seeded generator with a platform-independent output stream.
///
/// Raw bits come from std::mt19937_64, whose sequence is fixed by the
/// standard. Uniform and normal variates are derived here rather than via
/// <random> distributions, whose algorithms differ between standard
/// libraries.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+splitmix64-streams+box-muller";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Standard normal.
  double normal();

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Seed for an independent substream `stream` of a run seeded by `base`.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace bsa
