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
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace bsa {

/// Photon occupation numbers over a fixed set of modes.
struct FockState {
  std::vector<int> occupations;

  FockState() = default;
  explicit FockState(std::vector<int> occ) : occupations(std::move(occ)) {}
  FockState(std::initializer_list<int> occ) : occupations(occ) {}

  int modes() const { return static_cast<int>(occupations.size()); }
  int photons() const;
  int operator[](int k) const { return occupations[static_cast<std::size_t>(k)]; }

  auto operator<=>(const FockState&) const = default;
};

/// Mode index (0-based) of every photon, sorted non-decreasing.
struct ModeLabeling {
  std::vector<int> labels;

  int photons() const { return static_cast<int>(labels.size()); }
  auto operator<=>(const ModeLabeling&) const = default;
};

/// Largest photon number for which factorials are tabulated.
inline constexpr int kMaxPhotons = 16;

/// n! for 0 <= n <= kMaxPhotons.
std::uint64_t factorial(int n);

/// All compositions of `photons` into `modes` parts, lexicographically
/// descending: (N,0,..,0) first, (0,..,0,N) last.
std::vector<FockState> enumerate_outcomes(int photons, int modes);

/// binomial(photons + modes - 1, modes - 1).
std::uint64_t outcome_count(int photons, int modes);

ModeLabeling to_labeling(const FockState& state);

/// Occupation histogram of a labeling over `modes` modes.
FockState to_fock_state(const ModeLabeling& labeling, int modes);

/// Calls `visit` once per distinct arrangement of the labels. Returns the
/// number of arrangements visited (N! / prod n_k!).
std::uint64_t for_each_distinct_permutation(
    const ModeLabeling& labeling,
    const std::function<void(std::span<const int>)>& visit);

std::vector<std::vector<int>> distinct_permutations(const ModeLabeling& labeling);

/// N! / prod_k n_k! for the given occupations.
std::uint64_t multinomial(const FockState& state);

/// prod_k n_k!
std::uint64_t occupation_factorial_product(const FockState& state);

/// Combinatoric bosonic factor C(y) = (1/2) prod_k n_k!.
double bosonic_factor(const FockState& y);

}  // namespace bsa
