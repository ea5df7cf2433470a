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

#include "bsa/fock.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "bsa/errors.hpp"

namespace bsa {
namespace {

constexpr std::array<std::uint64_t, kMaxPhotons + 1> make_factorials() {
  std::array<std::uint64_t, kMaxPhotons + 1> f{};
  f[0] = 1;
  for (int n = 1; n <= kMaxPhotons; ++n) f[n] = f[n - 1] * static_cast<std::uint64_t>(n);
  return f;
}

constexpr auto kFactorials = make_factorials();

void fill_compositions(int remaining, int mode, std::vector<int>& current,
                       std::vector<FockState>& out) {
  const int last = static_cast<int>(current.size()) - 1;
  if (mode == last) {
    current[mode] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int n = remaining; n >= 0; --n) {
    current[mode] = n;
    fill_compositions(remaining - n, mode + 1, current, out);
  }
  current[mode] = 0;
}

}  // namespace

int FockState::photons() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxPhotons) {
    throw ContractViolation("factorial: argument " + std::to_string(n) + " outside [0, " +
                            std::to_string(kMaxPhotons) + "]");
  }
  return kFactorials[static_cast<std::size_t>(n)];
}

std::vector<FockState> enumerate_outcomes(int photons, int modes) {
  if (photons < 0 || modes < 1) {
    throw ContractViolation("enumerate_outcomes: need photons >= 0 and modes >= 1");
  }
  std::vector<FockState> out;
  out.reserve(outcome_count(photons, modes));
  std::vector<int> current(static_cast<std::size_t>(modes), 0);
  fill_compositions(photons, 0, current, out);
  return out;
}

std::uint64_t outcome_count(int photons, int modes) {
  // binomial(photons + modes - 1, modes - 1), exact in 64 bits for our sizes
  const std::uint64_t n = static_cast<std::uint64_t>(photons + modes - 1);
  const std::uint64_t k = static_cast<std::uint64_t>(std::min(modes - 1, photons));
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ModeLabeling to_labeling(const FockState& state) {
  ModeLabeling m;
  m.labels.reserve(static_cast<std::size_t>(state.photons()));
  for (int k = 0; k < state.modes(); ++k) {
    if (state[k] < 0) throw ContractViolation("to_labeling: negative occupation");
    m.labels.insert(m.labels.end(), static_cast<std::size_t>(state[k]), k);
  }
  return m;
}

FockState to_fock_state(const ModeLabeling& labeling, int modes) {
  std::vector<int> occ(static_cast<std::size_t>(modes), 0);
  for (int label : labeling.labels) {
    if (label < 0 || label >= modes) throw ContractViolation("to_fock_state: label out of range");
    ++occ[static_cast<std::size_t>(label)];
  }
  return FockState(std::move(occ));
}

std::uint64_t for_each_distinct_permutation(
    const ModeLabeling& labeling,
    const std::function<void(std::span<const int>)>& visit) {
  std::vector<int> v = labeling.labels;
  if (!std::is_sorted(v.begin(), v.end())) {
    throw ContractViolation("distinct permutations: labeling is not canonical (sorted)");
  }
  std::uint64_t count = 0;
  do {
    visit(std::span<const int>(v));
    ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

std::vector<std::vector<int>> distinct_permutations(const ModeLabeling& labeling) {
  std::vector<std::vector<int>> out;
  for_each_distinct_permutation(labeling, [&](std::span<const int> p) {
    out.emplace_back(p.begin(), p.end());
  });
  return out;
}

std::uint64_t occupation_factorial_product(const FockState& state) {
  std::uint64_t r = 1;
  for (int n : state.occupations) r *= factorial(n);
  return r;
}

std::uint64_t multinomial(const FockState& state) {
  return factorial(state.photons()) / occupation_factorial_product(state);
}

double bosonic_factor(const FockState& y) {
  return 0.5 * static_cast<double>(occupation_factorial_product(y));
}

}  // namespace bsa
