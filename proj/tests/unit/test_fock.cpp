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

#include <algorithm>
#include <cmath>
#include <set>

#include "bsa/errors.hpp"
#include "bsa/fock.hpp"
#include "bsa/rng.hpp"
#include "doctest.h"

using namespace bsa;

namespace {

// binomial by the multiplicative formula in floating point, independent of
// outcome_count's integer recurrence
double binomial_oracle(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / i;
  return r;
}

// every permutation of the labels, deduplicated
std::set<std::vector<int>> permutation_oracle(std::vector<int> labels) {
  std::set<std::vector<int>> out;
  std::vector<int> idx(labels.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  do {
    std::vector<int> arrangement;
    for (int i : idx) arrangement.push_back(labels[static_cast<std::size_t>(i)]);
    out.insert(arrangement);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace

TEST_CASE("enumerate_outcomes small cases") {
  const auto two = enumerate_outcomes(2, 2);
  REQUIRE(two.size() == 3);
  CHECK(two[0] == FockState{2, 0});
  CHECK(two[1] == FockState{1, 1});
  CHECK(two[2] == FockState{0, 2});

  const auto vacuum = enumerate_outcomes(0, 3);
  REQUIRE(vacuum.size() == 1);
  CHECK(vacuum[0] == FockState{0, 0, 0});

  CHECK(binomial_oracle(13, 7) == doctest::Approx(1716.0));
  CHECK(enumerate_outcomes(6, 8).size() == 1716);
}

TEST_CASE("enumerate_outcomes is complete, unique and descending") {
  for (int n = 0; n <= 6; ++n) {
    for (int m = 1; m <= 8; ++m) {
      const auto all = enumerate_outcomes(n, m);
      CHECK(static_cast<double>(all.size()) == std::round(binomial_oracle(n + m - 1, m - 1)));
      CHECK(outcome_count(n, m) == all.size());
      for (const auto& y : all) {
        CHECK(y.modes() == m);
        CHECK(y.photons() == n);
      }
      CHECK(std::is_sorted(all.begin(), all.end(), std::greater<>()));
      CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
  }
}

TEST_CASE("enumerate_outcomes rejects bad arguments") {
  CHECK_THROWS_AS(enumerate_outcomes(-1, 2), ContractViolation);
  CHECK_THROWS_AS(enumerate_outcomes(2, 0), ContractViolation);
}

TEST_CASE("to_labeling reads off photon modes") {
  // modes are 0-based here; (1,0,1,0) puts photons in modes 1 and 3 counting from one
  CHECK(to_labeling(FockState{1, 0, 1, 0}).labels == std::vector<int>{0, 2});
  CHECK(to_labeling(FockState{3, 0}).labels == std::vector<int>{0, 0, 0});
  CHECK(to_labeling(FockState{0, 2, 1}).labels == std::vector<int>{1, 1, 2});
}

TEST_CASE("labeling and histogram are inverse") {
  for (const auto& y : enumerate_outcomes(4, 5)) {
    const ModeLabeling m = to_labeling(y);
    CHECK(std::is_sorted(m.labels.begin(), m.labels.end()));
    CHECK(to_fock_state(m, 5) == y);
    CHECK(to_labeling(to_fock_state(m, 5)) == m);
  }
}

TEST_CASE("distinct permutations") {
  CHECK(distinct_permutations({{0, 2}}) == std::vector<std::vector<int>>{{0, 2}, {2, 0}});
  CHECK(distinct_permutations({{0, 0}}).size() == 1);
  CHECK(distinct_permutations({{0, 0, 1}}).size() == permutation_oracle({0, 0, 1}).size());
  CHECK(permutation_oracle({0, 0, 1}).size() == 3);

  CHECK_THROWS_AS(distinct_permutations({{2, 1}}), ContractViolation);
}

TEST_CASE("distinct permutation count matches dedup oracle on random labelings") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 6);
    const int m = 1 + static_cast<int>(rng.next_u64() % 4);
    std::vector<int> labels;
    for (int i = 0; i < n; ++i) labels.push_back(static_cast<int>(rng.next_u64() % m));
    std::sort(labels.begin(), labels.end());
    const auto oracle = permutation_oracle(labels);
    const auto got = distinct_permutations({labels});
    CHECK(got.size() == oracle.size());
    CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == oracle);
    CHECK(multinomial(to_fock_state({labels}, m)) == oracle.size());
  }
}

TEST_CASE("bosonic factor") {
  CHECK(bosonic_factor(FockState{1, 0, 1, 0}) == 0.5);
  CHECK(bosonic_factor(FockState{1, 1, 1, 1, 1, 1}) == 0.5);
  CHECK(bosonic_factor(FockState{2, 0, 0, 0}) == 1.0);
  CHECK(bosonic_factor(FockState{3, 1, 0, 0}) == 3.0);
}

TEST_CASE("factorial table bounds") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(16) == 20922789888000ULL);
  CHECK_THROWS_AS(factorial(17), ContractViolation);
}
