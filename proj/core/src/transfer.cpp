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

#include "bsa/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bsa/errors.hpp"
#include "bsa/parallel.hpp"

namespace bsa {
namespace {

void require_same_shape(const FockState& input, const FockState& output, const CircuitMatrix& u) {
  if (input.modes() != output.modes() || input.modes() != u.rows() || u.rows() != u.cols()) {
    throw ContractViolation("amplitude: mode count mismatch between states and matrix");
  }
  if (input.photons() != output.photons()) {
    throw ContractViolation("amplitude: input has " + std::to_string(input.photons()) +
                            " photons, output has " + std::to_string(output.photons()));
  }
}

void require_layout(const CircuitMatrix& u, int modes) {
  if (u.rows() != modes || u.cols() != modes) {
    throw ContractViolation("bell amplitudes: matrix is " + std::to_string(u.rows()) + "x" +
                            std::to_string(u.cols()) + ", expected " + std::to_string(modes) +
                            "x" + std::to_string(modes));
  }
}

}  // namespace

Complex amplitude(const CircuitMatrix& u, const FockState& input, const FockState& output) {
  require_same_shape(input, output, u);
  const ModeLabeling in = to_labeling(input);
  const ModeLabeling out = to_labeling(output);
  // distinct-permutation sum = permanent / prod n'_k!, so the element is
  // permanent / sqrt(prod n_k! prod n'_k!)
  const double norm = std::sqrt(static_cast<double>(occupation_factorial_product(input)) *
                                static_cast<double>(occupation_factorial_product(output)));
  return permanent(u, in.labels, out.labels) / norm;
}

std::array<double, 4> bell_probabilities(const BellAmplitudes& a, double bosonic) {
  return {bosonic * std::norm(a.a1 + a.a2), bosonic * std::norm(a.a1 - a.a2),
          bosonic * std::norm(a.a3 + a.a4), bosonic * std::norm(a.a3 - a.a4)};
}

BellLayout::BellLayout(int ancillas) : n_a(ancillas), photons(ancillas + 2), modes(ancillas + 4) {
  if (ancillas < 0) throw ContractViolation("ancilla count must be non-negative");
  if (photons > kMaxPhotons) throw UnsupportedConfiguration("too many ancilla photons");
  const std::array<std::array<int, 2>, 4> pair_rows{
      {{n_a, n_a + 2}, {n_a + 1, n_a + 3}, {n_a, n_a + 3}, {n_a + 1, n_a + 2}}};
  for (std::size_t t = 0; t < 4; ++t) {
    auto& rows = input_rows[t];
    for (int r = 0; r < n_a; ++r) rows.push_back(r);
    rows.push_back(pair_rows[t][0]);
    rows.push_back(pair_rows[t][1]);
  }
}

std::array<FockState, 2> BellLayout::input_branches(int x) const {
  if (x < 1 || x > 4) throw ContractViolation("Bell state index must be 1..4");
  // x = 1,2 use terms A1/A2, x = 3,4 use A3/A4
  const std::size_t first = (x <= 2) ? 0 : 2;
  std::array<FockState, 2> out;
  for (std::size_t b = 0; b < 2; ++b) {
    std::vector<int> occ(static_cast<std::size_t>(modes), 0);
    for (int r : input_rows[first + b]) ++occ[static_cast<std::size_t>(r)];
    out[b] = FockState(std::move(occ));
  }
  return out;
}

OutcomeAlphabet::OutcomeAlphabet(int n_a) : layout(n_a) {
  outcomes = enumerate_outcomes(layout.photons, layout.modes);
  labels.reserve(outcomes.size() * static_cast<std::size_t>(layout.photons));
  bosonic.reserve(outcomes.size());
  occupation_factorials.reserve(outcomes.size());
  for (const auto& y : outcomes) {
    const ModeLabeling m = to_labeling(y);
    labels.insert(labels.end(), m.labels.begin(), m.labels.end());
    bosonic.push_back(bosonic_factor(y));
    occupation_factorials.push_back(static_cast<double>(occupation_factorial_product(y)));
  }
}

BellAmplitudes bell_amplitudes(const CircuitMatrix& u, const FockState& y, int n_a) {
  const BellLayout layout(n_a);
  require_layout(u, layout.modes);
  if (y.modes() != layout.modes || y.photons() != layout.photons) {
    throw ContractViolation("bell amplitudes: outcome must hold n_a + 2 photons in n_a + 4 modes");
  }
  const ModeLabeling m = to_labeling(y);
  const double scale = 1.0 / static_cast<double>(occupation_factorial_product(y));
  const auto& rows = layout.input_rows;
  return {permanent(u, rows[0], m.labels) * scale, permanent(u, rows[1], m.labels) * scale,
          permanent(u, rows[2], m.labels) * scale, permanent(u, rows[3], m.labels) * scale};
}

std::array<double, 4> OutcomeTable::column_totals() const {
  std::array<double, 4> total = garbage;
  for (const auto& row : rows) {
    for (std::size_t x = 0; x < 4; ++x) total[x] += row[x];
  }
  return total;
}

double max_singular_value(const CircuitMatrix& u) {
  if (u.size() == 0) return 0.0;
  Eigen::JacobiSVD<CircuitMatrix> svd(u);
  return svd.singularValues()(0);
}

void require_sub_unitary(const CircuitMatrix& u) {
  if (u.rows() != u.cols()) throw InvalidMatrix("circuit matrix must be square");
  if (!u.allFinite()) throw InvalidMatrix("circuit matrix has non-finite entries");
  const double s = max_singular_value(u);
  if (s > 1.0 + kSubUnitaryTol) {
    throw InvalidMatrix("circuit matrix is not sub-unitary: largest singular value " +
                        std::to_string(s));
  }
}

OutcomeTable outcome_table(const CircuitMatrix& u, const OutcomeAlphabet& alphabet,
                           int parallelism) {
  require_layout(u, alphabet.layout.modes);
  require_sub_unitary(u);
  OutcomeTable t;
  t.n_a = alphabet.layout.n_a;
  t.modes = alphabet.layout.modes;
  t.outcomes = alphabet.outcomes;
  t.rows.resize(alphabet.size());
  parallel_for(static_cast<int>(alphabet.size()), parallelism, [&](int y) {
    const auto i = static_cast<std::size_t>(y);
    t.rows[i] = bell_probabilities(bell_amplitudes(u, alphabet, i), alphabet.bosonic[i]);
  });
  std::array<double, 4> measured{};
  for (const auto& row : t.rows) {
    for (std::size_t x = 0; x < 4; ++x) measured[x] += row[x];
  }
  for (std::size_t x = 0; x < 4; ++x) t.garbage[x] = std::max(0.0, 1.0 - measured[x]);
  return t;
}

OutcomeTable outcome_table(const CircuitMatrix& u, int n_a, int parallelism) {
  const OutcomeAlphabet alphabet(n_a);
  return outcome_table(u, alphabet, parallelism);
}

}  // namespace bsa
