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

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "bsa/fock.hpp"
#include "bsa/permanent.hpp"

namespace bsa {

/// Mode transformation U: creation operator of input mode r maps to
/// sum_c U(r, c) times the creation operator of output mode c.
using CircuitMatrix = Eigen::MatrixXcd;

/// Amplitudes below this magnitude count as zero.
inline constexpr double kZeroAmplitudeTol = 1e-10;
/// Allowed excess of the largest singular value over one.
inline constexpr double kSubUnitaryTol = 1e-9;

/// Fock-basis matrix element <output| A(U) |input>.
Complex amplitude(const CircuitMatrix& u, const FockState& input, const FockState& output);

/// Same quantity by expanding the product of transformed creation operators
/// as a polynomial and reading off the output monomial. Brute force; refuses
/// N > 4 or M > 6.
Complex amplitude_oracle(const CircuitMatrix& u, const FockState& input, const FockState& output);

/// The four distinct-permutation sums A1..A4 for one outcome.
struct BellAmplitudes {
  Complex a1;
  Complex a2;
  Complex a3;
  Complex a4;
};

/// Conditional probabilities p(y|x), x = 1..4, from the four amplitude sums.
std::array<double, 4> bell_probabilities(const BellAmplitudes& a, double bosonic);

/// Modes, photon count and the four input row sets for a given ancilla count.
///
/// Ancilla photons occupy modes 0..n_a-1; the Bell pair uses modes
/// n_a..n_a+3. Input rows per term: A1 (n_a, n_a+2), A2 (n_a+1, n_a+3),
/// A3 (n_a, n_a+3), A4 (n_a+1, n_a+2), each preceded by the ancilla rows.
struct BellLayout {
  int n_a = 0;
  int photons = 2;
  int modes = 4;
  std::array<std::vector<int>, 4> input_rows;

  explicit BellLayout(int n_a);

  /// The two Fock branches |1..1, b> of Bell state x (1-based) and the
  /// relative sign of the second branch.
  std::array<FockState, 2> input_branches(int x) const;
  double branch_sign(int x) const { return (x == 2 || x == 4) ? -1.0 : 1.0; }
};

/// Outcome alphabet precomputed for repeated table evaluation.
struct OutcomeAlphabet {
  BellLayout layout;
  std::vector<FockState> outcomes;
  /// Canonical labeling of each outcome, flattened (photons entries each).
  std::vector<int> labels;
  /// C(y) for each outcome.
  std::vector<double> bosonic;
  /// prod_k n_k! for each outcome.
  std::vector<double> occupation_factorials;

  explicit OutcomeAlphabet(int n_a);

  std::size_t size() const { return outcomes.size(); }
  std::span<const int> labeling(std::size_t y) const {
    const auto n = static_cast<std::size_t>(layout.photons);
    return {labels.data() + y * n, n};
  }
};

BellAmplitudes bell_amplitudes(const CircuitMatrix& u, const FockState& y, int n_a);

/// All four sums at once from shared Ryser row sums; same values as the
/// overload above up to rounding.
BellAmplitudes bell_amplitudes(const CircuitMatrix& u, const OutcomeAlphabet& alphabet,
                               std::size_t y);

/// Adds sum_t coeff[t] * dA_t / dU(r, c) to h(r, c) for outcome y, where
/// A_t are the four amplitude sums as holomorphic functions of U.
void accumulate_bell_derivative(const CircuitMatrix& u, const OutcomeAlphabet& alphabet,
                                std::size_t y, const std::array<Complex, 4>& coeff,
                                Eigen::MatrixXcd& h);

/// p(y|x) for every outcome y plus the leaked (garbage) probability per x.
struct OutcomeTable {
  int n_a = 0;
  int modes = 4;
  std::vector<FockState> outcomes;
  std::vector<std::array<double, 4>> rows;
  std::array<double, 4> garbage{};

  /// sum_y p(y|x) + garbage(x) for each x.
  std::array<double, 4> column_totals() const;
};

/// Largest singular value of u.
double max_singular_value(const CircuitMatrix& u);

/// Throws InvalidMatrix unless u is square and its singular values are at
/// most 1 + kSubUnitaryTol.
void require_sub_unitary(const CircuitMatrix& u);

OutcomeTable outcome_table(const CircuitMatrix& u, int n_a, int parallelism = 1);
OutcomeTable outcome_table(const CircuitMatrix& u, const OutcomeAlphabet& alphabet,
                           int parallelism = 1);

}  // namespace bsa
