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
#include <string>
#include <vector>

#include "bsa/infometrics.hpp"
#include "bsa/transfer.hpp"

namespace bsa {

/// Which perfect-measurement clause an outcome satisfies.
enum class Clause {
  A,     ///< all four amplitude sums vanish
  B,     ///< A1 = +-A2 != 0 and A3 = A4 = 0
  C,     ///< A3 = +-A4 != 0 and A1 = A2 = 0
  None,  ///< the outcome leaves some pair of Bell states ambiguous
};

std::string to_string(Clause c);

struct OutcomeVerdict {
  FockState outcome;
  Clause clause = Clause::None;
  BellAmplitudes amplitudes;
  /// +1 or -1 for the matched sign in clauses B and C, 0 otherwise.
  int sign = 0;
  /// sum_x p(y|x)
  double probability_mass = 0.0;
  bool ambiguous = false;
};

OutcomeVerdict classify_outcome(const CircuitMatrix& u, const FockState& y, int n_a,
                                double tol = kZeroAmplitudeTol);

/// Outcomes with every photon in at most two modes, in enumeration order.
std::vector<FockState> bunched_two_mode_outcomes(int photons, int modes);

std::vector<OutcomeVerdict> scan_bunched_two_mode(const CircuitMatrix& u, int n_a,
                                                  double tol = kZeroAmplitudeTol);

/// Column conditions at three levels of refinement: single-mode bunching
/// (three alternatives), one photon split off (four alternatives), and all
/// two-mode bunched outcomes (I)-(IV).
enum class ConditionStage { P0, P1, Full };

std::string to_string(ConditionStage s);

/// Reason why a column l != L satisfies the alternation clause of a
/// condition on column L.
struct AlternationWitness {
  int column = 0;
  /// Ancilla row s_l (taken from the zero set of column L) with U(s_l, l) = 0,
  /// or -1.
  int ancilla_row = -1;
  /// 1 if U(n_a, l) = U(n_a+1, l) = 0 was used, 2 for rows n_a+2, n_a+3,
  /// 0 otherwise.
  int qubit_pair = 0;
};

struct ConditionWitness {
  /// 1..3 at stage P0, 1..4 otherwise (roman numerals in reports).
  int condition = 0;
  std::vector<AlternationWitness> others;
};

struct ColumnVerdict {
  int column = 0;
  ConditionStage stage = ConditionStage::Full;
  /// Ancilla rows S_j with |U(S_j, L)| < tol.
  std::vector<int> zero_ancilla_rows;
  bool first_pair_zero = false;   ///< rows n_a, n_a+1
  bool second_pair_zero = false;  ///< rows n_a+2, n_a+3
  std::vector<ConditionWitness> satisfied;

  bool ok() const { return !satisfied.empty(); }
};

std::vector<ColumnVerdict> check_column_conditions(const CircuitMatrix& u, int n_a,
                                                   double tol = kZeroAmplitudeTol,
                                                   ConditionStage stage = ConditionStage::Full);

/// Probability, averaged over the four Bell inputs, of a two-mode bunched
/// outcome.
double bunched_two_mode_mass(const CircuitMatrix& u, int n_a);

struct PopulationSummary {
  double mean = 0.0;
  double stddev = 0.0;
  double min = 0.0;
  double median = 0.0;
  double max = 0.0;
};

PopulationSummary summarize(const std::vector<double>& values);

struct ComparisonRecord {
  int n_a = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> conditioned_h;
  std::vector<double> unconditioned_h;
  std::vector<double> conditioned_bunched_mass;
  std::vector<double> unconditioned_bunched_mass;
  PopulationSummary conditioned;
  PopulationSummary unconditioned;
};

/// Mutual information of `trials` conditioned and `trials` Haar-random
/// unitaries. Trial t uses derive_seed(seed, 2t) for the conditioned matrix
/// and derive_seed(seed, 2t + 1) for the Haar matrix.
ComparisonRecord conditioned_vs_unconditioned_experiment(int n_a, int trials, std::uint64_t seed,
                                                         int parallelism = 1);

}  // namespace bsa
