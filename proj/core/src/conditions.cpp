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

#include "bsa/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bsa/errors.hpp"
#include "bsa/parallel.hpp"
#include "bsa/rng.hpp"
#include "bsa/unitary.hpp"

namespace bsa {
namespace {

struct ZeroPattern {
  const CircuitMatrix& u;
  int n_a;
  double tol;

  bool zero(int r, int c) const { return std::abs(u(r, c)) < tol; }
  bool first_pair(int c) const { return zero(n_a, c) && zero(n_a + 1, c); }
  bool second_pair(int c) const { return zero(n_a + 2, c) && zero(n_a + 3, c); }

  std::vector<int> zero_ancillas(int c) const {
    std::vector<int> rows;
    for (int r = 0; r < n_a; ++r) {
      if (zero(r, c)) rows.push_back(r);
    }
    return rows;
  }

  int ancilla_hit(const std::vector<int>& witness_rows, int c) const {
    for (int s : witness_rows) {
      if (zero(s, c)) return s;
    }
    return -1;
  }
};

// For every column l != L, finds a reason among the allowed ones. Returns
// false if some column has none.
bool alternation(const ZeroPattern& z, int column, const std::vector<int>& witness_rows,
                 bool allow_first, bool allow_second, std::vector<AlternationWitness>& out) {
  const int m = static_cast<int>(z.u.cols());
  out.clear();
  for (int l = 0; l < m; ++l) {
    if (l == column) continue;
    AlternationWitness w;
    w.column = l;
    if (allow_first && z.first_pair(l)) {
      w.qubit_pair = 1;
    } else if (allow_second && z.second_pair(l)) {
      w.qubit_pair = 2;
    } else {
      w.ancilla_row = z.ancilla_hit(witness_rows, l);
      if (w.ancilla_row < 0) return false;
    }
    out.push_back(w);
  }
  return true;
}

void require_dims(const CircuitMatrix& u, int n_a) {
  if (n_a < 0 || u.rows() != n_a + 4 || u.cols() != n_a + 4) {
    throw ContractViolation("conditions: matrix must be (n_a + 4) x (n_a + 4)");
  }
}

}  // namespace

std::string to_string(Clause c) {
  switch (c) {
    case Clause::A:
      return "a";
    case Clause::B:
      return "b";
    case Clause::C:
      return "c";
    case Clause::None:
      return "none";
  }
  return "?";
}

std::string to_string(ConditionStage s) {
  switch (s) {
    case ConditionStage::P0:
      return "P0";
    case ConditionStage::P1:
      return "P1";
    case ConditionStage::Full:
      return "FULL";
  }
  return "?";
}

OutcomeVerdict classify_outcome(const CircuitMatrix& u, const FockState& y, int n_a, double tol) {
  require_dims(u, n_a);
  OutcomeVerdict v;
  v.outcome = y;
  v.amplitudes = bell_amplitudes(u, y, n_a);
  const auto& a = v.amplitudes;
  const double c = bosonic_factor(y);
  v.probability_mass =
      2.0 * c * (std::norm(a.a1) + std::norm(a.a2) + std::norm(a.a3) + std::norm(a.a4));

  auto small = [tol](Complex z) { return std::abs(z) < tol; };
  // Matched sign s with a = s * b, or 0.
  auto paired = [&](Complex p, Complex q) {
    if (small(p - q)) return 1;
    if (small(p + q)) return -1;
    return 0;
  };

  if (small(a.a1) && small(a.a2) && small(a.a3) && small(a.a4)) {
    v.clause = Clause::A;
  } else if (small(a.a3) && small(a.a4) && !small(a.a1) && paired(a.a1, a.a2) != 0) {
    v.clause = Clause::B;
    v.sign = paired(a.a1, a.a2);
  } else if (small(a.a1) && small(a.a2) && !small(a.a3) && paired(a.a3, a.a4) != 0) {
    v.clause = Clause::C;
    v.sign = paired(a.a3, a.a4);
  } else {
    v.clause = Clause::None;
  }
  v.ambiguous = v.clause == Clause::None && v.probability_mass >= tol;
  return v;
}

std::vector<FockState> bunched_two_mode_outcomes(int photons, int modes) {
  std::vector<FockState> out;
  for (int big = 0; big < modes; ++big) {
    std::vector<int> occ(static_cast<std::size_t>(modes), 0);
    occ[static_cast<std::size_t>(big)] = photons;
    out.emplace_back(occ);
    for (int small = 0; small < modes; ++small) {
      if (small == big) continue;
      for (int p = 1; 2 * p <= photons; ++p) {
        // (p, p) splits are produced from both orderings; keep one
        if (2 * p == photons && small < big) continue;
        auto split = occ;
        split[static_cast<std::size_t>(big)] = photons - p;
        split[static_cast<std::size_t>(small)] = p;
        out.emplace_back(std::move(split));
      }
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<OutcomeVerdict> scan_bunched_two_mode(const CircuitMatrix& u, int n_a, double tol) {
  require_dims(u, n_a);
  std::vector<OutcomeVerdict> out;
  for (const auto& y : bunched_two_mode_outcomes(n_a + 2, n_a + 4)) {
    out.push_back(classify_outcome(u, y, n_a, tol));
  }
  return out;
}

std::vector<ColumnVerdict> check_column_conditions(const CircuitMatrix& u, int n_a, double tol,
                                                   ConditionStage stage) {
  require_dims(u, n_a);
  const ZeroPattern z{u, n_a, tol};
  std::vector<ColumnVerdict> out;
  for (int col = 0; col < u.cols(); ++col) {
    ColumnVerdict v;
    v.column = col;
    v.stage = stage;
    v.zero_ancilla_rows = z.zero_ancillas(col);
    v.first_pair_zero = z.first_pair(col);
    v.second_pair_zero = z.second_pair(col);
    const auto zeros = static_cast<int>(v.zero_ancilla_rows.size());
    const bool p1 = v.first_pair_zero;
    const bool p2 = v.second_pair_zero;

    auto add = [&v](int id, std::vector<AlternationWitness> others = {}) {
      v.satisfied.push_back({id, std::move(others)});
    };

    switch (stage) {
      case ConditionStage::P0:
        if (zeros >= 1) add(1);
        if (p1) add(2);
        if (p2) add(3);
        break;
      case ConditionStage::P1:
        if (zeros >= 2) add(1);
        if (zeros >= 1 && p1) add(2);
        if (zeros >= 1 && p2) add(3);
        if (p1 && p2) add(4);
        break;
      case ConditionStage::Full: {
        // The witness set S for column L is its full ancilla zero set: any
        // smaller witness meeting the count only removes candidates s_l.
        std::vector<AlternationWitness> others;
        if (zeros >= 3 && alternation(z, col, v.zero_ancilla_rows, false, false, others)) {
          add(1, others);
        }
        if (zeros >= 2 && p1 && alternation(z, col, v.zero_ancilla_rows, true, false, others)) {
          add(2, others);
        }
        if (zeros >= 2 && p2 && alternation(z, col, v.zero_ancilla_rows, false, true, others)) {
          add(3, others);
        }
        if (zeros >= 1 && p1 && p2 && alternation(z, col, v.zero_ancilla_rows, true, true, others)) {
          add(4, others);
        }
        break;
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

double bunched_two_mode_mass(const CircuitMatrix& u, int n_a) {
  require_dims(u, n_a);
  double mass = 0.0;
  for (const auto& y : bunched_two_mode_outcomes(n_a + 2, n_a + 4)) {
    const auto p = bell_probabilities(bell_amplitudes(u, y, n_a), bosonic_factor(y));
    mass += 0.25 * (p[0] + p[1] + p[2] + p[3]);
  }
  return mass;
}

PopulationSummary summarize(const std::vector<double>& values) {
  PopulationSummary s;
  if (values.empty()) return s;
  const double n = static_cast<double>(values.size());
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  std::vector<double> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  s.min = sorted.front();
  s.max = sorted.back();
  const std::size_t mid = sorted.size() / 2;
  s.median = sorted.size() % 2 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  return s;
}

ComparisonRecord conditioned_vs_unconditioned_experiment(int n_a, int trials, std::uint64_t seed,
                                                         int parallelism) {
  conditioned_block_partition(n_a);  // rejects unsupported n_a
  if (trials < 1) throw ContractViolation("experiment needs at least one trial");
  ComparisonRecord rec;
  rec.n_a = n_a;
  rec.trials = trials;
  rec.seed = seed;
  const auto n = static_cast<std::size_t>(trials);
  rec.conditioned_h.resize(n);
  rec.unconditioned_h.resize(n);
  rec.conditioned_bunched_mass.resize(n);
  rec.unconditioned_bunched_mass.resize(n);

  const OutcomeAlphabet alphabet(n_a);
  parallel_for(trials, parallelism, [&](int t) {
    const auto i = static_cast<std::size_t>(t);
    const auto stream = static_cast<std::uint64_t>(t) * 2;
    const CircuitMatrix cond = sample_conditioned_unitary(n_a, derive_seed(seed, stream));
    const CircuitMatrix haar = haar_random_unitary(n_a + 4, derive_seed(seed, stream + 1));
    rec.conditioned_h[i] = mutual_information(outcome_table(cond, alphabet)).h_mutual;
    rec.unconditioned_h[i] = mutual_information(outcome_table(haar, alphabet)).h_mutual;
    rec.conditioned_bunched_mass[i] = bunched_two_mode_mass(cond, n_a);
    rec.unconditioned_bunched_mass[i] = bunched_two_mode_mass(haar, n_a);
  });
  rec.conditioned = summarize(rec.conditioned_h);
  rec.unconditioned = summarize(rec.unconditioned_h);
  return rec;
}

}  // namespace bsa
