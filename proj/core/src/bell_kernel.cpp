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

#include <array>
#include <cstdint>

#include "bsa/errors.hpp"
#include "bsa/transfer.hpp"

// Ryser's formula for the four Bell permanents of one outcome, summed over
// multiplicity vectors c (0 <= c_k <= n'_k) of the occupied output modes
// rather than over column subsets:
//
//   perm = (-1)^N sum_c prod_k (-1)^c_k binom(n'_k, c_k) prod_i r_i(c),
//   r_i(c) = sum_k c_k U(i, k).
//
// The four input row sets share the ancilla rows, so each c forms the four
// products from one common ancilla product.

namespace bsa {
namespace {

constexpr int kMaxModes = kMaxPhotons + 2;

using Sums = std::array<Complex, kMaxModes>;

constexpr std::array<std::array<double, kMaxPhotons + 1>, kMaxPhotons + 1> make_binomials() {
  std::array<std::array<double, kMaxPhotons + 1>, kMaxPhotons + 1> b{};
  for (int n = 0; n <= kMaxPhotons; ++n) {
    b[n][0] = 1.0;
    for (int k = 1; k <= n; ++k) b[n][k] = b[n - 1][k - 1] + (k < n ? b[n - 1][k] : 0.0);
  }
  return b;
}

constexpr auto kBinomials = make_binomials();

void check(const CircuitMatrix& u, const OutcomeAlphabet& alphabet) {
  const int m = alphabet.layout.modes;
  if (u.rows() != m || u.cols() != m) {
    throw ContractViolation("bell kernel: matrix does not match the outcome alphabet");
  }
}

/// Depth-first walk over multiplicity vectors, keeping one row-sum vector
/// per depth so each step costs one column addition.
class MultisetWalk {
 public:
  MultisetWalk(const CircuitMatrix& u, const FockState& y) : u_(u), m_(static_cast<int>(u.rows())) {
    for (int k = 0; k < y.modes(); ++k) {
      if (y[k] > 0) {
        cols_[static_cast<std::size_t>(d_)] = k;
        mult_[static_cast<std::size_t>(d_)] = y[k];
        ++d_;
      }
    }
    level_[0].fill(Complex{});
  }

  int depth() const { return d_; }
  int column(int t) const { return cols_[static_cast<std::size_t>(t)]; }

  /// visit(row_sums, signed binomial weight) for every multiplicity vector.
  template <class Visit>
  void run(Visit& visit) {
    descend(0, 1.0, visit);
  }

  /// Derivative walk: leaf(row_sums, weight, w) stores dP/dr_i in w, and
  /// acc[t][i] receives sum over leaves of c_t * w_i, collected per subtree
  /// so each leaf is added once per level instead of once per column.
  template <class Leaf>
  void run_derivative(Leaf& leaf, std::array<Sums, kMaxModes>& acc) {
    derive(0, 1.0, leaf, acc);
  }

 private:
  template <class Leaf>
  void derive(int t, double weight, Leaf& leaf, std::array<Sums, kMaxModes>& acc) {
    const auto& here = level_[static_cast<std::size_t>(t)];
    auto& sub = subtree_[static_cast<std::size_t>(t)];
    if (t == d_) {
      leaf(here, weight, sub);
      return;
    }
    for (int i = 0; i < m_; ++i) sub[i] = Complex{};
    auto& next = level_[static_cast<std::size_t>(t) + 1];
    const auto& child = subtree_[static_cast<std::size_t>(t) + 1];
    auto& a = acc[static_cast<std::size_t>(t)];
    for (int i = 0; i < m_; ++i) next[i] = here[i];
    const int n = mult_[static_cast<std::size_t>(t)];
    const int col = cols_[static_cast<std::size_t>(t)];
    for (int c = 0;; ++c) {
      const double sign = (c & 1) ? -1.0 : 1.0;
      derive(t + 1, weight * sign * kBinomials[n][c], leaf, acc);
      const double dc = c;
      for (int i = 0; i < m_; ++i) {
        sub[i] += child[i];
        a[i] += dc * child[i];
      }
      if (c == n) break;
      for (int i = 0; i < m_; ++i) next[i] += u_(i, col);
    }
  }

  template <class Visit>
  void descend(int t, double weight, Visit& visit) {
    const auto& here = level_[static_cast<std::size_t>(t)];
    if (t == d_) {
      visit(here, weight);
      return;
    }
    auto& next = level_[static_cast<std::size_t>(t) + 1];
    for (int i = 0; i < m_; ++i) next[i] = here[i];
    const int n = mult_[static_cast<std::size_t>(t)];
    const int col = cols_[static_cast<std::size_t>(t)];
    for (int c = 0;; ++c) {
      const double sign = (c & 1) ? -1.0 : 1.0;
      descend(t + 1, weight * sign * kBinomials[n][c], visit);
      if (c == n) break;
      for (int i = 0; i < m_; ++i) next[i] += u_(i, col);
    }
  }

  const CircuitMatrix& u_;
  int m_;
  int d_ = 0;
  std::array<int, kMaxModes> cols_{};
  std::array<int, kMaxModes> mult_{};
  std::array<Sums, kMaxModes + 1> level_{};
  std::array<Sums, kMaxModes + 1> subtree_{};
};

}  // namespace

BellAmplitudes bell_amplitudes(const CircuitMatrix& u, const OutcomeAlphabet& alphabet,
                               std::size_t y) {
  check(u, alphabet);
  const int n_a = alphabet.layout.n_a;
  const FockState& out = alphabet.outcomes[y];

  std::array<Complex, 4> total{};
  MultisetWalk walk(u, out);
  auto visit = [&](const Sums& r, double weight) {
    Complex anc{weight, 0.0};
    for (int i = 0; i < n_a; ++i) anc *= r[i];
    const Complex* q = r.data() + n_a;
    total[0] += anc * (q[0] * q[2]);
    total[1] += anc * (q[1] * q[3]);
    total[2] += anc * (q[0] * q[3]);
    total[3] += anc * (q[1] * q[2]);
  };
  walk.run(visit);
  const int n = alphabet.layout.photons;
  const double scale = ((n & 1) ? -1.0 : 1.0) / alphabet.occupation_factorials[y];
  return {total[0] * scale, total[1] * scale, total[2] * scale, total[3] * scale};
}

void accumulate_bell_derivative(const CircuitMatrix& u, const OutcomeAlphabet& alphabet,
                                std::size_t y, const std::array<Complex, 4>& coeff,
                                Eigen::MatrixXcd& h) {
  check(u, alphabet);
  const int n_a = alphabet.layout.n_a;
  const int m = alphabet.layout.modes;
  const FockState& out = alphabet.outcomes[y];

  // acc[t][i]: derivative of the weighted sum with respect to U(i, column t)
  std::array<Sums, kMaxModes> acc{};
  std::array<Complex, kMaxModes + 1> prefix{};
  std::array<Complex, kMaxModes + 1> suffix{};

  MultisetWalk walk(u, out);
  auto leaf = [&](const Sums& r, double weight, Sums& w) {
    const Complex* q = r.data() + n_a;
    prefix[0] = {1.0, 0.0};
    for (int i = 0; i < n_a; ++i) prefix[i + 1] = prefix[i] * r[i];
    suffix[n_a] = {1.0, 0.0};
    for (int i = n_a - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * r[i];
    const Complex anc = prefix[n_a] * weight;

    const Complex qubit = (coeff[0] * q[0] * q[2] + coeff[1] * q[1] * q[3] +
                           coeff[2] * q[0] * q[3] + coeff[3] * q[1] * q[2]) *
                          weight;
    for (int i = 0; i < n_a; ++i) w[i] = prefix[i] * suffix[i + 1] * qubit;
    w[n_a + 0] = anc * (coeff[0] * q[2] + coeff[2] * q[3]);
    w[n_a + 1] = anc * (coeff[1] * q[3] + coeff[3] * q[2]);
    w[n_a + 2] = anc * (coeff[0] * q[0] + coeff[3] * q[1]);
    w[n_a + 3] = anc * (coeff[1] * q[1] + coeff[2] * q[0]);
  };
  walk.run_derivative(leaf, acc);
  const int n = alphabet.layout.photons;
  const double scale = ((n & 1) ? -1.0 : 1.0) / alphabet.occupation_factorials[y];
  for (int t = 0; t < walk.depth(); ++t) {
    for (int i = 0; i < m; ++i) h(i, walk.column(t)) += acc[static_cast<std::size_t>(t)][i] * scale;
  }
}

}  // namespace bsa
