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
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bsa/transfer.hpp"

namespace bsa {

/// Unconstrained real parameters of a sub-unitary matrix U = V D W with
/// V = exp(i Vg), W = exp(i Wg) and D = diag(exp(-lambda_k^2)).
///
/// Layout of `values` (length 2 M^2 + M): Vg storage, Wg storage, lambdas.
/// A Hermitian generator is stored in M^2 reals: the M diagonal entries
/// followed by (re, im) of each strictly-upper entry in row-major order.
struct CircuitParams {
  int modes = 0;
  Eigen::VectorXd values;

  CircuitParams() = default;
  explicit CircuitParams(int m);

  static int dimension(int m) { return 2 * m * m + m; }

  std::span<const double> v_gen() const { return segment(0); }
  std::span<const double> w_gen() const { return segment(1); }
  std::span<const double> lambdas() const {
    return {values.data() + 2 * modes * modes, static_cast<std::size_t>(modes)};
  }
  std::span<double> lambdas() {
    return {values.data() + 2 * modes * modes, static_cast<std::size_t>(modes)};
  }

 private:
  std::span<const double> segment(int which) const {
    return {values.data() + which * modes * modes, static_cast<std::size_t>(modes * modes)};
  }
};

/// Hermitian matrix from its M^2-real storage.
Eigen::MatrixXcd hermitian_from_storage(std::span<const double> storage, int m);

/// exp(i H) for Hermitian H, via eigendecomposition.
Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd& h);

CircuitMatrix params_to_matrix(const CircuitParams& p);

/// Gradient of a real function f(U) with respect to the parameters, given
/// G(r, c) = df/dRe U(r, c) + i df/dIm U(r, c).
Eigen::VectorXd pullback_gradient(const CircuitParams& p, const Eigen::MatrixXcd& g);

/// Haar-distributed M x M unitary: QR of a complex Gaussian matrix with the
/// phases of R's diagonal moved into Q.
CircuitMatrix haar_random_unitary(int m, std::uint64_t seed);

/// Row and column index sets of the three blocks used by
/// sample_conditioned_unitary (0-based).
struct BlockPartition {
  std::array<std::vector<int>, 3> rows;
  std::array<std::vector<int>, 3> cols;
};

/// Block A holds the first n_a/2 ancilla rows, block B1 one more ancilla and
/// the first qubit pair, block B2 the remaining ancillas and the second
/// qubit pair. Requires even n_a >= 4.
BlockPartition conditioned_block_partition(int n_a);

/// Unitary with independent Haar blocks on conditioned_block_partition and
/// zeros elsewhere. Every column satisfies one of the two-mode bunching
/// conditions (I)-(IV).
CircuitMatrix sample_conditioned_unitary(int n_a, std::uint64_t seed);

/// Frobenius norm of U^dag U - I.
double matrix_distance_to_unitary(const CircuitMatrix& u);

/// Singular values, descending.
Eigen::VectorXd singular_values(const CircuitMatrix& u);

}  // namespace bsa
