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

#include "bsa/errors.hpp"
#include "bsa/rng.hpp"
#include "bsa/unitary.hpp"
#include "doctest.h"

using namespace bsa;

namespace {

CircuitParams random_params(int m, std::uint64_t seed, double scale = 1.0) {
  CircuitParams p(m);
  Rng rng(seed);
  for (int i = 0; i < p.values.size(); ++i) p.values(i) = rng.uniform(-scale, scale);
  return p;
}

double unitarity_error(const Eigen::MatrixXcd& u) {
  return (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).norm();
}

}  // namespace

TEST_CASE("params_to_matrix special cases") {
  const CircuitParams zero(5);
  CHECK((params_to_matrix(zero) - CircuitMatrix::Identity(5, 5)).norm() < 1e-14);

  CircuitParams dark(4);
  for (double& l : dark.lambdas()) l = 10.0;
  CHECK(params_to_matrix(dark).cwiseAbs().maxCoeff() <= std::exp(-100.0));
}

TEST_CASE("singular values of U are the attenuations") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int m = 2 + static_cast<int>(seed % 7);
    const CircuitParams p = random_params(m, seed);
    Eigen::VectorXd expected(m);
    for (int k = 0; k < m; ++k) expected(k) = std::exp(-p.lambdas()[k] * p.lambdas()[k]);
    std::sort(expected.data(), expected.data() + m, std::greater<>());
    CHECK((singular_values(params_to_matrix(p)) - expected).norm() < 1e-9);
  }
}

TEST_CASE("params_to_matrix is always sub-unitary") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const int m = 1 + static_cast<int>(seed % 10);
    const CircuitParams p = random_params(m, seed, 3.0);
    CHECK(singular_values(params_to_matrix(p))(0) <= 1.0 + 1e-9);
  }
}

TEST_CASE("exponentials of Hermitian generators are unitary") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int m = 1 + static_cast<int>(seed % 10);
    const CircuitParams p = random_params(m, seed, 4.0);
    const auto hv = hermitian_from_storage(p.v_gen(), m);
    const auto hw = hermitian_from_storage(p.w_gen(), m);
    CHECK((hv - hv.adjoint()).norm() == 0.0);
    CHECK(unitarity_error(expi_hermitian(hv)) < 1e-12);
    CHECK(unitarity_error(expi_hermitian(hw)) < 1e-12);
  }
  CHECK_THROWS_AS(hermitian_from_storage(std::vector<double>(5), 2), ContractViolation);
}

TEST_CASE("pullback gradient matches finite differences of a linear functional") {
  // f(U) = Re tr(B^dag U) has G = B
  const int m = 4;
  Rng rng(5);
  Eigen::MatrixXcd b(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) b(i, j) = {rng.normal(), rng.normal()};
  }
  auto f = [&](const CircuitParams& p) { return (b.adjoint() * params_to_matrix(p)).trace().real(); };

  CircuitParams p = random_params(m, 9, 0.8);
  // includes a repeated eigenvalue in W's generator
  for (int k = 0; k < m * m; ++k) p.values(m * m + k) = 0.0;
  const Eigen::VectorXd grad = pullback_gradient(p, b);
  const double h = 1e-6;
  for (int i = 0; i < p.values.size(); ++i) {
    CircuitParams up = p;
    CircuitParams down = p;
    up.values(i) += h;
    down.values(i) -= h;
    const double fd = (f(up) - f(down)) / (2.0 * h);
    CHECK(std::abs(fd - grad(i)) < 1e-7);
  }
}

TEST_CASE("Haar unitaries") {
  const CircuitMatrix one = haar_random_unitary(1, 3);
  CHECK(std::abs(std::abs(one(0, 0)) - 1.0) < 1e-15);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK(unitarity_error(haar_random_unitary(6, seed)) < 1e-12);
  }
  CHECK((haar_random_unitary(6, 1) - haar_random_unitary(6, 2)).norm() > 1e-3);
  CHECK(haar_random_unitary(6, 1) == haar_random_unitary(6, 1));
  CHECK_THROWS_AS(haar_random_unitary(0, 1), ContractViolation);
}

TEST_CASE("Haar first moments") {
  // E|U_ij|^2 = 1/M and E U_ij = 0 under the Haar measure
  const int m = 4;
  const int samples = 4000;
  double second = 0.0;
  Complex first{0.0, 0.0};
  for (int s = 0; s < samples; ++s) {
    const CircuitMatrix u = haar_random_unitary(m, static_cast<std::uint64_t>(s));
    second += std::norm(u(1, 2));
    first += u(0, 0);
  }
  CHECK(second / samples == doctest::Approx(1.0 / m).epsilon(0.05));
  CHECK(std::abs(first / static_cast<double>(samples)) < 0.03);
}

TEST_CASE("conditioned block partition") {
  const BlockPartition p = conditioned_block_partition(6);
  // 1-based: rows {1,2,3}, {4,7,8}, {5,6,9,10}
  CHECK(p.rows[0] == std::vector<int>{0, 1, 2});
  CHECK(p.rows[1] == std::vector<int>{3, 6, 7});
  CHECK(p.rows[2] == std::vector<int>{4, 5, 8, 9});
  CHECK(p.cols[0] == std::vector<int>{0, 1, 2});
  CHECK(p.cols[1] == std::vector<int>{3, 4, 5});
  CHECK(p.cols[2] == std::vector<int>{6, 7, 8, 9});

  const BlockPartition q = conditioned_block_partition(4);
  CHECK(q.rows[0] == std::vector<int>{0, 1});
  CHECK(q.rows[1] == std::vector<int>{2, 4, 5});
  CHECK(q.rows[2] == std::vector<int>{3, 6, 7});

  CHECK_THROWS_AS(conditioned_block_partition(3), UnsupportedConfiguration);
  CHECK_THROWS_AS(conditioned_block_partition(2), UnsupportedConfiguration);
  CHECK_THROWS_AS(sample_conditioned_unitary(5, 1), UnsupportedConfiguration);
}

TEST_CASE("conditioned unitaries are unitary with the block zero pattern") {
  for (int n_a : {4, 6, 8}) {
    const BlockPartition part = conditioned_block_partition(n_a);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const CircuitMatrix u = sample_conditioned_unitary(n_a, seed);
      CHECK(unitarity_error(u) < 1e-12);
      for (std::size_t b = 0; b < 3; ++b) {
        for (int r : part.rows[b]) {
          for (int c = 0; c < u.cols(); ++c) {
            const bool inside =
                std::find(part.cols[b].begin(), part.cols[b].end(), c) != part.cols[b].end();
            if (!inside) CHECK(u(r, c) == Complex{0.0, 0.0});
          }
        }
      }
    }
  }
  CHECK(sample_conditioned_unitary(6, 3) == sample_conditioned_unitary(6, 3));
}

TEST_CASE("distance to unitary") {
  CHECK(matrix_distance_to_unitary(CircuitMatrix::Identity(4, 4)) == 0.0);
  CHECK(matrix_distance_to_unitary(CircuitMatrix::Zero(4, 4)) == doctest::Approx(2.0));
  CircuitMatrix d = CircuitMatrix::Identity(4, 4);
  d(0, 0) = std::exp(-1.0);
  CHECK(matrix_distance_to_unitary(d) ==
        doctest::Approx(std::sqrt(std::pow(std::exp(-2.0) - 1.0, 2))).epsilon(1e-14));
}
