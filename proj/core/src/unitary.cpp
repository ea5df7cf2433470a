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

#include "bsa/unitary.hpp"

#include <cmath>
#include <string>

#include "bsa/errors.hpp"
#include "bsa/rng.hpp"

namespace bsa {
namespace {

struct HermitianEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXcd vectors;
};

HermitianEigen eigen_hermitian(const Eigen::MatrixXcd& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::MatrixXcd expi_from_eigen(const HermitianEigen& e) {
  const Eigen::VectorXcd phases =
      e.values.unaryExpr([](double x) { return std::polar(1.0, x); });
  return e.vectors * phases.asDiagonal() * e.vectors.adjoint();
}

// (exp(i a) - exp(i b)) / (a - b), continuous at a == b.
Complex expi_divided_difference(double a, double b) {
  const double half = 0.5 * (a - b);
  const double sinc = std::abs(half) < 1e-8 ? 1.0 - half * half / 6.0 : std::sin(half) / half;
  return Complex{0.0, 1.0} * std::polar(1.0, 0.5 * (a + b)) * sinc;
}

// Given df = Re tr(g^dag d exp(iH)), returns the gradient with respect to the
// storage of H.
void pullback_expi(const HermitianEigen& e, const Eigen::MatrixXcd& g, std::span<double> out) {
  const int m = static_cast<int>(e.values.size());
  Eigen::MatrixXcd y = e.vectors.adjoint() * g * e.vectors;
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      y(j, k) *= std::conj(expi_divided_difference(e.values(j), e.values(k)));
    }
  }
  const Eigen::MatrixXcd ge = e.vectors * y * e.vectors.adjoint();
  std::size_t idx = 0;
  for (int k = 0; k < m; ++k) out[idx++] = ge(k, k).real();
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      out[idx++] = (ge(j, k) + ge(k, j)).real();
      out[idx++] = ge(j, k).imag() - ge(k, j).imag();
    }
  }
}

Eigen::VectorXd attenuations(const CircuitParams& p) {
  Eigen::VectorXd d(p.modes);
  const auto lambdas = p.lambdas();
  for (int k = 0; k < p.modes; ++k) d(k) = std::exp(-lambdas[k] * lambdas[k]);
  return d;
}

}  // namespace

CircuitParams::CircuitParams(int m) : modes(m), values(Eigen::VectorXd::Zero(dimension(m))) {
  if (m < 1) throw ContractViolation("CircuitParams: mode count must be positive");
}

Eigen::MatrixXcd hermitian_from_storage(std::span<const double> storage, int m) {
  if (storage.size() != static_cast<std::size_t>(m * m)) {
    throw ContractViolation("hermitian_from_storage: expected M^2 values");
  }
  Eigen::MatrixXcd h(m, m);
  std::size_t idx = 0;
  for (int k = 0; k < m; ++k) h(k, k) = storage[idx++];
  for (int j = 0; j < m; ++j) {
    for (int k = j + 1; k < m; ++k) {
      const Complex z{storage[idx], storage[idx + 1]};
      idx += 2;
      h(j, k) = z;
      h(k, j) = std::conj(z);
    }
  }
  return h;
}

Eigen::MatrixXcd expi_hermitian(const Eigen::MatrixXcd& h) {
  return expi_from_eigen(eigen_hermitian(h));
}

CircuitMatrix params_to_matrix(const CircuitParams& p) {
  const Eigen::MatrixXcd v = expi_hermitian(hermitian_from_storage(p.v_gen(), p.modes));
  const Eigen::MatrixXcd w = expi_hermitian(hermitian_from_storage(p.w_gen(), p.modes));
  return v * attenuations(p).cast<Complex>().asDiagonal() * w;
}

Eigen::VectorXd pullback_gradient(const CircuitParams& p, const Eigen::MatrixXcd& g) {
  const int m = p.modes;
  const HermitianEigen ve = eigen_hermitian(hermitian_from_storage(p.v_gen(), m));
  const HermitianEigen we = eigen_hermitian(hermitian_from_storage(p.w_gen(), m));
  const Eigen::MatrixXcd v = expi_from_eigen(ve);
  const Eigen::MatrixXcd w = expi_from_eigen(we);
  const Eigen::VectorXd d = attenuations(p);
  const auto dd = d.cast<Complex>().asDiagonal();

  Eigen::VectorXd grad(CircuitParams::dimension(m));
  const auto block = static_cast<std::size_t>(m * m);
  std::span<double> all(grad.data(), static_cast<std::size_t>(grad.size()));

  // U = V D W: the gradient seen by V is G (D W)^dag, by W it is (V D)^dag G
  pullback_expi(ve, g * w.adjoint() * dd, all.subspan(0, block));
  pullback_expi(we, dd * v.adjoint() * g, all.subspan(block, block));

  const Eigen::MatrixXcd gd = v.adjoint() * g * w.adjoint();
  const auto lambdas = p.lambdas();
  for (int k = 0; k < m; ++k) {
    grad(2 * m * m + k) = gd(k, k).real() * (-2.0 * lambdas[k] * d(k));
  }
  return grad;
}

CircuitMatrix haar_random_unitary(int m, std::uint64_t seed) {
  if (m < 1) throw ContractViolation("haar_random_unitary: mode count must be positive");
  Rng rng(seed);
  Eigen::MatrixXcd z(m, m);
  for (int c = 0; c < m; ++c) {
    for (int r = 0; r < m; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      z(r, c) = Complex{re, im} * M_SQRT1_2;
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (int k = 0; k < m; ++k) {
    const double mag = std::abs(r(k, k));
    const Complex phase = mag > 0.0 ? r(k, k) / mag : Complex{1.0, 0.0};
    q.col(k) *= phase;
  }
  return q;
}

BlockPartition conditioned_block_partition(int n_a) {
  if (n_a < 4 || n_a % 2 != 0) {
    throw UnsupportedConfiguration("conditioned unitary needs an even ancilla count >= 4, got " +
                                   std::to_string(n_a));
  }
  BlockPartition part;
  const int half = n_a / 2;
  for (int r = 0; r < half; ++r) part.rows[0].push_back(r);
  part.rows[1] = {half, n_a, n_a + 1};
  for (int r = half + 1; r < n_a; ++r) part.rows[2].push_back(r);
  part.rows[2].push_back(n_a + 2);
  part.rows[2].push_back(n_a + 3);

  int col = 0;
  for (std::size_t b = 0; b < 3; ++b) {
    for (std::size_t i = 0; i < part.rows[b].size(); ++i) part.cols[b].push_back(col++);
  }
  return part;
}

CircuitMatrix sample_conditioned_unitary(int n_a, std::uint64_t seed) {
  const BlockPartition part = conditioned_block_partition(n_a);
  const int m = n_a + 4;
  CircuitMatrix u = CircuitMatrix::Zero(m, m);
  for (std::size_t b = 0; b < 3; ++b) {
    const int size = static_cast<int>(part.rows[b].size());
    const CircuitMatrix block = haar_random_unitary(size, derive_seed(seed, b));
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        u(part.rows[b][static_cast<std::size_t>(i)], part.cols[b][static_cast<std::size_t>(j)]) =
            block(i, j);
      }
    }
  }
  return u;
}

double matrix_distance_to_unitary(const CircuitMatrix& u) {
  const auto m = u.cols();
  return (u.adjoint() * u - CircuitMatrix::Identity(m, m)).norm();
}

Eigen::VectorXd singular_values(const CircuitMatrix& u) {
  Eigen::JacobiSVD<CircuitMatrix> svd(u);
  return svd.singularValues();
}

}  // namespace bsa
