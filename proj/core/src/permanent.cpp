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

#include "bsa/permanent.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "bsa/errors.hpp"

namespace bsa {
namespace {

struct Submatrix {
  int n = 0;
  std::array<Complex, kMaxPermanentSize * kMaxPermanentSize> v{};

  Complex operator()(int i, int j) const { return v[static_cast<std::size_t>(i * n + j)]; }
};

Submatrix gather(const Eigen::MatrixXcd& a, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) throw ContractViolation("permanent: submatrix is not square");
  const int n = static_cast<int>(rows.size());
  if (n > kMaxPermanentSize) throw ContractViolation("permanent: submatrix too large");
  Submatrix s;
  s.n = n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s.v[static_cast<std::size_t>(i * n + j)] = a(rows[i], cols[j]);
    }
  }
  return s;
}

}  // namespace

Complex permanent(const Eigen::MatrixXcd& a, std::span<const int> rows,
                  std::span<const int> cols) {
  const Submatrix s = gather(a, rows, cols);
  const int n = s.n;
  if (n == 0) return {1.0, 0.0};

  std::array<Complex, kMaxPermanentSize> row_sum{};
  Complex total{0.0, 0.0};
  const std::uint32_t subsets = 1u << n;
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const std::uint32_t next = k ^ (k >> 1);
    const bool added = (next & (1u << j)) != 0;
    gray = next;
    for (int i = 0; i < n; ++i) row_sum[i] += added ? s(i, j) : -s(i, j);
    Complex prod = row_sum[0];
    for (int i = 1; i < n; ++i) prod *= row_sum[i];
    total += (std::popcount(gray) & 1) ? -prod : prod;
  }
  return (n & 1) ? -total : total;
}

Complex permanent(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) throw ContractViolation("permanent: matrix is not square");
  std::vector<int> idx(static_cast<std::size_t>(a.rows()));
  for (int i = 0; i < a.rows(); ++i) idx[static_cast<std::size_t>(i)] = i;
  return permanent(a, idx, idx);
}

Complex permanent_with_gradient(const Eigen::MatrixXcd& a, std::span<const int> rows,
                                std::span<const int> cols, Eigen::MatrixXcd& grad) {
  const Submatrix s = gather(a, rows, cols);
  const int n = s.n;
  grad.setZero(n, n);
  if (n == 0) return {1.0, 0.0};

  std::array<Complex, kMaxPermanentSize> row_sum{};
  std::array<Complex, kMaxPermanentSize + 1> prefix{};
  std::array<Complex, kMaxPermanentSize + 1> suffix{};
  std::array<Complex, kMaxPermanentSize> others{};
  Complex total{0.0, 0.0};
  const std::uint32_t subsets = 1u << n;
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < subsets; ++k) {
    const int j = std::countr_zero(k);
    const std::uint32_t next = k ^ (k >> 1);
    const bool added = (next & (1u << j)) != 0;
    gray = next;
    for (int i = 0; i < n; ++i) row_sum[i] += added ? s(i, j) : -s(i, j);

    prefix[0] = {1.0, 0.0};
    for (int i = 0; i < n; ++i) prefix[i + 1] = prefix[i] * row_sum[i];
    suffix[n] = {1.0, 0.0};
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] * row_sum[i];

    const bool negative = (std::popcount(gray) & 1) != 0;
    total += negative ? -prefix[n] : prefix[n];
    for (int i = 0; i < n; ++i) {
      others[i] = prefix[i] * suffix[i + 1];
      if (negative) others[i] = -others[i];
    }
    for (std::uint32_t bits = gray; bits != 0; bits &= bits - 1) {
      const int col = std::countr_zero(bits);
      for (int i = 0; i < n; ++i) grad(i, col) += others[i];
    }
  }
  if (n & 1) {
    total = -total;
    grad = -grad;
  }
  return total;
}

}  // namespace bsa
