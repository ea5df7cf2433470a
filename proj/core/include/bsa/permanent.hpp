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

#include <complex>
#include <span>

#include <Eigen/Dense>

namespace bsa {

using Complex = std::complex<double>;

/// Largest square size accepted by the permanent routines.
inline constexpr int kMaxPermanentSize = 16;

/// Permanent of the square matrix a[rows[i], cols[j]], by Ryser's formula
/// in Gray-code order, O(2^n n). Repeated indices are allowed.
Complex permanent(const Eigen::MatrixXcd& a, std::span<const int> rows,
                  std::span<const int> cols);

Complex permanent(const Eigen::MatrixXcd& a);

/// Permanent plus its derivatives d perm / d a[rows[i], cols[j]] written to
/// grad(i, j), treating every (i, j) slot as an independent variable.
/// O(2^n n^2).
Complex permanent_with_gradient(const Eigen::MatrixXcd& a, std::span<const int> rows,
                                std::span<const int> cols, Eigen::MatrixXcd& grad);

}  // namespace bsa
