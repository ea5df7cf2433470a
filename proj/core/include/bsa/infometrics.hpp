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
#include <span>

#include "bsa/transfer.hpp"

namespace bsa {

/// Shannon entropy of the uniform four-state source, in bits. Also the von
/// Neumann entropy of the equiprobable Bell ensemble.
inline constexpr double kSourceEntropyBits = 2.0;

/// Information figures for one analyzer, all in bits.
struct InfoReport {
  double h_cond = 0.0;          ///< H(X|Y) over measured outcomes only
  double h_cond_garbage = 0.0;  ///< H(X|Y) with the leaked outcome included
  double h_mutual = 0.0;        ///< H(X) - h_cond_garbage
  double h_x = kSourceEntropyBits;
  double s_rho = kSourceEntropyBits;
};

/// sum_x p_x log2(sum_x' p_x' / p_x), with 0 log(./0) taken as 0.
double outcome_ambiguity(const std::array<double, 4>& p);

/// d/dp_x of outcome_ambiguity, i.e. log2(sum p / p_x); 0 where p_x is 0.
std::array<double, 4> outcome_ambiguity_gradient(const std::array<double, 4>& p);

double conditional_information(const OutcomeTable& t, bool include_garbage);

InfoReport mutual_information(const OutcomeTable& t);

}  // namespace bsa
