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

#include <cmath>
#include <map>
#include <vector>

#include "bsa/errors.hpp"
#include "bsa/transfer.hpp"

namespace bsa {

Complex amplitude_oracle(const CircuitMatrix& u, const FockState& input, const FockState& output) {
  if (input.photons() > 4 || input.modes() > 6) {
    throw SizeRefused("amplitude oracle: limited to N <= 4 photons and M <= 6 modes");
  }
  if (input.modes() != output.modes() || input.modes() != u.rows() || u.rows() != u.cols()) {
    throw ContractViolation("amplitude oracle: mode count mismatch");
  }
  if (input.photons() != output.photons()) {
    throw ContractViolation("amplitude oracle: photon count mismatch");
  }
  const int modes = input.modes();

  // Polynomial in the output creation operators, keyed by exponent vector.
  using Poly = std::map<std::vector<int>, Complex>;
  Poly poly{{std::vector<int>(static_cast<std::size_t>(modes), 0), Complex{1.0, 0.0}}};
  for (int r = 0; r < modes; ++r) {
    for (int copy = 0; copy < input[r]; ++copy) {
      Poly next;
      for (const auto& [mono, coeff] : poly) {
        for (int c = 0; c < modes; ++c) {
          if (u(r, c) == Complex{0.0, 0.0}) continue;
          auto grown = mono;
          ++grown[static_cast<std::size_t>(c)];
          next[grown] += coeff * u(r, c);
        }
      }
      poly = std::move(next);
    }
  }

  const auto it = poly.find(output.occupations);
  if (it == poly.end()) return {0.0, 0.0};
  // (a^dag)^n |0> = sqrt(n!) |n>, and the input state carries 1/sqrt(prod n_k!)
  double out_norm = 1.0;
  double in_norm = 1.0;
  for (int k = 0; k < modes; ++k) {
    out_norm *= static_cast<double>(factorial(output[k]));
    in_norm *= static_cast<double>(factorial(input[k]));
  }
  return it->second * std::sqrt(out_norm) / std::sqrt(in_norm);
}

}  // namespace bsa
