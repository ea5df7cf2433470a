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

#include "bsa/infometrics.hpp"

#include <cmath>

namespace bsa {

double outcome_ambiguity(const std::array<double, 4>& p) {
  const double total = p[0] + p[1] + p[2] + p[3];
  double h = 0.0;
  for (double px : p) {
    if (px > 0.0) h += px * std::log2(total / px);
  }
  return h;
}

std::array<double, 4> outcome_ambiguity_gradient(const std::array<double, 4>& p) {
  const double total = p[0] + p[1] + p[2] + p[3];
  std::array<double, 4> g{};
  for (std::size_t x = 0; x < 4; ++x) {
    if (p[x] > 0.0) g[x] = std::log2(total / p[x]);
  }
  return g;
}

double conditional_information(const OutcomeTable& t, bool include_garbage) {
  double h = 0.0;
  for (const auto& row : t.rows) h += outcome_ambiguity(row);
  if (include_garbage) h += outcome_ambiguity(t.garbage);
  return 0.25 * h;
}

InfoReport mutual_information(const OutcomeTable& t) {
  InfoReport r;
  r.h_cond = conditional_information(t, false);
  r.h_cond_garbage = r.h_cond + 0.25 * outcome_ambiguity(t.garbage);
  r.h_mutual = r.h_x - r.h_cond_garbage;
  return r;
}

}  // namespace bsa
