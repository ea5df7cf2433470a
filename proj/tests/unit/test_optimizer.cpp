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

#include "bsa/errors.hpp"
#include "bsa/optimizer.hpp"
#include "bsa/rng.hpp"
#include "doctest.h"

using namespace bsa;

TEST_CASE("objective spot values") {
  CHECK(objective(CircuitParams(4), 0) == doctest::Approx(1.0).epsilon(1e-14));

  CircuitParams dark(4);
  for (double& l : dark.lambdas()) l = 10.0;
  CHECK(objective(dark, 0) == doctest::Approx(2.0).epsilon(1e-14));

  CHECK(objective(CircuitParams(6), 2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("config validation") {
  OptimizerConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.restarts = 0;
  CHECK_THROWS_AS(cfg.validate(), ContractViolation);
  cfg = {};
  cfg.gradient_step = 1e-2;
  CHECK_THROWS_AS(cfg.validate(), ContractViolation);
  cfg.gradient_step = 1e-10;
  CHECK_THROWS_AS(cfg.validate(), ContractViolation);
  cfg = {};
  cfg.convergence_tol = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ContractViolation);
  CHECK_THROWS_AS(optimize(cfg), ContractViolation);
  cfg = {};
  cfg.hops = -1;
  CHECK_THROWS_AS(cfg.validate(), ContractViolation);
  cfg = {};
  cfg.hop_scale = 0.0;
  CHECK_THROWS_AS(cfg.validate(), ContractViolation);
}

TEST_CASE("finite-difference schemes agree") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const CircuitParams p = initial_params(4, 0.7, seed);
    const Objective f(0);
    const Eigen::VectorXd central = gradient(p, 0, 1e-6);
    const Eigen::VectorXd forward = f.forward_difference_gradient(p, 1e-7);
    CHECK((central - forward).norm() <= 1e-4 * central.norm());
  }
}

TEST_CASE("analytic gradient agrees with central differences") {
  for (int n_a : {0, 2}) {
    const Objective f(n_a);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const CircuitParams p = initial_params(n_a + 4, 0.7, seed + 10);
      Eigen::VectorXd analytic;
      const double v = f.value_and_gradient(p, analytic);
      CHECK(v == f.value(p));
      const Eigen::VectorXd central = f.central_difference_gradient(p, 1e-6);
      CHECK((analytic - central).norm() <= 1e-6 * (1.0 + central.norm()));
    }
  }
}

TEST_CASE("steepest descent decreases the objective") {
  const Objective f(0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CircuitParams p = initial_params(4, 0.5, seed + 100);
    Eigen::VectorXd g;
    const double v = f.value_and_gradient(p, g);
    CircuitParams q = p;
    q.values -= 1e-4 * g / g.norm();
    CHECK(f.value(q) < v);
  }
}

TEST_CASE("BFGS restart reaches the one-and-a-half bit analyzer") {
  OptimizerConfig cfg;
  cfg.n_a = 0;
  cfg.restarts = 20;
  cfg.seed = 7;
  const OptimizationResult r = optimize(cfg);
  CHECK(r.report.h_mutual >= 1.5 - 1e-3);
  CHECK(r.report.h_mutual <= 2.0 + 1e-9);
  CHECK(r.report.h_cond_garbage == doctest::Approx(0.5).epsilon(1e-3));

  // self-verifying result
  const InfoReport again = mutual_information(outcome_table(r.best_matrix, 0));
  CHECK(std::abs(again.h_mutual - r.report.h_mutual) < 1e-9);
  double best = 0.0;
  for (const auto& rec : r.per_restart) best = std::max(best, rec.h_mutual);
  CHECK(std::abs(best - r.report.h_mutual) < 1e-9);
  CHECK(r.per_restart[static_cast<std::size_t>(r.best_restart)].h_mutual == best);

  // stationarity and near-unitarity at the optimum
  const auto& winner = r.per_restart[static_cast<std::size_t>(r.best_restart)];
  CHECK((winner.gradient_norm < 10 * cfg.convergence_tol ||
         winner.termination == Termination::IterationCap));
  CHECK(gradient(r.best_params, 0, 1e-6).norm() < 1e-4);
  CHECK(matrix_distance_to_unitary(r.best_matrix) < 1e-3);

  for (const auto& rec : r.per_restart) {
    for (std::size_t i = 1; i < rec.trace.size(); ++i) CHECK(rec.trace[i] <= rec.trace[i - 1]);
    CHECK(rec.trace.size() == static_cast<std::size_t>(rec.iterations) + 1 -
                                  static_cast<std::size_t>(rec.termination ==
                                                           Termination::LineSearchStalled));
  }
}

TEST_CASE("two ancillas reach 1.625 bits") {
  OptimizerConfig cfg;
  cfg.n_a = 2;
  cfg.restarts = 50;
  cfg.seed = 7;
  const OptimizationResult r = optimize(cfg);
  CHECK(r.report.h_mutual >= 1.625 - 1e-3);
  CHECK(matrix_distance_to_unitary(r.best_matrix) < 1e-3);
}

TEST_CASE("basin hopping never loses the first descent") {
  OptimizerConfig cfg;
  cfg.n_a = 2;
  cfg.restarts = 4;
  cfg.seed = 11;
  const OptimizationResult plain = optimize(cfg);
  cfg.hops = 15;
  const OptimizationResult hopped = optimize(cfg);
  for (std::size_t i = 0; i < plain.per_restart.size(); ++i) {
    const auto& h = hopped.per_restart[i];
    CHECK(h.hops == 15);
    CHECK(h.h_mutual >= plain.per_restart[i].h_mutual);
    CHECK((h.hops_accepted > 0) == (h.h_mutual > plain.per_restart[i].h_mutual));
    CHECK(objective(h.params, 2) == doctest::Approx(h.objective).epsilon(1e-12));
  }
  CHECK(hopped.report.h_mutual >= 1.625 - 1e-3);
}

TEST_CASE("optimization is deterministic and independent of worker count") {
  OptimizerConfig cfg;
  cfg.n_a = 0;
  cfg.restarts = 6;
  cfg.seed = 42;
  cfg.hops = 2;
  const OptimizationResult a = optimize(cfg);
  const OptimizationResult b = optimize(cfg);
  cfg.parallelism = 3;
  const OptimizationResult c = optimize(cfg);
  CHECK(std::abs(a.report.h_mutual - b.report.h_mutual) <= 1e-12);
  CHECK(a.best_params.values == b.best_params.values);
  CHECK(a.best_params.values == c.best_params.values);
  for (std::size_t i = 0; i < a.per_restart.size(); ++i) {
    CHECK(a.per_restart[i].h_mutual == c.per_restart[i].h_mutual);
    CHECK(a.per_restart[i].iterations == c.per_restart[i].iterations);
  }
}

TEST_CASE("finite-difference gradient mode also converges") {
  OptimizerConfig cfg;
  cfg.n_a = 0;
  cfg.restarts = 4;
  cfg.seed = 3;
  cfg.gradient = GradientMode::CentralDifference;
  cfg.convergence_tol = 1e-5;
  const OptimizationResult r = optimize(cfg);
  CHECK(r.report.h_mutual >= 1.5 - 1e-3);
}

TEST_CASE("iteration cap is reported as such") {
  OptimizerConfig cfg;
  cfg.n_a = 0;
  cfg.restarts = 1;
  cfg.max_iterations = 3;
  const OptimizationResult r = optimize(cfg);
  CHECK(r.per_restart[0].termination == Termination::IterationCap);
  CHECK_FALSE(r.per_restart[0].converged);
  CHECK(r.per_restart[0].iterations == 3);
}
