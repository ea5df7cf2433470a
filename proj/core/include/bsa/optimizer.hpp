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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "bsa/infometrics.hpp"
#include "bsa/transfer.hpp"
#include "bsa/unitary.hpp"

namespace bsa {

enum class GradientMode {
  Analytic,           ///< exact chain rule through permanents and exp(iH)
  CentralDifference,  ///< central finite differences with gradient_step
};

struct OptimizerConfig {
  int n_a = 0;
  int restarts = 20;
  int max_iterations = 2000;
  double gradient_step = 1e-6;
  double convergence_tol = 1e-6;
  double init_scale = 0.5;
  /// Half-width of the initial lambdas. Lambdas are drawn apart from the
  /// generators because |lambda| >> 1 starts the descent near U = 0, where
  /// every gradient vanishes.
  double lambda_scale = 0.5;
  std::uint64_t seed = 1;
  int parallelism = 1;
  GradientMode gradient = GradientMode::Analytic;
  /// Basin-hopping rounds after each restart's first descent: perturb the
  /// best point found so far by N(0, hop_scale^2) per coordinate, descend
  /// again, keep the result if it is better.
  int hops = 0;
  double hop_scale = 0.5;

  /// Throws ContractViolation on out-of-range fields.
  void validate() const;
};

/// Garbage-corrected conditional information of U(p) for a fixed ancilla
/// count, with its gradient.
class Objective {
 public:
  explicit Objective(int n_a, int parallelism = 1);

  int n_a() const { return alphabet_.layout.n_a; }
  int modes() const { return alphabet_.layout.modes; }
  int dimension() const { return CircuitParams::dimension(modes()); }
  const OutcomeAlphabet& alphabet() const { return alphabet_; }

  double value(const CircuitParams& p) const;
  double value_of_matrix(const CircuitMatrix& u) const;

  /// Value and analytic gradient.
  double value_and_gradient(const CircuitParams& p, Eigen::VectorXd& grad) const;

  /// G(r, c) = d/dRe U(r, c) + i d/dIm U(r, c) of the objective at u.
  double value_and_matrix_gradient(const CircuitMatrix& u, Eigen::MatrixXcd& g) const;

  Eigen::VectorXd central_difference_gradient(const CircuitParams& p, double step) const;
  Eigen::VectorXd forward_difference_gradient(const CircuitParams& p, double step) const;

 private:
  OutcomeAlphabet alphabet_;
  int parallelism_;
};

/// H~(X|Y) in bits for U = params_to_matrix(p).
double objective(const CircuitParams& p, int n_a);

/// Central finite-difference gradient of objective() with the given step.
Eigen::VectorXd gradient(const CircuitParams& p, int n_a, double step = 1e-6);

enum class Termination { Converged, IterationCap, LineSearchStalled };

std::string to_string(Termination t);

struct RestartRecord {
  int index = 0;
  std::uint64_t seed = 0;
  double h_mutual = 0.0;
  double objective = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
  Termination termination = Termination::IterationCap;
  /// Hops performed and hops that improved on the best descent so far.
  int hops = 0;
  int hops_accepted = 0;
  /// Objective after each accepted step of the descent that produced
  /// `params`, starting with that descent's initial value.
  std::vector<double> trace;
  CircuitParams params;
};

struct OptimizationResult {
  CircuitParams best_params;
  CircuitMatrix best_matrix;
  InfoReport report;
  int best_restart = 0;
  std::vector<RestartRecord> per_restart;
  double wall_time = 0.0;
};

/// Random starting point: generator entries uniform in [-scale, scale],
/// lambdas uniform in [-lambda_scale, lambda_scale].
CircuitParams initial_params(int modes, double scale, std::uint64_t seed,
                             double lambda_scale = 0.5);

/// One BFGS descent from `start`.
RestartRecord minimize(const Objective& f, const CircuitParams& start, const OptimizerConfig& cfg);

using RestartCallback = std::function<void(const RestartRecord&, double best_so_far)>;

/// Multi-start BFGS. Restart i starts from initial_params(.., derive_seed(seed, i));
/// its hop perturbations come from Rng(derive_seed(derive_seed(seed, i), 1)).
/// The best restart is the one with the largest h_mutual, lowest index on ties.
OptimizationResult optimize(const OptimizerConfig& cfg, const RestartCallback& on_restart = {});

}  // namespace bsa
