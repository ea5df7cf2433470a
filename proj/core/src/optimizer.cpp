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

#include "bsa/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <mutex>

#include "bsa/errors.hpp"
#include "bsa/parallel.hpp"
#include "bsa/rng.hpp"

namespace bsa {
namespace {

// Outcomes are split into a fixed number of chunks whose partial results are
// merged in chunk order, so sums do not depend on the thread count.
constexpr int kChunks = 64;

struct ChunkRange {
  std::size_t begin;
  std::size_t end;
};

ChunkRange chunk_range(std::size_t total, int chunk) {
  const auto c = static_cast<std::size_t>(chunk);
  return {total * c / kChunks, total * (c + 1) / kChunks};
}

struct Evaluation {
  std::vector<BellAmplitudes> amps;
  std::vector<std::array<double, 4>> probs;
  std::array<double, 4> garbage{};
  double value = 0.0;
};

Evaluation evaluate(const CircuitMatrix& u, const OutcomeAlphabet& alphabet, int parallelism) {
  Evaluation ev;
  const std::size_t n = alphabet.size();
  ev.amps.resize(n);
  ev.probs.resize(n);
  std::array<std::array<double, 5>, kChunks> partial{};
  parallel_for(kChunks, parallelism, [&](int c) {
    const auto [begin, end] = chunk_range(n, c);
    auto& acc = partial[static_cast<std::size_t>(c)];
    for (std::size_t y = begin; y < end; ++y) {
      ev.amps[y] = bell_amplitudes(u, alphabet, y);
      ev.probs[y] = bell_probabilities(ev.amps[y], alphabet.bosonic[y]);
      for (std::size_t x = 0; x < 4; ++x) acc[x] += ev.probs[y][x];
      acc[4] += outcome_ambiguity(ev.probs[y]);
    }
  });
  std::array<double, 5> total{};
  for (const auto& acc : partial) {
    for (std::size_t i = 0; i < 5; ++i) total[i] += acc[i];
  }
  for (std::size_t x = 0; x < 4; ++x) ev.garbage[x] = std::max(0.0, 1.0 - total[x]);
  ev.value = 0.25 * (total[4] + outcome_ambiguity(ev.garbage));
  return ev;
}

double norm_of(const Eigen::VectorXd& v) { return v.norm(); }

}  // namespace

void OptimizerConfig::validate() const {
  if (n_a < 0) throw ContractViolation("n_a must be non-negative");
  if (restarts < 1) throw ContractViolation("restarts must be at least 1");
  if (max_iterations < 1) throw ContractViolation("max_iterations must be at least 1");
  if (!(gradient_step > 1e-9 && gradient_step < 1e-3)) {
    throw ContractViolation("gradient_step must lie in (1e-9, 1e-3)");
  }
  if (!(convergence_tol > 0.0)) throw ContractViolation("convergence_tol must be positive");
  if (!(init_scale >= 0.0)) throw ContractViolation("init_scale must be non-negative");
  if (!(lambda_scale >= 0.0)) throw ContractViolation("lambda_scale must be non-negative");
  if (parallelism < 1) throw ContractViolation("parallelism must be at least 1");
  if (hops < 0) throw ContractViolation("hops must be non-negative");
  if (!(hop_scale > 0.0)) throw ContractViolation("hop_scale must be positive");
}

Objective::Objective(int n_a, int parallelism) : alphabet_(n_a), parallelism_(parallelism) {}

double Objective::value_of_matrix(const CircuitMatrix& u) const {
  return evaluate(u, alphabet_, parallelism_).value;
}

double Objective::value(const CircuitParams& p) const {
  return value_of_matrix(params_to_matrix(p));
}

double Objective::value_and_matrix_gradient(const CircuitMatrix& u, Eigen::MatrixXcd& g) const {
  const Evaluation ev = evaluate(u, alphabet_, parallelism_);
  const std::array<double, 4> garbage_grad = outcome_ambiguity_gradient(ev.garbage);
  const int m = modes();
  const std::size_t n = alphabet_.size();
  // h accumulates sum_i c_i dA_i/dU, the holomorphic derivative; g is its
  // conjugate.
  std::vector<Eigen::MatrixXcd> partial(kChunks, Eigen::MatrixXcd::Zero(m, m));
  parallel_for(kChunks, parallelism_, [&](int c) {
    const auto [begin, end] = chunk_range(n, c);
    auto& h = partial[static_cast<std::size_t>(c)];
    for (std::size_t y = begin; y < end; ++y) {
      const auto& p = ev.probs[y];
      const std::array<double, 4> amb = outcome_ambiguity_gradient(p);
      std::array<double, 4> gx{};
      for (std::size_t x = 0; x < 4; ++x) gx[x] = 0.25 * (amb[x] - garbage_grad[x]);

      const BellAmplitudes& a = ev.amps[y];
      const double twice_c = 2.0 * alphabet_.bosonic[y];
      const Complex s1 = std::conj(a.a1 + a.a2) * gx[0];
      const Complex s2 = std::conj(a.a1 - a.a2) * gx[1];
      const Complex s3 = std::conj(a.a3 + a.a4) * gx[2];
      const Complex s4 = std::conj(a.a3 - a.a4) * gx[3];
      const std::array<Complex, 4> coeff{twice_c * (s1 + s2), twice_c * (s1 - s2),
                                         twice_c * (s3 + s4), twice_c * (s3 - s4)};
      if (coeff == std::array<Complex, 4>{}) continue;
      accumulate_bell_derivative(u, alphabet_, y, coeff, h);
    }
  });
  g.setZero(m, m);
  for (const auto& h : partial) g += h;
  g = g.conjugate().eval();
  return ev.value;
}

double Objective::value_and_gradient(const CircuitParams& p, Eigen::VectorXd& grad) const {
  Eigen::MatrixXcd g;
  const double v = value_and_matrix_gradient(params_to_matrix(p), g);
  grad = pullback_gradient(p, g);
  return v;
}

Eigen::VectorXd Objective::central_difference_gradient(const CircuitParams& p, double step) const {
  const Objective serial(n_a(), 1);
  Eigen::VectorXd grad(dimension());
  parallel_for(dimension(), parallelism_, [&](int i) {
    CircuitParams q = p;
    q.values(i) = p.values(i) + step;
    const double up = serial.value(q);
    q.values(i) = p.values(i) - step;
    const double down = serial.value(q);
    grad(i) = (up - down) / (2.0 * step);
  });
  return grad;
}

Eigen::VectorXd Objective::forward_difference_gradient(const CircuitParams& p, double step) const {
  const Objective serial(n_a(), 1);
  const double base = value(p);
  Eigen::VectorXd grad(dimension());
  parallel_for(dimension(), parallelism_, [&](int i) {
    CircuitParams q = p;
    q.values(i) = p.values(i) + step;
    grad(i) = (serial.value(q) - base) / step;
  });
  return grad;
}

double objective(const CircuitParams& p, int n_a) { return Objective(n_a).value(p); }

Eigen::VectorXd gradient(const CircuitParams& p, int n_a, double step) {
  return Objective(n_a).central_difference_gradient(p, step);
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Converged:
      return "converged";
    case Termination::IterationCap:
      return "iteration_cap";
    case Termination::LineSearchStalled:
      return "line_search_stalled";
  }
  return "unknown";
}

CircuitParams initial_params(int modes, double scale, std::uint64_t seed, double lambda_scale) {
  CircuitParams p(modes);
  Rng rng(seed);
  const auto generators = p.values.size() - modes;
  for (Eigen::Index i = 0; i < generators; ++i) p.values(i) = rng.uniform(-scale, scale);
  for (double& l : p.lambdas()) l = rng.uniform(-lambda_scale, lambda_scale);
  return p;
}

RestartRecord minimize(const Objective& f, const CircuitParams& start, const OptimizerConfig& cfg) {
  constexpr double kArmijo = 1e-4;
  constexpr double kShrink = 0.5;
  constexpr double kMinStep = 1e-12;
  // Parameters are angles and log-attenuations; longer trial steps only
  // wrap around.
  constexpr double kMaxStepNorm = 1.0;

  const int dim = f.dimension();
  auto eval = [&](const CircuitParams& p, Eigen::VectorXd& g) {
    if (cfg.gradient == GradientMode::Analytic) return f.value_and_gradient(p, g);
    g = f.central_difference_gradient(p, cfg.gradient_step);
    return f.value(p);
  };

  RestartRecord rec;
  CircuitParams x = start;
  Eigen::VectorXd g;
  double fx = eval(x, g);
  rec.trace.push_back(fx);
  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(dim, dim);
  bool fresh_hessian = true;

  int it = 0;
  rec.termination = Termination::IterationCap;
  while (it < cfg.max_iterations) {
    if (norm_of(g) < cfg.convergence_tol) {
      rec.termination = Termination::Converged;
      break;
    }
    Eigen::VectorXd dir = -hinv * g;
    double slope = g.dot(dir);
    if (!(slope < 0.0)) {
      hinv.setIdentity();
      fresh_hessian = true;
      dir = -g;
      slope = g.dot(dir);
    }
    double alpha = std::min(1.0, kMaxStepNorm / dir.norm());
    CircuitParams trial = x;
    double ftrial = 0.0;
    bool accepted = false;
    while (alpha > kMinStep) {
      trial.values = x.values + alpha * dir;
      ftrial = f.value(trial);
      if (ftrial <= fx + kArmijo * alpha * slope) {
        accepted = true;
        break;
      }
      alpha *= kShrink;
    }
    ++it;
    if (!accepted) {
      if (fresh_hessian) {
        rec.termination = Termination::LineSearchStalled;
        break;
      }
      hinv.setIdentity();
      fresh_hessian = true;
      continue;
    }

    Eigen::VectorXd gnew;
    const double fnew = eval(trial, gnew);
    const Eigen::VectorXd s = trial.values - x.values;
    const Eigen::VectorXd y = gnew - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      if (fresh_hessian) {
        hinv *= sy / y.squaredNorm();
        fresh_hessian = false;
      }
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = hinv * y;
      const double yhy = y.dot(hy);
      hinv += ((1.0 + rho * yhy) * rho) * (s * s.transpose()) -
              rho * (hy * s.transpose() + s * hy.transpose());
    }
    x = std::move(trial);
    fx = fnew;
    g = std::move(gnew);
    rec.trace.push_back(fx);
  }

  rec.iterations = it;
  rec.objective = fx;
  rec.h_mutual = kSourceEntropyBits - fx;
  rec.gradient_norm = norm_of(g);
  rec.converged = rec.termination == Termination::Converged;
  rec.params = std::move(x);
  return rec;
}

namespace {
// Smaller gains are convergence noise between equivalent optima.
constexpr double kHopImprovement = 1e-9;
}  // namespace

OptimizationResult optimize(const OptimizerConfig& cfg, const RestartCallback& on_restart) {
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  const int modes = cfg.n_a + 4;

  // Concurrent restarts each evaluate serially; a single restart gets the
  // whole pool for its outcome map.
  const int outer = std::min(cfg.parallelism, cfg.restarts);
  const int inner = outer > 1 ? 1 : cfg.parallelism;
  const Objective f(cfg.n_a, inner);

  OptimizationResult result;
  result.per_restart.resize(static_cast<std::size_t>(cfg.restarts));
  std::mutex mu;
  double best_so_far = -1.0;
  parallel_for(cfg.restarts, outer, [&](int i) {
    const std::uint64_t seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
    RestartRecord rec = minimize(f, initial_params(modes, cfg.init_scale, seed, cfg.lambda_scale), cfg);
    Rng hop_rng(derive_seed(seed, 1));
    int accepted = 0;
    for (int h = 0; h < cfg.hops; ++h) {
      CircuitParams start = rec.params;
      for (Eigen::Index k = 0; k < start.values.size(); ++k) {
        start.values(k) += cfg.hop_scale * hop_rng.normal();
      }
      RestartRecord next = minimize(f, start, cfg);
      if (next.h_mutual > rec.h_mutual + kHopImprovement) {
        rec = std::move(next);
        ++accepted;
      }
    }
    rec.hops = cfg.hops;
    rec.hops_accepted = accepted;
    rec.index = i;
    rec.seed = seed;
    std::lock_guard lock(mu);
    best_so_far = std::max(best_so_far, rec.h_mutual);
    if (on_restart) on_restart(rec, best_so_far);
    result.per_restart[static_cast<std::size_t>(i)] = std::move(rec);
  });

  int best = 0;
  for (int i = 1; i < cfg.restarts; ++i) {
    if (result.per_restart[static_cast<std::size_t>(i)].h_mutual >
        result.per_restart[static_cast<std::size_t>(best)].h_mutual) {
      best = i;
    }
  }
  result.best_restart = best;
  result.best_params = result.per_restart[static_cast<std::size_t>(best)].params;
  result.best_matrix = params_to_matrix(result.best_params);
  result.report = mutual_information(outcome_table(result.best_matrix, cfg.n_a, cfg.parallelism));
  result.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace bsa
