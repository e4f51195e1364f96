// Copyright 2026 The topas developers
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

#include "topas/synthesize.hpp"

#include "topas/error.hpp"
#include "topas/rng.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace topas {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// L-BFGS with Armijo backtracking. Minimizes the evaluator objective over
// the free parameters, in place. Returns the final objective.
double lbfgs_minimize(AnsatzEvaluator& eval, std::vector<double>& x,
                      const OptimizerConfig& opt, double f_success,
                      int* iterations) {
  const std::size_t n = x.size();
  constexpr std::size_t kHistory = 8;
  constexpr double kArmijo = 1e-4;

  std::vector<double> g(n), x_new(n), g_new(n), p(n);
  std::deque<std::vector<double>> s_hist, y_hist;
  std::deque<double> rho_hist;

  double f = eval.value_and_gradient(x, g);
  int stall = 0;

  for (int iter = 0; iter < opt.max_iters; ++iter) {
    if (iterations) ++*iterations;
    if (f <= f_success) break;
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (gmax <= opt.grad_tol) break;

    // Two-loop recursion.
    p = g;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t i = s_hist.size(); i-- > 0;) {
      double dot = 0.0;
      for (std::size_t j = 0; j < n; ++j) dot += s_hist[i][j] * p[j];
      alpha[i] = rho_hist[i] * dot;
      for (std::size_t j = 0; j < n; ++j) p[j] -= alpha[i] * y_hist[i][j];
    }
    if (!s_hist.empty()) {
      double sy = 0.0, yy = 0.0;
      const auto& s = s_hist.back();
      const auto& y = y_hist.back();
      for (std::size_t j = 0; j < n; ++j) {
        sy += s[j] * y[j];
        yy += y[j] * y[j];
      }
      const double gamma = (yy > 0.0) ? sy / yy : 1.0;
      for (double& v : p) v *= gamma;
    }
    for (std::size_t i = 0; i < s_hist.size(); ++i) {
      double dot = 0.0;
      for (std::size_t j = 0; j < n; ++j) dot += y_hist[i][j] * p[j];
      const double beta = rho_hist[i] * dot;
      for (std::size_t j = 0; j < n; ++j) {
        p[j] += (alpha[i] - beta) * s_hist[i][j];
      }
    }
    for (double& v : p) v = -v;

    double gp = 0.0;
    for (std::size_t j = 0; j < n; ++j) gp += g[j] * p[j];
    if (gp >= 0.0) {
      // Not a descent direction; fall back to steepest descent.
      for (std::size_t j = 0; j < n; ++j) p[j] = -g[j];
      gp = 0.0;
      for (std::size_t j = 0; j < n; ++j) gp += g[j] * p[j];
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      if (gp >= 0.0) break;  // zero gradient
    }

    double step = 1.0;
    double f_new = f;
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt) {
      for (std::size_t j = 0; j < n; ++j) x_new[j] = x[j] + step * p[j];
      f_new = eval.value(x_new);
      if (f_new <= f + kArmijo * step * gp) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    const double f_prev = f;
    f = eval.value_and_gradient(x_new, g_new);

    std::vector<double> s(n), y(n);
    double sy = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      s[j] = x_new[j] - x[j];
      y[j] = g_new[j] - g[j];
      sy += s[j] * y[j];
    }
    if (sy > 1e-14) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (s_hist.size() > kHistory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    x.swap(x_new);
    g.swap(g_new);

    if (f_prev - f < 1e-4 * f_prev + 1e-24) {
      if (++stall >= 40) break;
    } else {
      stall = 0;
    }
  }
  return f;
}

}  // namespace

InstantiateResult instantiate(const AnsatzCircuit& ansatz,
                              const CMatrix& target,
                              const SynthesisConfig& cfg,
                              const InstantiateOptions& opts) {
  const std::size_t total = ansatz.param_count();
  if (opts.warm_start && opts.warm_start->size() != total) {
    throw DimensionError("warm start length does not match ansatz");
  }
  if (opts.frozen_params > 0 && !opts.warm_start) {
    throw Error("frozen parameters need warm-start values");
  }

  std::span<const double> frozen_values;
  if (opts.warm_start) frozen_values = *opts.warm_start;
  AnsatzEvaluator eval(ansatz, target, opts.frozen_params, frozen_values);
  const std::size_t nfree = eval.free_count();
  const double f_success = cfg.epsilon * cfg.epsilon;

  InstantiateResult best;
  best.objective = 2.0;
  best.distance = 1.0;

  const auto consider = [&](std::vector<double>& free, double f) {
    if (f < best.objective) {
      best.objective = f;
      best.distance = AnsatzEvaluator::distance_from_objective(f);
      best.params.resize(total);
      for (std::size_t i = 0; i < opts.frozen_params; ++i) {
        best.params[i] = (*opts.warm_start)[i];
      }
      for (std::size_t i = 0; i < nfree; ++i) {
        best.params[opts.frozen_params + i] = free[i];
      }
    }
  };

  std::vector<double> x(nfree);
  int starts = cfg.optimizer.restarts + (opts.warm_start ? 1 : 0);
  if (starts == 0) starts = 1;  // always optimize at least once
  for (int s = 0; s < starts; ++s) {
    const bool warm = opts.warm_start && s == 0;
    if (warm) {
      for (std::size_t i = 0; i < nfree; ++i) {
        x[i] = (*opts.warm_start)[opts.frozen_params + i];
      }
    } else {
      Rng rng(mix_seed(cfg.seed, opts.salt * 131 + static_cast<std::uint64_t>(s)));
      for (std::size_t i = 0; i < nfree; ++i) {
        x[i] = rng.uniform(0.0, kTwoPi);
      }
    }
    const double f =
        lbfgs_minimize(eval, x, cfg.optimizer, f_success, &best.iterations);
    consider(x, f);
    if (best.objective <= f_success) break;
  }
  return best;
}

}  // namespace topas
