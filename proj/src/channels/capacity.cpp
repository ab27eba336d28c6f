// Copyright 2026 The entropy_duel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <functional>
#include <limits>

#include "entropy_duel/channels.hpp"
#include "entropy_duel/errors.hpp"
#include "entropy_duel/random.hpp"

namespace entropy_duel::channels {
namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// G is stored as interleaved (re, im) pairs in row-major order.
DensityOperator input_state(const Vec& x, std::size_t d) {
  CMatrix g(d, d);
  for (std::size_t k = 0; k < d * d; ++k) g.data()[k] = cplx(x[2 * k], x[2 * k + 1]);
  CMatrix s = g * g.adjoint();
  const double tr = s.trace().real();
  if (!(tr > 0.0) || !std::isfinite(tr)) throw DomainError("capacity: degenerate G");
  s *= cplx(1.0 / tr);
  return DensityOperator(HermitianOperator(std::move(s)).matrix());
}

struct Run {
  double value = -std::numeric_limits<double>::infinity();
  Vec x;
  int iterations = 0;
  double grad_norm = 0.0;
  bool converged = false;
};

// BFGS ascent with central-difference gradients. Points where the objective
// throws DomainError are treated as -infinity by the line search.
Run ascend(const std::function<double(const Vec&)>& f, Vec x, const OptimOptions& opts,
           double h) {
  const std::size_t n = x.size();
  auto safe = [&](const Vec& p) {
    try {
      return f(p);
    } catch (const DomainError&) {
      return -std::numeric_limits<double>::infinity();
    }
  };
  auto gradient = [&](const Vec& p) {
    Vec g(n);
    Vec q = p;
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = p[i] + h;
      const double up = f(q);
      q[i] = p[i] - h;
      const double down = f(q);
      q[i] = p[i];
      g[i] = (up - down) / (2.0 * h);
    }
    return g;
  };

  Run r;
  r.value = f(x);
  Vec g = gradient(x);
  std::vector<double> hinv(n * n, 0.0);
  auto reset = [&](double scale) {
    std::fill(hinv.begin(), hinv.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i) hinv[i * n + i] = scale;
  };
  reset(1.0);
  bool fresh = true;
  bool first_update = true;
  Vec d(n), xt(n), s(n), y(n), hy(n);
  for (; r.iterations < opts.max_iters; ++r.iterations) {
    if (std::sqrt(dot(g, g)) <= opts.grad_tol) break;
    // Ascent: d = H g.
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += hinv[i * n + j] * g[j];
      d[i] = acc;
    }
    double slope = dot(g, d);
    if (!(slope > 0.0)) {
      reset(1.0);
      fresh = true;
      d = g;
      slope = dot(g, d);
    }
    double t = opts.step_init;
    if (r.iterations == 0) t = std::min(t, 1.0 / std::max(1.0, std::sqrt(dot(d, d))));
    bool accepted = false;
    double ft = 0.0;
    for (int ls = 0; ls < 50; ++ls, t *= 0.5) {
      for (std::size_t i = 0; i < n; ++i) xt[i] = x[i] + t * d[i];
      ft = safe(xt);
      if (ft >= r.value + 1e-4 * t * slope) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (fresh) break;
      reset(1.0);
      fresh = true;
      continue;
    }
    const Vec gt = gradient(xt);
    // Minimization convention for the secant pair: y = -(gt - g).
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = xt[i] - x[i];
      y[i] = g[i] - gt[i];
    }
    x = xt;
    g = gt;
    r.value = ft;
    const double sy = dot(s, y);
    if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      if (first_update) {
        reset(sy / dot(y, y));
        first_update = false;
      }
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) acc += hinv[i * n + j] * y[j];
        hy[i] = acc;
      }
      const double a = (sy + dot(y, hy)) / (sy * sy);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          hinv[i * n + j] += a * s[i] * s[j] - (hy[i] * s[j] + s[i] * hy[j]) / sy;
      fresh = false;
    }
  }
  r.grad_norm = std::sqrt(dot(g, g));
  r.converged = r.grad_norm <= opts.grad_tol;
  r.x = std::move(x);
  return r;
}

}  // namespace

CapacityReport capacity(const QuantumChannel& ch, const DivergenceSpec& spec,
                        const CapacityOptions& opts) {
  opts.optim.validate();
  if (opts.restarts < 0) throw ValidationError("capacity: restarts must be >= 0");
  if (!(opts.fd_step > 0.0)) throw ValidationError("capacity: fd_step must be positive");
  const std::size_t d = ch.dim_in();

  std::vector<Vec> starts;
  Vec eye(2 * d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i) eye[2 * (i * d + i)] = 1.0;
  starts.push_back(eye);
  Rng rng(opts.seed);
  for (int k = 0; k < opts.restarts; ++k) {
    Vec x(2 * d * d);
    for (std::size_t i = 0; i < d * d; ++i) {
      const cplx z = rng.complex_normal();
      x[2 * i] = z.real();
      x[2 * i + 1] = z.imag();
    }
    starts.push_back(std::move(x));
  }

  auto objective = [&](const Vec& x) {
    return mutual_information(input_state(x, d), ch, spec).to_double();
  };

  CapacityReport report;
  bool have = false;
  Vec best_x;
  for (std::size_t k = 0; k < starts.size(); ++k) {
    const Run run = ascend(objective, starts[k], opts.optim, opts.fd_step);
    report.iterations += run.iterations;
    // Values within 1e-12 count as ties and keep the lower restart index.
    if (!have || run.value > report.value + 1e-12) {
      have = true;
      report.value = run.value;
      report.converged = run.converged;
      report.grad_norm = run.grad_norm;
      report.best_restart = static_cast<int>(k);
      best_x = run.x;
    }
  }
  report.argmax_input = input_state(best_x, d);
  return report;
}

AdditivityReport additivity_report(const QuantumChannel& ch1, const QuantumChannel& ch2,
                                   const DivergenceSpec& spec, const CapacityOptions& opts) {
  AdditivityReport r;
  r.c1 = capacity(ch1, spec, opts).value;
  r.c2 = capacity(ch2, spec, opts).value;
  r.c12 = capacity(channel_tensor(ch1, ch2), spec, opts).value;
  r.gap = r.c12 - (r.c1 + r.c2);
  return r;
}

}  // namespace entropy_duel::channels
