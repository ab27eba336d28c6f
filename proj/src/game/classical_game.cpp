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

#include "entropy_duel/classical_game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace entropy_duel::game {
namespace {

void require_match(const ClassicalDistribution& m, std::span<const double> q, const char* op) {
  if (m.size() != q.size() || q.empty()) {
    throw ValidationError(std::string(op) + ": length mismatch (" + std::to_string(m.size()) +
                          " vs " + std::to_string(q.size()) + ")");
  }
  for (double v : q) {
    if (!std::isfinite(v)) throw ValidationError(std::string(op) + ": non-finite award");
  }
}

double max_on_support(const ClassicalDistribution& m, std::span<const double> q) {
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (m[i] > 0.0) hi = std::max(hi, q[i]);
  }
  if (!std::isfinite(hi)) throw ValidationError("log_partition: M has empty support");
  return hi;
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

ClassicalDistribution::ClassicalDistribution(std::vector<double> weights, double mass)
    : w_(std::move(weights)), mass_(mass) {
  if (w_.empty()) throw ValidationError("ClassicalDistribution: empty");
  if (!(mass_ > 0.0)) throw ValidationError("ClassicalDistribution: mass must be positive");
  double total = 0.0;
  for (double v : w_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError("ClassicalDistribution: weights must be finite and >= 0");
    }
    total += v;
  }
  if (std::abs(total - mass_) > kMassTolerance) {
    throw ValidationError("ClassicalDistribution: weights sum to " + std::to_string(total) +
                          ", expected " + std::to_string(mass_));
  }
}

ClassicalDistribution ClassicalDistribution::normalized(std::vector<double> weights) {
  double total = 0.0;
  for (double v : weights) total += v;
  if (!(total > 0.0)) throw ValidationError("ClassicalDistribution: zero total weight");
  for (double& v : weights) v /= total;
  // Absorb the rounding residue into the largest weight.
  double residue = 1.0 - std::accumulate(weights.begin(), weights.end(), 0.0);
  *std::max_element(weights.begin(), weights.end()) += residue;
  return ClassicalDistribution(std::move(weights));
}

ClassicalDistribution ClassicalDistribution::uniform(std::size_t n) {
  return normalized(std::vector<double>(n, 1.0));
}

ClassicalDistribution ClassicalDistribution::vertex(std::size_t n, std::size_t k) {
  std::vector<double> w(n, 0.0);
  w.at(k) = 1.0;
  return ClassicalDistribution(std::move(w));
}

double log_partition(const ClassicalDistribution& m, std::span<const double> q) {
  require_match(m, q, "log_partition");
  const double shift = max_on_support(m, q);
  double s = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (m[i] > 0.0) s += m[i] * std::exp(q[i] - shift);
  }
  return shift + std::log(s);
}

ClassicalDistribution best_response(const ClassicalDistribution& m, std::span<const double> q) {
  require_match(m, q, "best_response");
  const double shift = max_on_support(m, q);
  std::vector<double> p(q.size(), 0.0);
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (m[i] > 0.0) p[i] = m[i] * std::exp(q[i] - shift);
  }
  return ClassicalDistribution::normalized(std::move(p));
}

ExtReal relative_entropy(const ClassicalDistribution& p, const ClassicalDistribution& m) {
  if (p.size() != m.size()) throw ValidationError("relative_entropy: length mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0.0) continue;
    if (m[i] == 0.0) return ExtReal::plus_infinity();
    s += p[i] * std::log(p[i] / m[i]);
  }
  return ExtReal(s);
}

BiconjugateResult biconjugate_relent(const ClassicalDistribution& p,
                                     const ClassicalDistribution& m, double qbound,
                                     int max_iters) {
  if (p.size() != m.size()) throw ValidationError("biconjugate_relent: length mismatch");
  if (!(qbound > 0.0)) throw ValidationError("biconjugate_relent: qbound must be positive");
  const std::size_t n = p.size();

  // Coordinates outside supp M do not enter the log-partition. If P puts
  // mass there the supremum is +infinity; pin them at the box edge.
  std::vector<bool> free(n);
  bool violation = false;
  for (std::size_t i = 0; i < n; ++i) {
    free[i] = m[i] > 0.0;
    if (!free[i] && p[i] > 0.0) violation = true;
  }

  auto project = [&](std::vector<double>& q) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      if (!free[i]) continue;
      lo = std::min(lo, q[i]);
      hi = std::max(hi, q[i]);
    }
    const double centre = 0.5 * (lo + hi);
    for (std::size_t i = 0; i < n; ++i) {
      q[i] = free[i] ? std::clamp(q[i] - centre, -qbound, qbound) : qbound;
    }
  };
  auto objective = [&](const std::vector<double>& q) {
    return dot(p.weights(), q) - log_partition(m, q);
  };

  BiconjugateResult res;
  std::vector<double> q(n, 0.0);
  project(q);
  double f = objective(q);
  std::vector<double> dir(n);
  std::vector<double> trial(n);
  for (res.iterations = 0; res.iterations < max_iters; ++res.iterations) {
    const ClassicalDistribution tilt = best_response(m, q);
    double slope = 0.0;
    double gmax = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!free[i]) {
        dir[i] = 0.0;
        continue;
      }
      const double g = p[i] - tilt[i];
      dir[i] = tilt[i] > 0.0 ? g / tilt[i] : 1.0;
      // Coordinates pinned at the box with the gradient pointing outward do
      // not move.
      if ((q[i] >= qbound && g > 0.0) || (q[i] <= -qbound && g < 0.0)) {
        dir[i] = 0.0;
        continue;
      }
      slope += g * dir[i];
      gmax = std::max(gmax, std::abs(g));
    }
    if (gmax <= 1e-13) break;

    double t = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
      for (std::size_t i = 0; i < n; ++i) trial[i] = q[i] + t * dir[i];
      project(trial);
      const double ft = objective(trial);
      if (ft >= f + 1e-4 * t * slope || (ft >= f && t < 1e-6)) {
        accepted = ft >= f;
        if (accepted) {
          q = trial;
          f = ft;
        }
        break;
      }
    }
    if (!accepted) break;
  }

  res.truncated = violation;
  const ClassicalDistribution tilt = best_response(m, q);
  for (std::size_t i = 0; i < n; ++i) {
    if (!free[i]) continue;
    const double g = p[i] - tilt[i];
    if (std::abs(q[i]) >= qbound && std::abs(g) > 1e-9) res.truncated = true;
  }
  res.value = f;
  res.q = std::move(q);
  return res;
}

MinimaxEstimate minimax_estimate(std::span<const double> q) {
  if (q.empty()) throw ValidationError("minimax_estimate: empty award");
  for (double v : q) {
    if (!std::isfinite(v)) throw ValidationError("minimax_estimate: non-finite award");
  }
  const auto lo = std::min_element(q.begin(), q.end());
  const auto hi = std::max_element(q.begin(), q.end());
  MinimaxEstimate est;
  est.value = *lo;
  est.m_star = (*lo == *hi)
                   ? ClassicalDistribution::uniform(q.size())
                   : ClassicalDistribution::vertex(q.size(),
                                                   static_cast<std::size_t>(lo - q.begin()));
  return est;
}

namespace {

// Calls f on every point of the simplex grid {k / resolution}.
template <typename F>
void for_each_grid_point(std::size_t n, int resolution, F&& f) {
  std::vector<int> counts(n, 0);
  std::vector<double> w(n);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == n) {
      counts[i] = left;
      for (std::size_t k = 0; k < n; ++k) w[k] = static_cast<double>(counts[k]) / resolution;
      f(ClassicalDistribution::normalized(w));
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[i] = c;
      self(self, i + 1, left - c);
    }
  };
  rec(rec, 0, resolution);
}

}  // namespace

EstimationOrders estimation_orders(std::span<const double> q, int resolution) {
  if (resolution < 1) throw ValidationError("estimation_orders: resolution must be >= 1");
  EstimationOrders out;
  out.minimax = minimax_estimate(q).value;
  double best = -std::numeric_limits<double>::infinity();
  for_each_grid_point(q.size(), resolution, [&](const ClassicalDistribution& p) {
    double worst = std::numeric_limits<double>::infinity();
    for_each_grid_point(q.size(), resolution, [&](const ClassicalDistribution& m) {
      const ExtReal r = relative_entropy(p, m);
      const double u = r.is_infinite() ? -std::numeric_limits<double>::infinity()
                                       : dot(p.weights(), q) - r.value();
      worst = std::min(worst, u);
    });
    best = std::max(best, worst);
  });
  out.maxmin = best;
  out.gap = out.minimax - out.maxmin;
  return out;
}

}  // namespace entropy_duel::game
