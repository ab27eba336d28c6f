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

#pragma once

// The classical estimation game. Nature draws P, the statistician announces
// an estimate M and is charged R(P; M); the utility of award Q is
// P.Q - R(P; M). Its conjugate in P is the log-partition ln sum M_x e^{Q_x},
// attained at the Gibbs tilt P*_x = M_x e^{Q_x} / sum M e^Q.

#include <cstddef>
#include <span>
#include <vector>

#include "entropy_duel/ext_real.hpp"

namespace entropy_duel::game {

// Nonnegative weights summing to `mass` (default 1) within 1e-12.
class ClassicalDistribution {
 public:
  static constexpr double kMassTolerance = 1e-12;

  ClassicalDistribution() = default;
  explicit ClassicalDistribution(std::vector<double> weights, double mass = 1.0);

  // Rescales nonnegative weights to sum to one.
  static ClassicalDistribution normalized(std::vector<double> weights);
  static ClassicalDistribution uniform(std::size_t n);
  static ClassicalDistribution vertex(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return w_.size(); }
  double mass() const noexcept { return mass_; }
  double operator[](std::size_t i) const { return w_[i]; }
  const std::vector<double>& weights() const noexcept { return w_; }

 private:
  std::vector<double> w_;
  double mass_ = 1.0;
};

// ln sum_x M_x exp(Q_x), evaluated with a max shift over supp M.
double log_partition(const ClassicalDistribution& m, std::span<const double> q);

// Gibbs tilt of M by Q. Keeps the support of M.
ClassicalDistribution best_response(const ClassicalDistribution& m, std::span<const double> q);

// sum P ln(P/M) with 0 ln 0 = 0; +infinity when supp P is not inside supp M.
ExtReal relative_entropy(const ClassicalDistribution& p, const ClassicalDistribution& m);

struct BiconjugateResult {
  double value = 0.0;        // max over the box of P.Q - ln sum M e^Q
  std::vector<double> q;     // maximizer, centred so max + min = 0
  bool truncated = false;    // box constraint active (value is a lower bound)
  int iterations = 0;
};

// Recovers R(P; M) as the conjugate of the log-partition, maximized over the
// box |Q|_inf <= qbound by Newton ascent. The Newton direction has the closed
// form P/P* - 1 because the Hessian is diag(P*) - P* P*^T.
BiconjugateResult biconjugate_relent(const ClassicalDistribution& p,
                                     const ClassicalDistribution& m, double qbound = 20.0,
                                     int max_iters = 500);

struct MinimaxEstimate {
  double value = 0.0;
  ClassicalDistribution m_star;
};

// min over M of ln sum M e^Q. The objective is linear in M inside the log, so
// the minimum is at the vertex argmin Q (lowest index on ties; the uniform
// distribution when Q is constant, where every M is optimal).
MinimaxEstimate minimax_estimate(std::span<const double> q);

// Both orders of the estimation game on a simplex grid with `resolution`
// steps per unit. minimax is exact; maxmin is the grid value of
// sup_P inf_M [P.Q - R(P;M)] and is -infinity whenever some M misses supp P.
struct EstimationOrders {
  double minimax = 0.0;
  double maxmin = 0.0;  // may be -inf
  double gap = 0.0;     // minimax - maxmin, may be +inf
};
EstimationOrders estimation_orders(std::span<const double> q, int resolution = 20);

}  // namespace entropy_duel::game
