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

#include "entropy_duel/zero_sum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "entropy_duel/random.hpp"

namespace entropy_duel::game {
namespace {

using Vec = std::vector<double>;

Vec regret_strategy(const Vec& regret) {
  double total = 0.0;
  for (double r : regret) total += r;
  Vec s(regret.size());
  if (total <= 0.0) {
    std::fill(s.begin(), s.end(), 1.0 / static_cast<double>(s.size()));
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = regret[i] / total;
  }
  return s;
}

Vec row_payoffs(const GameMatrix& g, const Vec& y) {
  Vec u(g.rows(), 0.0);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) u[i] += g(i, j) * y[j];
  return u;
}

Vec col_payoffs(const GameMatrix& g, const Vec& x) {
  Vec u(g.cols(), 0.0);
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) u[j] += x[i] * g(i, j);
  return u;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> support(const Vec& w, double rel) {
  const double hi = *std::max_element(w.begin(), w.end());
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] > rel * hi) s.push_back(i);
  return s;
}

// Mix on `own` that makes the opponent indifferent across `other`:
// sum_own a(own, other) w_own = v for every other, sum w = 1. `transposed`
// selects whether own indexes rows (row player) or columns.
std::optional<Vec> equalizer(const GameMatrix& g, const std::vector<std::size_t>& own,
                             const std::vector<std::size_t>& other, bool own_is_row,
                             std::size_t full_size) {
  const auto k = static_cast<Eigen::Index>(own.size());
  const auto e = static_cast<Eigen::Index>(other.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(e + 1, k + 1);
  Eigen::VectorXd b = Eigen::VectorXd::Zero(e + 1);
  for (Eigen::Index r = 0; r < e; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      const std::size_t o = other[static_cast<std::size_t>(r)];
      const std::size_t w = own[static_cast<std::size_t>(c)];
      a(r, c) = own_is_row ? g(w, o) : g(o, w);
    }
    a(r, k) = -1.0;
  }
  for (Eigen::Index c = 0; c < k; ++c) a(e, c) = 1.0;
  b(e) = 1.0;
  const Eigen::VectorXd sol = a.completeOrthogonalDecomposition().solve(b);
  Vec w(full_size, 0.0);
  double total = 0.0;
  for (Eigen::Index c = 0; c < k; ++c) {
    double v = sol(c);
    if (!std::isfinite(v) || v < -1e-9) return std::nullopt;
    v = std::max(v, 0.0);
    w[own[static_cast<std::size_t>(c)]] = v;
    total += v;
  }
  if (!(total > 0.0)) return std::nullopt;
  for (double& v : w) v /= total;
  return w;
}

MixedProfile make_profile(const Vec& x, const Vec& y) {
  return {ClassicalDistribution::normalized(x), ClassicalDistribution::normalized(y)};
}

}  // namespace

GameMatrix::GameMatrix(const std::vector<std::vector<double>>& payoffs) {
  if (payoffs.empty() || payoffs.front().empty()) {
    throw ValidationError("GameMatrix: empty payoff matrix");
  }
  rows_ = payoffs.size();
  cols_ = payoffs.front().size();
  for (const auto& row : payoffs) {
    if (row.size() != cols_) throw ValidationError("GameMatrix: ragged rows");
    for (double v : row) {
      if (!std::isfinite(v)) throw ValidationError("GameMatrix: non-finite payoff");
      u_.push_back(v);
    }
  }
}

GameMatrix::GameMatrix(std::size_t rows, std::size_t cols, Vec row_major)
    : rows_(rows), cols_(cols), u_(std::move(row_major)) {
  if (rows_ == 0 || cols_ == 0 || u_.size() != rows_ * cols_) {
    throw ValidationError("GameMatrix: shape does not match data");
  }
  for (double v : u_) {
    if (!std::isfinite(v)) throw ValidationError("GameMatrix: non-finite payoff");
  }
}

GameMatrix GameMatrix::affine(double alpha, double beta) const {
  Vec u = u_;
  for (double& v : u) v = alpha * v + beta;
  return GameMatrix(rows_, cols_, std::move(u));
}

double expected_payoff(const GameMatrix& g, const MixedProfile& profile) {
  return dot(profile.row.weights(), row_payoffs(g, profile.col.weights()));
}

DeviationGains deviation_gains(const GameMatrix& g, const MixedProfile& profile) {
  if (profile.row.size() != g.rows() || profile.col.size() != g.cols()) {
    throw ValidationError("deviation_gains: profile does not match the game shape");
  }
  const Vec ur = row_payoffs(g, profile.col.weights());
  const Vec uc = col_payoffs(g, profile.row.weights());
  const double v = dot(profile.row.weights(), ur);
  return {*std::max_element(ur.begin(), ur.end()) - v,
          v - *std::min_element(uc.begin(), uc.end())};
}

ZeroSumSolution zero_sum_value(const GameMatrix& g, const ZeroSumOptions& opts) {
  if (!(opts.tol > 0.0)) throw ValidationError("zero_sum_value: tol must be positive");
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();

  Vec rx(n, 0.0);
  Vec ry(m, 0.0);
  if (opts.seed != 0) {
    Rng rng(opts.seed);
    rx = random_simplex(n, rng);
    ry = random_simplex(m, rng);
  }
  Vec xbar(n, 0.0);
  Vec ybar(m, 0.0);

  double best_gap = std::numeric_limits<double>::infinity();
  std::optional<ZeroSumSolution> best;
  auto consider = [&](const Vec& x, const Vec& y, long iters) {
    const MixedProfile prof = make_profile(x, y);
    const DeviationGains d = deviation_gains(g, prof);
    if (d.total() < best_gap) {
      best_gap = d.total();
      best = ZeroSumSolution{expected_payoff(g, prof), prof, d.total(), iters};
    }
    return d.total() <= opts.tol;
  };

  for (long t = 1; t <= opts.max_iters; ++t) {
    const Vec y = regret_strategy(ry);
    const Vec ux = row_payoffs(g, y);
    Vec x = regret_strategy(rx);
    double v = dot(x, ux);
    for (std::size_t i = 0; i < n; ++i) rx[i] = std::max(rx[i] + ux[i] - v, 0.0);
    x = regret_strategy(rx);
    const Vec uy = col_payoffs(g, x);
    v = dot(y, uy);
    // Column player minimizes, so its regret for j is v - uy[j].
    for (std::size_t j = 0; j < m; ++j) ry[j] = std::max(ry[j] + v - uy[j], 0.0);

    const double w = static_cast<double>(t);
    for (std::size_t i = 0; i < n; ++i) xbar[i] += w * x[i];
    for (std::size_t j = 0; j < m; ++j) ybar[j] += w * y[j];

    if (t % opts.polish_every != 0 && t != opts.max_iters) continue;
    if (consider(xbar, ybar, t)) return *best;
    for (double rel : {1e-2, 1e-3, 1e-4, 1e-6}) {
      const auto sr = support(xbar, rel);
      const auto sc = support(ybar, rel);
      const auto xs = equalizer(g, sr, sc, true, n);
      const auto ys = equalizer(g, sc, sr, false, m);
      if (xs && ys && consider(*xs, *ys, t)) return *best;
    }
  }
  throw ConvergenceError("zero_sum_value: duality gap " + std::to_string(best_gap) +
                             " above tolerance after " + std::to_string(opts.max_iters) +
                             " iterations",
                         best_gap);
}

ZeroSumSolution zero_sum_value(const GameMatrix& g, double tol) {
  ZeroSumOptions opts;
  opts.tol = tol;
  return zero_sum_value(g, opts);
}

Maxminimizer maxminimizer(const GameMatrix& g, Player player, const ZeroSumOptions& opts) {
  const ZeroSumSolution sol = zero_sum_value(g, opts);
  if (player == Player::kRow) {
    const Vec uc = col_payoffs(g, sol.profile.row.weights());
    return {sol.profile.row, *std::min_element(uc.begin(), uc.end())};
  }
  const Vec ur = row_payoffs(g, sol.profile.col.weights());
  return {sol.profile.col, -*std::max_element(ur.begin(), ur.end())};
}

bool nash_check(const GameMatrix& g, const MixedProfile& profile, double tol) {
  const DeviationGains d = deviation_gains(g, profile);
  return d.row <= tol && d.col <= tol;
}

}  // namespace entropy_duel::game
