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

// Finite two-player zero-sum games. The row player receives u(i, j), the
// column player -u(i, j).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "entropy_duel/classical_game.hpp"

namespace entropy_duel::game {

class GameMatrix {
 public:
  GameMatrix() = default;
  // Throws ValidationError on ragged rows, empty shape or non-finite entries.
  explicit GameMatrix(const std::vector<std::vector<double>>& payoffs);
  GameMatrix(std::size_t rows, std::size_t cols, std::vector<double> row_major);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return u_[i * cols_ + j]; }

  // alpha * G + beta
  GameMatrix affine(double alpha, double beta) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> u_;
};

struct MixedProfile {
  ClassicalDistribution row;
  ClassicalDistribution col;
};

// Payoff to the row player.
double expected_payoff(const GameMatrix& g, const MixedProfile& profile);

struct DeviationGains {
  double row = 0.0;  // max_i (G y)_i - x.G.y
  double col = 0.0;  // x.G.y - min_j (x G)_j
  double total() const { return row + col; }
};
DeviationGains deviation_gains(const GameMatrix& g, const MixedProfile& profile);

struct ZeroSumOptions {
  double tol = 1e-9;
  long max_iters = 2'000'000;
  // 0 starts both players uniform; other seeds draw random starting mixes.
  std::uint64_t seed = 0;
  // Attempt a support-equalization polish every this many iterations.
  int polish_every = 64;
};

struct ZeroSumSolution {
  double value = 0.0;
  MixedProfile profile;
  double gap = 0.0;  // row + column deviation gain; certificate
  long iterations = 0;
};

// Regret matching+ with alternating updates and linearly weighted averages.
// Every `polish_every` iterations the supports of the averages are extracted
// and the equalizer system on them is solved by least squares; the first
// candidate (polished or raw average) whose gap is <= tol is returned.
// Throws ConvergenceError carrying the best gap when the budget runs out.
ZeroSumSolution zero_sum_value(const GameMatrix& g, const ZeroSumOptions& opts);
ZeroSumSolution zero_sum_value(const GameMatrix& g, double tol);

enum class Player { kRow, kCol };

struct Maxminimizer {
  ClassicalDistribution strategy;
  double guarantee = 0.0;  // worst-case payoff to that player
};

Maxminimizer maxminimizer(const GameMatrix& g, Player player,
                          const ZeroSumOptions& opts = ZeroSumOptions{});

// True iff neither player gains more than tol by a pure deviation.
bool nash_check(const GameMatrix& g, const MixedProfile& profile, double tol);

}  // namespace entropy_duel::game
