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

#include <cstddef>
#include <vector>

#include "entropy_duel/cmatrix.hpp"

namespace entropy_duel {

// Trace-preserving completely positive map in Kraus form,
// rho -> sum_k A_k rho A_k^dagger with sum_k A_k^dagger A_k = I.
class QuantumChannel {
 public:
  static constexpr double kCompletenessTolerance = 1e-9;

  QuantumChannel() = default;
  // Each Kraus operator is dim_out x dim_in. Throws ValidationError on shape
  // errors, an empty family, or completeness off by more than 1e-9.
  QuantumChannel(std::size_t dim_in, std::size_t dim_out, std::vector<CMatrix> kraus);

  std::size_t dim_in() const noexcept { return dim_in_; }
  std::size_t dim_out() const noexcept { return dim_out_; }
  const std::vector<CMatrix>& kraus() const noexcept { return kraus_; }

  // ||sum A^dagger A - I||_F
  double completeness_error() const;

 private:
  std::size_t dim_in_ = 0;
  std::size_t dim_out_ = 0;
  std::vector<CMatrix> kraus_;
};

}  // namespace entropy_duel
