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

// Seeded instance generators for tests and property sweeps.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "entropy_duel/herm.hpp"
#include "entropy_duel/quantum_channel.hpp"

namespace entropy_duel {

// Same seed, same stream. Normal deviates come from an explicit Box-Muller
// transform so the stream does not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+box-muller";

  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::string_view algorithm() const noexcept { return kAlgorithm; }

  // Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n);
  double normal();
  cplx complex_normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// G G^dagger / Tr(G G^dagger) for a complex Gaussian G (full rank a.s.).
DensityOperator random_density(std::size_t dim, Rng& rng);

// (G + G^dagger)/2 with complex Gaussian G scaled by `scale`.
HermitianOperator random_hermitian(std::size_t dim, double scale, Rng& rng);

// Kraus family sliced from a random isometry C^dim_in -> C^(kraus_count*dim_out).
QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                              std::size_t kraus_count, Rng& rng);

// Haar-ish unitary from the QR-like orthonormalization of a Gaussian matrix.
CMatrix random_unitary(std::size_t dim, Rng& rng);

// Probability vector with strictly positive entries.
std::vector<double> random_simplex(std::size_t n, Rng& rng);

}  // namespace entropy_duel
