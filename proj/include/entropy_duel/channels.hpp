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

// Channels in Kraus form, the standard compound state of an input and a
// channel, entangled mutual information and the entangled capacity
//   C(ch) = sup_sigma0 R(joint; marginal_a (x) marginal_b).
// The supremum over encodings is taken to be attained by the standard
// entanglement and is not searched.

#include <cstdint>
#include <string>
#include <vector>

#include "entropy_duel/ext_real.hpp"
#include "entropy_duel/herm.hpp"
#include "entropy_duel/quantum_channel.hpp"
#include "entropy_duel/quantum_entropy.hpp"

namespace entropy_duel::channels {

using entropy::DivergenceSpec;
using entropy::OptimOptions;

// sum_k A_k rho A_k^dagger. The result carries the trace of the output.
DensityOperator apply(const QuantumChannel& ch, const DensityOperator& state);
CMatrix apply(const QuantumChannel& ch, const CMatrix& x);

QuantumChannel channel_tensor(const QuantumChannel& a, const QuantumChannel& b);
// after o before.
QuantumChannel channel_compose(const QuantumChannel& after, const QuantumChannel& before);
// Kraus family {P_k}. Projections must be Hermitian idempotents, mutually
// orthogonal and sum to I within 1e-10.
QuantumChannel pinching(const std::vector<CMatrix>& projections);
QuantumChannel unitary_channel(const CMatrix& u);

QuantumChannel identity_channel(std::size_t dim);
// rho -> (1 - p) rho + p Tr(rho) I / d, Kraus family from the Weyl operators.
QuantumChannel depolarizing(double p, std::size_t dim = 2);
// rho -> (1 - p) rho + p diag(rho).
QuantumChannel dephasing(double p, std::size_t dim = 2);
// Qubit amplitude damping with decay probability g.
QuantumChannel amplitude_damping(double g);

// Builtins by name: "identity", "depolarizing", "dephasing",
// "amplitude-damping", with the parameter given as "name:x" or "name(x)".
// identity takes the dimension (default 2).
QuantumChannel named_channel(const std::string& spec);

struct CompoundState {
  DensityOperator joint;       // on dim_a * dim_b, first factor is the reference
  DensityOperator marginal_a;  // transpose_tilde(sigma0)
  DensityOperator marginal_b;  // ch(sigma0)
  std::size_t dim_a = 0;
  std::size_t dim_b = 0;

  // max over both factors of ||Tr_other(joint) - marginal||_F
  double marginal_error() const;
};

// joint = (Id (x) ch)(psi psi^dagger) with psi_{(i,j)} = (sqrt sigma0)_{j,i},
// the purification of sigma0 with a conjugated reference copy.
CompoundState standard_compound(const DensityOperator& sigma0, const QuantumChannel& ch);

ExtReal mutual_information(const DensityOperator& sigma0, const QuantumChannel& ch,
                           const DivergenceSpec& spec);
// Mutual information of sigma with the identity channel (2 S(sigma) for
// umegaki). For other kinds this is the standard-entanglement entropy.
ExtReal entangled_entropy(const DensityOperator& sigma, const DivergenceSpec& spec);
// entangled_entropy(ch(sigma0)) - mutual_information(sigma0, ch). Throws
// DomainError if the mutual information is infinite.
ExtReal conditional_entropy(const DensityOperator& sigma0, const QuantumChannel& ch,
                            const DivergenceSpec& spec);

struct CapacityOptions {
  OptimOptions optim{200, 1e-7, 1.0, 40.0};
  int restarts = 5;        // seeded restarts after the maximally mixed start
  std::uint64_t seed = 0;
  double fd_step = 1e-5;   // central-difference step in G
};

struct CapacityReport {
  double value = 0.0;
  DensityOperator argmax_input;
  int iterations = 0;      // summed over restarts
  bool converged = false;  // the winning restart reached grad_tol
  double grad_norm = 0.0;  // of the winning restart, in G coordinates
  int best_restart = 0;
};

// Maximizes mutual_information over sigma0 = G G^dagger / Tr(G G^dagger) by
// BFGS with central-difference gradients. Restart 0 starts at G = I; the
// Gaussian starts of restarts 1..n are drawn in order from Rng(seed) before
// any optimization runs. The best value wins, ties go to the lowest index.
CapacityReport capacity(const QuantumChannel& ch, const DivergenceSpec& spec,
                        const CapacityOptions& opts = {});

struct AdditivityReport {
  double c1 = 0.0;
  double c2 = 0.0;
  double c12 = 0.0;
  double gap = 0.0;  // c12 - (c1 + c2)
};
AdditivityReport additivity_report(const QuantumChannel& ch1, const QuantumChannel& ch2,
                                   const DivergenceSpec& spec, const CapacityOptions& opts = {});

struct JAdditivity {
  double lhs = 0.0;  // I((x) sigma_i, (x) ch_i)
  double rhs = 0.0;  // sum_i I(sigma_i, ch_i)
};
JAdditivity product_input_J_additivity_check(const std::vector<QuantumChannel>& chs,
                                             const std::vector<DensityOperator>& sigmas,
                                             const DivergenceSpec& spec);

}  // namespace entropy_duel::channels
