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

#include <algorithm>
#include <cmath>
#include <string>

#include "entropy/spectral.hpp"
#include "entropy_duel/errors.hpp"
#include "entropy_duel/quantum_entropy.hpp"

namespace entropy_duel::entropy {

double log_trace_exp(const DensityOperator& m, const HermitianOperator& q, double mu) {
  if (m.dim() != q.dim()) throw ValidationError("log_trace_exp: dimension mismatch");
  if (!(mu > 0.0)) throw ValidationError("log_trace_exp: mu must be positive");
  const Spectrum s = eig_hermitian(q);
  const std::vector<double> w = detail::diag_in_basis(s.eigenvectors, m.matrix());
  const double shift = s.eigenvalues.back();
  double z = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    z += std::max(w[i], 0.0) * std::exp(s.eigenvalues[i] - shift);
  }
  if (!(z > 0.0)) throw DomainError("log_trace_exp: Tr(M e^Q) vanishes");
  return mu * (shift + std::log(z) - std::log(mu));
}

QuantumMinimax quantum_minimax_estimate(const HermitianOperator& q, double mu) {
  if (q.dim() == 0) throw ValidationError("quantum_minimax_estimate: empty operator");
  if (!(mu > 0.0)) throw ValidationError("quantum_minimax_estimate: mu must be positive");
  const Spectrum s = eig_hermitian(q);
  std::vector<cplx> v(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) v[r] = s.eigenvectors(r, 0);
  return {mu * (s.eigenvalues.front() - std::log(mu)), DensityOperator::pure(v)};
}

}  // namespace entropy_duel::entropy
