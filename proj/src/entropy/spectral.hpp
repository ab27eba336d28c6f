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

// Internal spectral helpers shared by the entropy sources.

#include <cmath>
#include <vector>

#include "entropy_duel/herm.hpp"

namespace entropy_duel::entropy::detail {

// Real parts of diag(U^dagger X U).
inline std::vector<double> diag_in_basis(const CMatrix& u, const CMatrix& x) {
  const CMatrix r = u.adjoint() * x * u;
  std::vector<double> d(r.rows());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = r(i, i).real();
  return d;
}

inline CMatrix inverse_sqrt(const Spectrum& s) {
  return s.reconstruct([](double x) { return 1.0 / std::sqrt(x); });
}

inline CMatrix psd_sqrt(const Spectrum& s) {
  return s.reconstruct([](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; });
}

}  // namespace entropy_duel::entropy::detail
