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

// Hermitian linear algebra: operator types, eigendecomposition, spectral
// functions, the gradient of Q -> Tr(M exp Q), tensor products and partial
// traces.

#include <cstddef>
#include <functional>
#include <vector>

#include "entropy_duel/cmatrix.hpp"

namespace entropy_duel {

// Eigenvalues at or below this are outside the support.
inline constexpr double kSupportCutoff = 1e-12;

// Below this eigenvalue gap the divided difference of exp collapses to e^a.
inline constexpr double kDividedDifferenceThreshold = 1e-10;

enum class SupportMode {
  kStrict,   // error if the spectrum leaves the function's domain
  kSupport,  // evaluate on the support, zero elsewhere (pseudo-log/inverse)
};

// Square complex matrix with enforced Hermitian symmetry. Construction
// replaces H by (H + H^dagger)/2 and rejects non-finite entries.
class HermitianOperator {
 public:
  HermitianOperator() = default;
  explicit HermitianOperator(CMatrix m);

  static HermitianOperator zero(std::size_t dim);
  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator diagonal(std::span<const double> d);

  std::size_t dim() const noexcept { return m_.rows(); }
  const CMatrix& matrix() const noexcept { return m_; }
  double trace() const { return m_.trace().real(); }

 private:
  CMatrix m_;
};

// Positive semidefinite Hermitian operator with a prescribed trace ("mass").
// States have mass 1; compressions P rho P and rescaled operators carry
// whatever trace they have.
class DensityOperator {
 public:
  static constexpr double kMinEigenvalue = -1e-10;
  static constexpr double kTraceTolerance = 1e-10;

  DensityOperator() = default;
  // Throws ValidationError unless min eigenvalue >= -1e-10 and
  // |trace - mass| <= 1e-10.
  DensityOperator(CMatrix m, double mass);
  explicit DensityOperator(CMatrix m) : DensityOperator(m, 1.0) {}

  // Takes the mass from the trace; only positivity is checked.
  static DensityOperator unnormalized(CMatrix m);
  static DensityOperator maximally_mixed(std::size_t dim);
  static DensityOperator pure(std::span<const cplx> psi);

  std::size_t dim() const noexcept { return h_.dim(); }
  double mass() const noexcept { return mass_; }
  const CMatrix& matrix() const noexcept { return h_.matrix(); }
  const HermitianOperator& hermitian() const noexcept { return h_; }

  DensityOperator scaled(double factor) const;

 private:
  HermitianOperator h_;
  double mass_ = 1.0;
};

// Eigenvalues ascending; eigenvectors as the columns of a unitary.
struct Spectrum {
  std::vector<double> eigenvalues;
  CMatrix eigenvectors;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  // U diag(f(lambda)) U^dagger
  CMatrix reconstruct(const std::function<double(double)>& f) const;
  CMatrix reconstruct() const;
};

Spectrum eig_hermitian(const HermitianOperator& h);
Spectrum eig_hermitian(const DensityOperator& rho);

HermitianOperator mat_fn(const HermitianOperator& h,
                         const std::function<double(double)>& f);

HermitianOperator mat_exp(const HermitianOperator& h);
// Strict: every eigenvalue must exceed kSupportCutoff. Support: log on the
// support, 0 on its complement.
HermitianOperator mat_log(const HermitianOperator& h,
                          SupportMode mode = SupportMode::kStrict);
HermitianOperator mat_inverse(const HermitianOperator& h,
                              SupportMode mode = SupportMode::kStrict);
// Negative eigenvalues above -1e-10 are clamped to zero.
HermitianOperator mat_sqrt(const HermitianOperator& h);

// Gradient of Q -> Tr(M exp Q): the Hermitian G with
// Tr(G H) = d/dt Tr(M exp(Q + tH)) at t = 0. In the eigenbasis of Q,
// G_ij = M_ij * phi(q_i, q_j) with phi the divided difference of exp.
HermitianOperator grad_trace_exp(const HermitianOperator& q,
                                 const DensityOperator& m);

// Same gradient from a precomputed spectrum of Q, scaled by exp(-shift)
// (shift = max eigenvalue keeps large Q finite). Accepts any Hermitian M.
CMatrix grad_trace_exp_shifted(const Spectrum& q, const CMatrix& m, double shift);

// Divided difference of exp, (e^a - e^b)/(a - b), e^a when |a-b| <= 1e-10.
double exp_divided_difference(double a, double b);

// Kronecker product.
CMatrix tensor(const CMatrix& a, const CMatrix& b);
HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

enum class Keep { kFirst, kSecond };

// Partial trace of an operator on C^d1 (x) C^d2, keeping one factor.
CMatrix partial_trace(const CMatrix& x, std::size_t d1, std::size_t d2, Keep keep);
DensityOperator partial_trace(const DensityOperator& x, std::size_t d1,
                              std::size_t d2, Keep keep);

// Fixed-basis transpose A -> A~.
CMatrix transpose_tilde(const CMatrix& a);
DensityOperator transpose_tilde(const DensityOperator& a);

}  // namespace entropy_duel
