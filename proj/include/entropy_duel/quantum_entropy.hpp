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

// Quantum relative entropies on positive operators of arbitrary trace.
//
//   umegaki      Tr rho (ln rho - ln sigma)
//   bs           Tr rho^1/2 ln(rho^1/2 sigma^-1 rho^1/2) rho^1/2
//   gamma        Tr sqrt(sigma) g(L^-1_{sigma_g} R_{rho_g}) sqrt(sigma) with
//                rho_g = gamma^-1/2 rho gamma^-1/2 (same for sigma)
//   variational  max_Q Tr(rho Q) - mu ln[(1/mu) Tr(M e^Q)],  mu = Tr rho
//
// The variational entropy is the conjugate of the quantum log-partition
// mu ln[(1/mu) Tr(M e^Q)]. It is computed by quasi-Newton ascent over
// Hermitian Q; the objective is not concave in Q but Q = ln W maps it onto a
// concave problem in W > 0, so every stationary point is the global maximum.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "entropy_duel/ext_real.hpp"
#include "entropy_duel/herm.hpp"

namespace entropy_duel::entropy {

enum class DivergenceKind { kUmegaki, kBs, kGamma, kVariational };

const char* to_string(DivergenceKind kind);
// Throws ValidationError for unknown names.
DivergenceKind parse_kind(const std::string& name);

struct OptimOptions {
  int max_iters = 500;
  double grad_tol = 1e-8;
  double step_init = 1.0;
  double qbound = 40.0;

  void validate() const;
};

// Scalar g for the gamma kind; g(1) must vanish.
class GFunction {
 public:
  static GFunction r_ln_r();
  // Piecewise-linear interpolation of a table with increasing abscissae.
  // Evaluation outside [xs.front(), xs.back()] throws DomainError.
  static GFunction from_table(std::vector<double> xs, std::vector<double> ys);

  const std::string& name() const noexcept { return name_; }
  double operator()(double r) const { return fn_(r); }

 private:
  GFunction(std::string name, std::function<double(double)> fn);
  std::string name_;
  std::function<double(double)> fn_;
};

struct DivergenceSpec {
  DivergenceKind kind = DivergenceKind::kUmegaki;
  std::optional<DensityOperator> gamma_ref;
  GFunction g = GFunction::r_ln_r();
  double mu = 1.0;
  OptimOptions optimizer;
  // Unset means the per-kind default: support mode for umegaki and
  // variational, strict for bs and gamma.
  std::optional<SupportMode> mode;

  static DivergenceSpec umegaki();
  static DivergenceSpec bs();
  static DivergenceSpec gamma(DensityOperator gamma_ref, GFunction g = GFunction::r_ln_r());
  static DivergenceSpec variational(double mu = 1.0, OptimOptions opts = {});

  SupportMode effective_mode() const;
};

struct EntropyResult {
  ExtReal value;
  std::optional<HermitianOperator> maximizer;  // Q* for the variational kind
  bool converged = true;
  double grad_norm = 0.0;
  int iterations = 0;
  std::vector<double> history;              // objective at accepted iterates
  std::optional<std::vector<cplx>> witness;  // kernel vector of sigma seen by rho
};

// Returns a unit vector in ker(sigma) carrying weight of rho above
// 1e-10 * Tr rho, or nullopt if supp rho lies inside supp sigma.
std::optional<std::vector<cplx>> support_violation(const DensityOperator& rho,
                                                   const DensityOperator& sigma);

ExtReal umegaki(const DensityOperator& rho, const DensityOperator& sigma,
                SupportMode mode = SupportMode::kSupport);

ExtReal bs_relent(const DensityOperator& rho, const DensityOperator& sigma,
                  SupportMode mode = SupportMode::kStrict);

// Sum_ij g(r_j / s_i) |<u_i| sqrt(sigma) |v_j>|^2 over the eigenpairs
// sigma_g u_i = s_i u_i, rho_g v_j = r_j v_j. gamma and sigma_g must be
// positive definite (DomainError otherwise).
ExtReal gamma_relent(const DensityOperator& rho, const DensityOperator& sigma,
                     const DensityOperator& gamma, const GFunction& g = GFunction::r_ln_r());

// mu ln[(1/mu) Tr(M exp Q)], with a max shift on the spectrum of Q.
double log_trace_exp(const DensityOperator& m, const HermitianOperator& q, double mu = 1.0);

struct QuantumMinimax {
  double value = 0.0;
  DensityOperator m_star;
};

// min over states M of mu ln[(1/mu) Tr(M e^Q)] = mu (q_min - ln mu), attained
// at the projector on the first eigenvector of the ascending spectrum.
QuantumMinimax quantum_minimax_estimate(const HermitianOperator& q, double mu = 1.0);

// Objective Tr(rho Q) - mu ln[(1/mu) Tr(M e^Q)] and its gradient
// rho - mu G / Tr(M e^Q), G = grad_trace_exp(Q, M).
double variational_objective(const CMatrix& rho, const CMatrix& m, double mu,
                             const HermitianOperator& q);
HermitianOperator variational_gradient(const CMatrix& rho, const CMatrix& m, double mu,
                                       const HermitianOperator& q);

// Requires |Tr rho - spec.mu| <= 1e-10. In support mode the problem is
// restricted to supp M (+infinity with a witness if rho leaves it); strict
// mode requires M positive definite. Q* is reported with Tr Q* = 0 and
// embedded back into the full space (zero off supp M).
EntropyResult variational_relent(const DensityOperator& rho, const DensityOperator& m,
                                 const DivergenceSpec& spec);

struct ScalingCheck {
  double lhs = 0.0;  // R_mu(rho; M)
  double rhs = 0.0;  // mu R_1(rho/mu; M/mu)
  bool converged = false;
};

// Tr rho must equal mu.
ScalingCheck scaling_check(const DensityOperator& rho, const DensityOperator& m, double mu,
                           const OptimOptions& opts = {});

// Dispatch on spec.kind. For the variational kind mu is taken from Tr rho.
EntropyResult relent_result(const DivergenceSpec& spec, const DensityOperator& rho,
                            const DensityOperator& sigma);
ExtReal relent(const DivergenceSpec& spec, const DensityOperator& rho,
               const DensityOperator& sigma);

}  // namespace entropy_duel::entropy
