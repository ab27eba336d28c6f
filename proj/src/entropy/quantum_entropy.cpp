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

#include "entropy_duel/quantum_entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "entropy/spectral.hpp"
#include "entropy_duel/errors.hpp"

namespace entropy_duel::entropy {
namespace {

void require_same_dim(const DensityOperator& a, const DensityOperator& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw ValidationError(std::string(op) + ": dimension mismatch (" +
                          std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

void require_definite(const Spectrum& s, const char* op, const char* what) {
  if (s.eigenvalues.front() <= kSupportCutoff) {
    throw DomainError(std::string(op) + ": " + what + " is not positive definite (eigenvalue " +
                      std::to_string(s.eigenvalues.front()) + ")");
  }
}

}  // namespace

const char* to_string(DivergenceKind kind) {
  switch (kind) {
    case DivergenceKind::kUmegaki: return "umegaki";
    case DivergenceKind::kBs: return "bs";
    case DivergenceKind::kGamma: return "gamma";
    case DivergenceKind::kVariational: return "variational";
  }
  return "unknown";
}

DivergenceKind parse_kind(const std::string& name) {
  if (name == "umegaki") return DivergenceKind::kUmegaki;
  if (name == "bs") return DivergenceKind::kBs;
  if (name == "gamma") return DivergenceKind::kGamma;
  if (name == "variational") return DivergenceKind::kVariational;
  throw ValidationError("unknown divergence kind '" + name +
                        "' (expected umegaki, bs, gamma or variational)");
}

void OptimOptions::validate() const {
  if (max_iters < 1) throw ValidationError("optimizer: max_iters must be >= 1");
  if (!(grad_tol > 0.0)) throw ValidationError("optimizer: grad_tol must be positive");
  if (!(step_init > 0.0)) throw ValidationError("optimizer: step_init must be positive");
  if (!(qbound > 0.0)) throw ValidationError("optimizer: qbound must be positive");
}

GFunction::GFunction(std::string name, std::function<double(double)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {}

GFunction GFunction::r_ln_r() {
  return GFunction("r_ln_r", [](double r) { return r > 0.0 ? r * std::log(r) : 0.0; });
}

GFunction GFunction::from_table(std::vector<double> xs, std::vector<double> ys) {
  if (xs.size() < 2 || xs.size() != ys.size()) {
    throw ValidationError("g table: need at least two (r, g) pairs of equal length");
  }
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
      throw ValidationError("g table: non-finite entry at index " + std::to_string(i));
    }
    if (i > 0 && !(xs[i] > xs[i - 1])) {
      throw ValidationError("g table: abscissae must be strictly increasing");
    }
  }
  auto interp = [xs = std::move(xs), ys = std::move(ys)](double r) {
    if (r < xs.front() || r > xs.back()) {
      throw DomainError("g table: argument " + std::to_string(r) + " outside [" +
                        std::to_string(xs.front()) + ", " + std::to_string(xs.back()) + "]");
    }
    const auto it = std::upper_bound(xs.begin(), xs.end(), r);
    const std::size_t hi = std::min<std::size_t>(
        static_cast<std::size_t>(it - xs.begin()), xs.size() - 1);
    const std::size_t lo = hi - 1;
    const double t = (r - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
  };
  GFunction g("table", std::move(interp));
  bool has_one = true;
  double g1 = 0.0;
  try {
    g1 = g(1.0);
  } catch (const DomainError&) {
    has_one = false;
  }
  if (has_one && std::abs(g1) > 1e-12) {
    throw ValidationError("g table: g(1) = " + std::to_string(g1) + ", expected 0");
  }
  return g;
}

DivergenceSpec DivergenceSpec::umegaki() { return DivergenceSpec{}; }

DivergenceSpec DivergenceSpec::bs() {
  DivergenceSpec s;
  s.kind = DivergenceKind::kBs;
  return s;
}

DivergenceSpec DivergenceSpec::gamma(DensityOperator gamma_ref, GFunction g) {
  DivergenceSpec s;
  s.kind = DivergenceKind::kGamma;
  s.gamma_ref = std::move(gamma_ref);
  s.g = std::move(g);
  return s;
}

DivergenceSpec DivergenceSpec::variational(double mu, OptimOptions opts) {
  DivergenceSpec s;
  s.kind = DivergenceKind::kVariational;
  s.mu = mu;
  s.optimizer = opts;
  return s;
}

SupportMode DivergenceSpec::effective_mode() const {
  if (mode) return *mode;
  switch (kind) {
    case DivergenceKind::kUmegaki:
    case DivergenceKind::kVariational: return SupportMode::kSupport;
    case DivergenceKind::kBs:
    case DivergenceKind::kGamma: return SupportMode::kStrict;
  }
  return SupportMode::kStrict;
}

std::optional<std::vector<cplx>> support_violation(const DensityOperator& rho,
                                                   const DensityOperator& sigma) {
  require_same_dim(rho, sigma, "support_violation");
  const Spectrum s = eig_hermitian(sigma);
  const std::vector<double> w = detail::diag_in_basis(s.eigenvectors, rho.matrix());
  double leak = 0.0;
  std::size_t worst = 0;
  double worst_w = -1.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (s.eigenvalues[i] > kSupportCutoff) continue;
    leak += w[i];
    if (w[i] > worst_w) {
      worst_w = w[i];
      worst = i;
    }
  }
  if (leak <= 1e-10 * rho.mass()) return std::nullopt;
  std::vector<cplx> v(s.dim());
  for (std::size_t r = 0; r < s.dim(); ++r) v[r] = s.eigenvectors(r, worst);
  return v;
}

ExtReal umegaki(const DensityOperator& rho, const DensityOperator& sigma, SupportMode mode) {
  require_same_dim(rho, sigma, "umegaki");
  const Spectrum ss = eig_hermitian(sigma);
  if (mode == SupportMode::kStrict) require_definite(ss, "umegaki", "sigma");
  if (support_violation(rho, sigma)) return ExtReal::plus_infinity();

  const std::vector<double> w = detail::diag_in_basis(ss.eigenvectors, rho.matrix());
  double cross = 0.0;
  for (std::size_t i = 0; i < ss.dim(); ++i) {
    if (ss.eigenvalues[i] > kSupportCutoff) cross += w[i] * std::log(ss.eigenvalues[i]);
  }
  double self = 0.0;
  for (double r : eig_hermitian(rho).eigenvalues) {
    if (r > kSupportCutoff) self += r * std::log(r);
  }
  return ExtReal(self - cross);
}

ExtReal bs_relent(const DensityOperator& rho, const DensityOperator& sigma, SupportMode mode) {
  require_same_dim(rho, sigma, "bs_relent");
  const Spectrum ss = eig_hermitian(sigma);
  if (mode == SupportMode::kStrict) require_definite(ss, "bs_relent", "sigma");
  if (support_violation(rho, sigma)) return ExtReal::plus_infinity();

  const CMatrix sigma_inv =
      ss.reconstruct([](double x) { return x > kSupportCutoff ? 1.0 / x : 0.0; });
  const CMatrix root = detail::psd_sqrt(eig_hermitian(rho));
  const Spectrum x = eig_hermitian(HermitianOperator(root * sigma_inv * root));
  // Tr rho^1/2 ln(X) rho^1/2 = Tr rho ln X, with ln taken on supp X = supp rho.
  const std::vector<double> w = detail::diag_in_basis(x.eigenvectors, rho.matrix());
  double value = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (x.eigenvalues[k] > kSupportCutoff) value += w[k] * std::log(x.eigenvalues[k]);
  }
  return ExtReal(value);
}

ExtReal gamma_relent(const DensityOperator& rho, const DensityOperator& sigma,
                     const DensityOperator& gamma, const GFunction& g) {
  require_same_dim(rho, sigma, "gamma_relent");
  require_same_dim(rho, gamma, "gamma_relent");
  const Spectrum sg = eig_hermitian(gamma);
  require_definite(sg, "gamma_relent", "gamma");
  const CMatrix g_inv_half = detail::inverse_sqrt(sg);

  const Spectrum s = eig_hermitian(HermitianOperator(sandwich(g_inv_half, sigma.matrix())));
  require_definite(s, "gamma_relent", "rescaled sigma");
  const Spectrum r = eig_hermitian(HermitianOperator(sandwich(g_inv_half, rho.matrix())));

  const CMatrix root_sigma = detail::psd_sqrt(eig_hermitian(sigma));
  const CMatrix a = s.eigenvectors.adjoint() * root_sigma * r.eigenvectors;
  double value = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < r.dim(); ++j) {
      const double rj = std::max(r.eigenvalues[j], 0.0);
      value += g(rj / s.eigenvalues[i]) * std::norm(a(i, j));
    }
  }
  if (!std::isfinite(value)) throw DomainError("gamma_relent: non-finite value");
  return ExtReal(value);
}

EntropyResult relent_result(const DivergenceSpec& spec, const DensityOperator& rho,
                            const DensityOperator& sigma) {
  const SupportMode mode = spec.effective_mode();
  EntropyResult res;
  switch (spec.kind) {
    case DivergenceKind::kUmegaki:
      res.value = umegaki(rho, sigma, mode);
      break;
    case DivergenceKind::kBs:
      res.value = bs_relent(rho, sigma, mode);
      break;
    case DivergenceKind::kGamma:
      if (!spec.gamma_ref) throw ValidationError("gamma divergence requires gamma_ref");
      res.value = gamma_relent(rho, sigma, *spec.gamma_ref, spec.g);
      break;
    case DivergenceKind::kVariational: {
      DivergenceSpec local = spec;
      local.mu = rho.mass();
      return variational_relent(rho, sigma, local);
    }
  }
  if (res.value.is_infinite()) res.witness = support_violation(rho, sigma);
  return res;
}

ExtReal relent(const DivergenceSpec& spec, const DensityOperator& rho,
               const DensityOperator& sigma) {
  return relent_result(spec, rho, sigma).value;
}

}  // namespace entropy_duel::entropy
