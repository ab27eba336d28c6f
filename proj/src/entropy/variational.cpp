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

// BFGS ascent for max_Q Tr(rho Q) - mu ln[(1/mu) Tr(M e^Q)].
//
// The problem is solved in the eigenbasis of M restricted to its support, so
// the reduced M is a positive diagonal. Hermitian Q is stored as d^2 reals
// (diagonal, then sqrt(2) Re and sqrt(2) Im of the upper triangle), which
// makes the Euclidean inner product equal to Tr(A B). Iterates stay traceless.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "entropy/spectral.hpp"
#include "entropy_duel/errors.hpp"
#include "entropy_duel/quantum_entropy.hpp"

namespace entropy_duel::entropy {
namespace {

using Vec = std::vector<double>;
constexpr double kSqrt2 = 1.4142135623730951;

Vec to_vec(const CMatrix& h) {
  const std::size_t n = h.rows();
  Vec v(n * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) v[k++] = h(i, i).real();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      v[k++] = kSqrt2 * h(i, j).real();
      v[k++] = kSqrt2 * h(i, j).imag();
    }
  }
  return v;
}

CMatrix from_vec(const Vec& v, std::size_t n) {
  CMatrix h(n, n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) h(i, i) = v[k++];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx z(v[k] / kSqrt2, v[k + 1] / kSqrt2);
      k += 2;
      h(i, j) = z;
      h(j, i) = std::conj(z);
    }
  }
  return h;
}

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void remove_trace(Vec& v, std::size_t n) {
  double mean = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean += v[i];
  mean /= static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) v[i] -= mean;
}

// Objective and the Gibbs point P = mu M-weighted derivative of ln Tr(M e^Q).
struct Evaluation {
  double value = 0.0;
  CMatrix tilt;  // P(Q)
  double spectral_radius = 0.0;
};

Evaluation evaluate(const CMatrix& rho, const CMatrix& m, double mu, const CMatrix& q) {
  const Spectrum s = eig_hermitian(HermitianOperator(q));
  const std::vector<double> w = detail::diag_in_basis(s.eigenvectors, m);
  const double shift = s.eigenvalues.back();
  double z = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    z += std::max(w[i], 0.0) * std::exp(s.eigenvalues[i] - shift);
  }
  if (!(z > 0.0)) throw DomainError("variational entropy: Tr(M e^Q) vanishes");
  Evaluation e;
  e.value = trace_product(rho, q).real() - mu * (shift + std::log(z) - std::log(mu));
  e.tilt = grad_trace_exp_shifted(s, m, shift) * cplx(mu / z);
  e.spectral_radius = std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
  return e;
}

void require_shapes(const CMatrix& rho, const CMatrix& m, const HermitianOperator& q) {
  if (rho.rows() != q.dim() || m.rows() != q.dim()) {
    throw ValidationError("variational entropy: dimension mismatch");
  }
}

}  // namespace

double variational_objective(const CMatrix& rho, const CMatrix& m, double mu,
                             const HermitianOperator& q) {
  require_shapes(rho, m, q);
  return evaluate(rho, m, mu, q.matrix()).value;
}

HermitianOperator variational_gradient(const CMatrix& rho, const CMatrix& m, double mu,
                                       const HermitianOperator& q) {
  require_shapes(rho, m, q);
  return HermitianOperator(rho - evaluate(rho, m, mu, q.matrix()).tilt);
}

EntropyResult variational_relent(const DensityOperator& rho, const DensityOperator& m,
                                 const DivergenceSpec& spec) {
  const OptimOptions& opts = spec.optimizer;
  opts.validate();
  const double mu = spec.mu;
  if (!(mu > 0.0)) throw ValidationError("variational entropy: mu must be positive");
  if (rho.dim() != m.dim()) throw ValidationError("variational entropy: dimension mismatch");
  if (std::abs(rho.matrix().trace().real() - mu) > DensityOperator::kTraceTolerance) {
    throw ValidationError("variational entropy: Tr rho = " + std::to_string(rho.mass()) +
                          " differs from mu = " + std::to_string(mu));
  }

  EntropyResult res;
  const Spectrum ms = eig_hermitian(m);
  if (spec.effective_mode() == SupportMode::kStrict && ms.eigenvalues.front() <= kSupportCutoff) {
    throw DomainError("variational entropy: M is singular in strict mode");
  }
  if (auto w = support_violation(rho, m)) {
    res.value = ExtReal::plus_infinity();
    res.witness = std::move(w);
    res.converged = true;
    return res;
  }

  // Basis of supp M; the reduced M is diagonal.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < ms.dim(); ++i)
    if (ms.eigenvalues[i] > kSupportCutoff) keep.push_back(i);
  const std::size_t n = keep.size();
  CMatrix v(ms.dim(), n);
  std::vector<double> mdiag(n);
  for (std::size_t c = 0; c < n; ++c) {
    mdiag[c] = ms.eigenvalues[keep[c]];
    for (std::size_t r = 0; r < ms.dim(); ++r) v(r, c) = ms.eigenvectors(r, keep[c]);
  }
  const CMatrix rho_r = HermitianOperator(v.adjoint() * rho.matrix() * v).matrix();
  const CMatrix m_r = CMatrix::diagonal(mdiag);

  // Warm start ln(rho) - ln(M), with rho floored so the start sits inside the box.
  const double floor = mu * std::exp(-0.5 * opts.qbound);
  CMatrix q0 = eig_hermitian(HermitianOperator(rho_r)).reconstruct([&](double x) {
    return std::log(std::max(x, floor));
  });
  for (std::size_t i = 0; i < n; ++i) q0(i, i) -= std::log(mdiag[i]);
  Vec x = to_vec(HermitianOperator(q0).matrix());
  remove_trace(x, n);
  {
    const Spectrum s0 = eig_hermitian(HermitianOperator(from_vec(x, n)));
    const double radius =
        std::max(std::abs(s0.eigenvalues.front()), std::abs(s0.eigenvalues.back()));
    if (radius > 0.9 * opts.qbound) {
      for (double& xi : x) xi *= 0.9 * opts.qbound / radius;
    }
  }

  const std::size_t dim = x.size();
  auto gradient_of = [&](const Evaluation& e) {
    // Minimizing -f, so the gradient is P - rho.
    Vec g = to_vec(e.tilt - rho_r);
    remove_trace(g, n);
    return g;
  };

  Evaluation cur = evaluate(rho_r, m_r, mu, from_vec(x, n));
  Vec g = gradient_of(cur);
  std::vector<double> h(dim * dim, 0.0);
  auto reset_h = [&](double scale) {
    std::fill(h.begin(), h.end(), 0.0);
    for (std::size_t i = 0; i < dim; ++i) h[i * dim + i] = scale;
  };
  reset_h(1.0);
  bool h_is_scaled_identity = true;
  bool first_update = true;
  res.history.push_back(cur.value);

  const double eps = std::numeric_limits<double>::epsilon();
  Vec d(dim), xt(dim), s(dim), y(dim), hy(dim);
  int it = 0;
  for (; it < opts.max_iters; ++it) {
    if (std::sqrt(dot(g, g)) <= opts.grad_tol) break;
    for (std::size_t i = 0; i < dim; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < dim; ++j) acc += h[i * dim + j] * g[j];
      d[i] = -acc;
    }
    double slope = dot(g, d);
    if (!(slope < 0.0)) {
      reset_h(1.0);
      h_is_scaled_identity = true;
      for (std::size_t i = 0; i < dim; ++i) d[i] = -g[i];
      slope = dot(g, d);
    }

    double t = opts.step_init;
    if (it == 0) t = std::min(t, 1.0 / std::max(1.0, std::sqrt(dot(d, d))));
    bool accepted = false;
    Evaluation trial;
    for (int ls = 0; ls < 60; ++ls, t *= 0.5) {
      for (std::size_t i = 0; i < dim; ++i) xt[i] = x[i] + t * d[i];
      const CMatrix qt = from_vec(xt, n);
      trial = evaluate(rho_r, m_r, mu, qt);
      if (trial.spectral_radius > opts.qbound) continue;
      const double slack = 4.0 * eps * std::max(1.0, std::abs(cur.value));
      if (-trial.value <= -cur.value + 1e-4 * t * slope ||
          (-trial.value <= -cur.value + slack && t * std::sqrt(dot(d, d)) < 1e-6)) {
        accepted = trial.value >= cur.value - slack;
        break;
      }
    }
    if (!accepted) {
      if (h_is_scaled_identity) break;
      reset_h(1.0);
      h_is_scaled_identity = true;
      continue;
    }

    const Vec gt = gradient_of(trial);
    for (std::size_t i = 0; i < dim; ++i) {
      s[i] = xt[i] - x[i];
      y[i] = gt[i] - g[i];
    }
    x = xt;
    g = gt;
    cur = std::move(trial);
    res.history.push_back(cur.value);

    const double sy = dot(s, y);
    if (sy > 1e-12 * std::sqrt(dot(s, s) * dot(y, y))) {
      if (first_update) {
        reset_h(sy / dot(y, y));
        first_update = false;
      }
      for (std::size_t i = 0; i < dim; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < dim; ++j) acc += h[i * dim + j] * y[j];
        hy[i] = acc;
      }
      const double yhy = dot(y, hy);
      const double a = (sy + yhy) / (sy * sy);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          h[i * dim + j] += a * s[i] * s[j] - (hy[i] * s[j] + s[i] * hy[j]) / sy;
      h_is_scaled_identity = false;
    }
  }

  res.iterations = it;
  res.grad_norm = std::sqrt(dot(g, g));
  res.converged = res.grad_norm <= opts.grad_tol;
  res.value = ExtReal(cur.value);
  res.maximizer = HermitianOperator(v * from_vec(x, n) * v.adjoint());
  return res;
}

ScalingCheck scaling_check(const DensityOperator& rho, const DensityOperator& m, double mu,
                           const OptimOptions& opts) {
  if (!(mu > 0.0)) throw ValidationError("scaling_check: mu must be positive");
  const EntropyResult lhs = variational_relent(rho, m, DivergenceSpec::variational(mu, opts));
  const EntropyResult rhs = variational_relent(rho.scaled(1.0 / mu), m.scaled(1.0 / mu),
                                               DivergenceSpec::variational(1.0, opts));
  ScalingCheck out;
  out.lhs = lhs.value.to_double();
  out.rhs = mu * rhs.value.to_double();
  out.converged = lhs.converged && rhs.converged;
  return out;
}

}  // namespace entropy_duel::entropy
