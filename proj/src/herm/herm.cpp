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

#include "entropy_duel/herm.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

#include "entropy_duel/errors.hpp"
#include "entropy_duel/kernels.hpp"

namespace entropy_duel {
namespace {

using EigenRowMajor =
    Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

CMatrix hermitize(const CMatrix& m) {
  if (!m.is_square()) {
    throw ValidationError("HermitianOperator: matrix is " + std::to_string(m.rows()) +
                          "x" + std::to_string(m.cols()) + ", expected square");
  }
  if (!m.all_finite()) throw ValidationError("HermitianOperator: non-finite entry");
  CMatrix h = m;
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    h(i, i) = cplx(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      h(i, j) = avg;
      h(j, i) = std::conj(avg);
    }
  }
  return h;
}

Spectrum eig_of(const CMatrix& h) {
  const std::size_t n = h.rows();
  Eigen::Map<const EigenRowMajor> view(h.data(), static_cast<Eigen::Index>(n),
                                       static_cast<Eigen::Index>(n));
  const Eigen::MatrixXcd dense = view;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
  if (solver.info() != Eigen::Success) {
    throw DomainError("eig_hermitian: eigensolver did not converge");
  }
  Spectrum s;
  s.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  s.eigenvectors = CMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      s.eigenvectors(i, j) = solver.eigenvectors()(static_cast<Eigen::Index>(i),
                                                   static_cast<Eigen::Index>(j));
  return s;
}

}  // namespace

HermitianOperator::HermitianOperator(CMatrix m) : m_(hermitize(m)) {}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  return HermitianOperator(CMatrix(dim, dim));
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  return HermitianOperator(CMatrix::identity(dim));
}

HermitianOperator HermitianOperator::diagonal(std::span<const double> d) {
  return HermitianOperator(CMatrix::diagonal(d));
}

DensityOperator::DensityOperator(CMatrix m, double mass) : h_(std::move(m)), mass_(mass) {
  if (!(mass > 0.0) || !std::isfinite(mass)) {
    throw ValidationError("DensityOperator: mass must be positive and finite");
  }
  const double tr = h_.trace();
  if (std::abs(tr - mass) > kTraceTolerance) {
    throw ValidationError("DensityOperator: trace " + std::to_string(tr) +
                          " differs from mass " + std::to_string(mass));
  }
  const Spectrum s = eig_of(h_.matrix());
  if (s.eigenvalues.front() < kMinEigenvalue) {
    throw ValidationError("DensityOperator: negative eigenvalue " +
                          std::to_string(s.eigenvalues.front()));
  }
}

DensityOperator DensityOperator::unnormalized(CMatrix m) {
  HermitianOperator h(std::move(m));
  const double tr = h.trace();
  return DensityOperator(h.matrix(), tr);
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  return DensityOperator(CMatrix::identity(dim) * cplx(1.0 / static_cast<double>(dim)));
}

DensityOperator DensityOperator::pure(std::span<const cplx> psi) {
  const CMatrix v = CMatrix::column(psi);
  CMatrix p = v * v.adjoint();
  const double norm = p.trace().real();
  if (!(norm > 0.0)) throw ValidationError("DensityOperator::pure: zero vector");
  p *= cplx(1.0 / norm);
  return DensityOperator(std::move(p));
}

DensityOperator DensityOperator::scaled(double factor) const {
  return DensityOperator(matrix() * cplx(factor), mass_ * factor);
}

CMatrix Spectrum::reconstruct(const std::function<double(double)>& f) const {
  const std::size_t n = dim();
  std::vector<double> fv(n);
  for (std::size_t i = 0; i < n; ++i) fv[i] = f(eigenvalues[i]);
  // U diag(f) U^dagger: scale the columns of U, then multiply by U^dagger.
  CMatrix scaled = eigenvectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= fv[j];
  return scaled * eigenvectors.adjoint();
}

CMatrix Spectrum::reconstruct() const {
  return reconstruct([](double x) { return x; });
}

Spectrum eig_hermitian(const HermitianOperator& h) { return eig_of(h.matrix()); }

Spectrum eig_hermitian(const DensityOperator& rho) { return eig_of(rho.matrix()); }

HermitianOperator mat_fn(const HermitianOperator& h,
                         const std::function<double(double)>& f) {
  return HermitianOperator(eig_hermitian(h).reconstruct(f));
}

HermitianOperator mat_exp(const HermitianOperator& h) {
  return mat_fn(h, [](double x) { return std::exp(x); });
}

HermitianOperator mat_log(const HermitianOperator& h, SupportMode mode) {
  const Spectrum s = eig_hermitian(h);
  if (mode == SupportMode::kStrict && s.eigenvalues.front() <= kSupportCutoff) {
    throw DomainError("mat_log: eigenvalue " + std::to_string(s.eigenvalues.front()) +
                      " outside the domain of log");
  }
  return HermitianOperator(
      s.reconstruct([](double x) { return x > kSupportCutoff ? std::log(x) : 0.0; }));
}

HermitianOperator mat_inverse(const HermitianOperator& h, SupportMode mode) {
  const Spectrum s = eig_hermitian(h);
  if (mode == SupportMode::kStrict && s.eigenvalues.front() <= kSupportCutoff) {
    throw DomainError("mat_inverse: singular operator (eigenvalue " +
                      std::to_string(s.eigenvalues.front()) + ")");
  }
  return HermitianOperator(
      s.reconstruct([](double x) { return x > kSupportCutoff ? 1.0 / x : 0.0; }));
}

HermitianOperator mat_sqrt(const HermitianOperator& h) {
  const Spectrum s = eig_hermitian(h);
  if (s.eigenvalues.front() < DensityOperator::kMinEigenvalue) {
    throw DomainError("mat_sqrt: negative eigenvalue " +
                      std::to_string(s.eigenvalues.front()));
  }
  return HermitianOperator(
      s.reconstruct([](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }));
}

double exp_divided_difference(double a, double b) {
  const double d = a - b;
  if (std::abs(d) <= kDividedDifferenceThreshold) return std::exp(a);
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return std::exp(hi) * std::expm1(lo - hi) / (lo - hi);
}

CMatrix grad_trace_exp_shifted(const Spectrum& q, const CMatrix& m, double shift) {
  const std::size_t n = q.dim();
  if (m.rows() != n || m.cols() != n) {
    throw ValidationError("grad_trace_exp: dimension mismatch");
  }
  const CMatrix& u = q.eigenvectors;
  const CMatrix u_adj = u.adjoint();
  CMatrix rotated = u_adj * m * u;
  std::vector<double> weights(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      weights[i * n + j] =
          exp_divided_difference(q.eigenvalues[i] - shift, q.eigenvalues[j] - shift);
  kernels::active().scale_real(n * n, weights.data(), rotated.data(), rotated.data());
  return u * rotated * u_adj;
}

HermitianOperator grad_trace_exp(const HermitianOperator& q, const DensityOperator& m) {
  if (q.dim() != m.dim()) throw ValidationError("grad_trace_exp: dimension mismatch");
  return HermitianOperator(grad_trace_exp_shifted(eig_hermitian(q), m.matrix(), 0.0));
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) { return kron(a, b); }

HermitianOperator tensor(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(kron(a.matrix(), b.matrix()));
}

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(kron(a.matrix(), b.matrix()), a.mass() * b.mass());
}

CMatrix partial_trace(const CMatrix& x, std::size_t d1, std::size_t d2, Keep keep) {
  if (!x.is_square() || d1 == 0 || d2 == 0 || x.rows() != d1 * d2) {
    throw ValidationError("partial_trace: operator of size " + std::to_string(x.rows()) +
                          " is not " + std::to_string(d1) + "x" + std::to_string(d2));
  }
  if (keep == Keep::kFirst) {
    CMatrix out(d1, d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < d2; ++k) s += x(i * d2 + k, j * d2 + k);
        out(i, j) = s;
      }
    return out;
  }
  CMatrix out(d2, d2);
  for (std::size_t k = 0; k < d1; ++k)
    for (std::size_t i = 0; i < d2; ++i)
      for (std::size_t j = 0; j < d2; ++j) out(i, j) += x(k * d2 + i, k * d2 + j);
  return out;
}

DensityOperator partial_trace(const DensityOperator& x, std::size_t d1, std::size_t d2,
                              Keep keep) {
  return DensityOperator(partial_trace(x.matrix(), d1, d2, keep), x.mass());
}

CMatrix transpose_tilde(const CMatrix& a) { return a.transpose(); }

DensityOperator transpose_tilde(const DensityOperator& a) {
  return DensityOperator(a.matrix().transpose(), a.mass());
}

}  // namespace entropy_duel
