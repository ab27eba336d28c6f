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

#include "entropy_duel/random.hpp"

#include <cmath>
#include <numbers>

#include "entropy_duel/errors.hpp"
#include "entropy_duel/kernels.hpp"

namespace entropy_duel {
namespace {

CMatrix gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  CMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

// Modified Gram-Schmidt on the columns, two passes.
CMatrix orthonormalize_columns(CMatrix v) {
  const std::size_t n = v.rows();
  const std::size_t m = v.cols();
  std::vector<cplx> col(n);
  std::vector<std::vector<cplx>> basis;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) col[i] = v(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const cplx proj = kernels::active().dotc(n, b.data(), col.data());
        kernels::active().axpy(n, -proj, b.data(), col.data());
      }
    }
    const double norm =
        std::sqrt(kernels::active().dotc(n, col.data(), col.data()).real());
    if (norm < 1e-12) throw DomainError("orthonormalize_columns: rank deficient draw");
    for (auto& z : col) z /= norm;
    basis.push_back(col);
  }
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < n; ++i) v(i, j) = basis[j][i];
  return v;
}

}  // namespace

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::index(std::size_t n) {
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

DensityOperator random_density(std::size_t dim, Rng& rng) {
  if (dim == 0) throw ValidationError("random_density: dim must be >= 1");
  const CMatrix g = gaussian_matrix(dim, dim, rng);
  CMatrix p = g * g.adjoint();
  p *= cplx(1.0 / p.trace().real());
  return DensityOperator(std::move(p));
}

HermitianOperator random_hermitian(std::size_t dim, double scale, Rng& rng) {
  if (dim == 0) throw ValidationError("random_hermitian: dim must be >= 1");
  CMatrix g = gaussian_matrix(dim, dim, rng);
  g *= cplx(scale);
  return HermitianOperator(std::move(g));
}

QuantumChannel random_channel(std::size_t dim_in, std::size_t dim_out,
                              std::size_t kraus_count, Rng& rng) {
  if (dim_in == 0 || dim_out == 0 || kraus_count == 0) {
    throw ValidationError("random_channel: dims and kraus_count must be >= 1");
  }
  if (kraus_count * dim_out < dim_in) {
    throw ValidationError("random_channel: kraus_count * dim_out must be >= dim_in");
  }
  const CMatrix v =
      orthonormalize_columns(gaussian_matrix(kraus_count * dim_out, dim_in, rng));
  std::vector<CMatrix> kraus;
  kraus.reserve(kraus_count);
  for (std::size_t k = 0; k < kraus_count; ++k) {
    CMatrix a(dim_out, dim_in);
    for (std::size_t i = 0; i < dim_out; ++i)
      for (std::size_t j = 0; j < dim_in; ++j) a(i, j) = v(k * dim_out + i, j);
    kraus.push_back(std::move(a));
  }
  return QuantumChannel(dim_in, dim_out, std::move(kraus));
}

CMatrix random_unitary(std::size_t dim, Rng& rng) {
  return orthonormalize_columns(gaussian_matrix(dim, dim, rng));
}

std::vector<double> random_simplex(std::size_t n, Rng& rng) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace entropy_duel
