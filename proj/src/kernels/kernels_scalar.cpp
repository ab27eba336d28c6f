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

#include "entropy_duel/kernels.hpp"

namespace entropy_duel::kernels {
namespace {

// Real arithmetic spelled out so the reference does not depend on the
// library's complex multiply (which adds NaN/Inf recovery branches).

void gemm_scalar(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
                 const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t j = 0; j < n; ++j) crow[j] = cplx(0.0, 0.0);
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[i * k + p].real();
      const double ai = a[i * k + p].imag();
      const cplx* brow = b + p * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real();
        const double bi = brow[j].imag();
        crow[j] = cplx(crow[j].real() + (ar * br - ai * bi),
                       crow[j].imag() + (ar * bi + ai * br));
      }
    }
  }
}

void scale_real_scalar(std::size_t n, const double* w, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = cplx(w[i] * x[i].real(), w[i] * x[i].imag());
  }
}

cplx dotu_scalar(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = cplx(y[i].real() + (ar * x[i].real() - ai * x[i].imag()),
                y[i].imag() + (ar * x[i].imag() + ai * x[i].real()));
  }
}

void scal_copy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = cplx(ar * x[i].real() - ai * x[i].imag(),
                ar * x[i].imag() + ai * x[i].real());
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar",     gemm_scalar, scale_real_scalar,
                                 dotu_scalar,  dotc_scalar, axpy_scalar,
                                 scal_copy_scalar};
  return table;
}

}  // namespace entropy_duel::kernels
