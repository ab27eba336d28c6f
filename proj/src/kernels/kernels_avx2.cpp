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

// Compiled with -mavx2 -mfma. Only reached through avx2_table() after the
// dispatcher has confirmed CPU support.

#include <immintrin.h>

#include "entropy_duel/kernels.hpp"

namespace entropy_duel::kernels {
namespace {

// One __m256d holds two interleaved complex doubles: [re0, im0, re1, im1].

inline __m256d load2(const cplx* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline void store2(cplx* p, __m256d v) {
  _mm256_storeu_pd(reinterpret_cast<double*>(p), v);
}

// (ar + i ai) * v for both lanes of v.
inline __m256d cmul_bcast(__m256d ar, __m256d ai, __m256d v) {
  const __m256d swapped = _mm256_permute_pd(v, 0b0101);
  return _mm256_fmaddsub_pd(ar, v, _mm256_mul_pd(ai, swapped));
}

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void gemm_avx2(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
               const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    cplx* crow = c + i * n;
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      __m256d acc0 = _mm256_setzero_pd();
      __m256d acc1 = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d ar = _mm256_set1_pd(arow[p].real());
        const __m256d ai = _mm256_set1_pd(arow[p].imag());
        const cplx* brow = b + p * n + j;
        acc0 = _mm256_add_pd(acc0, cmul_bcast(ar, ai, load2(brow)));
        acc1 = _mm256_add_pd(acc1, cmul_bcast(ar, ai, load2(brow + 2)));
      }
      store2(crow + j, acc0);
      store2(crow + j + 2, acc1);
    }
    for (; j + 2 <= n; j += 2) {
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t p = 0; p < k; ++p) {
        const __m256d ar = _mm256_set1_pd(arow[p].real());
        const __m256d ai = _mm256_set1_pd(arow[p].imag());
        acc = _mm256_add_pd(acc, cmul_bcast(ar, ai, load2(b + p * n + j)));
      }
      store2(crow + j, acc);
    }
    for (; j < n; ++j) {
      double re = 0.0;
      double im = 0.0;
      for (std::size_t p = 0; p < k; ++p) {
        const cplx x = arow[p];
        const cplx y = b[p * n + j];
        re += x.real() * y.real() - x.imag() * y.imag();
        im += x.real() * y.imag() + x.imag() * y.real();
      }
      crow[j] = cplx(re, im);
    }
  }
}

void scale_real_avx2(std::size_t n, const double* w, const cplx* x, cplx* y) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d wv = _mm256_set_pd(w[i + 1], w[i + 1], w[i], w[i]);
    store2(y + i, _mm256_mul_pd(wv, load2(x + i)));
  }
  for (; i < n; ++i) y[i] = cplx(w[i] * x[i].real(), w[i] * x[i].imag());
}

// Lane products: p = x*y = [xr yr, xi yi, ...], q = x*swap(y) = [xr yi, xi yr, ...].
// dotu = sum(p0 - p1) + i sum(q0 + q1); dotc = sum(p0 + p1) + i sum(q0 - q1).
template <bool Conj>
cplx dot_avx2(std::size_t n, const cplx* x, const cplx* y) {
  __m256d p = _mm256_setzero_pd();
  __m256d q = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = load2(x + i);
    const __m256d yv = load2(y + i);
    p = _mm256_fmadd_pd(xv, yv, p);
    q = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), q);
  }
  const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
  double re;
  double im;
  if constexpr (Conj) {
    re = hsum(p);
    im = hsum(_mm256_mul_pd(q, sign));
  } else {
    re = hsum(_mm256_mul_pd(p, sign));
    im = hsum(q);
  }
  for (; i < n; ++i) {
    const double xr = x[i].real();
    const double xi = Conj ? -x[i].imag() : x[i].imag();
    re += xr * y[i].real() - xi * y[i].imag();
    im += xr * y[i].imag() + xi * y[i].real();
  }
  return {re, im};
}

cplx dotu_avx2(std::size_t n, const cplx* x, const cplx* y) {
  return dot_avx2<false>(n, x, y);
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  return dot_avx2<true>(n, x, y);
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    store2(y + i, _mm256_add_pd(load2(y + i), cmul_bcast(ar, ai, load2(x + i))));
  }
  for (; i < n; ++i) {
    y[i] = cplx(y[i].real() + (alpha.real() * x[i].real() - alpha.imag() * x[i].imag()),
                y[i].imag() + (alpha.real() * x[i].imag() + alpha.imag() * x[i].real()));
  }
}

void scal_copy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) store2(y + i, cmul_bcast(ar, ai, load2(x + i)));
  for (; i < n; ++i) {
    y[i] = cplx(alpha.real() * x[i].real() - alpha.imag() * x[i].imag(),
                alpha.real() * x[i].imag() + alpha.imag() * x[i].real());
  }
}

}  // namespace

const KernelTable* avx2_table() {
  static const KernelTable table{"avx2",    gemm_avx2, scale_real_avx2,
                                 dotu_avx2, dotc_avx2, axpy_avx2,
                                 scal_copy_avx2};
  return &table;
}

}  // namespace entropy_duel::kernels
