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

// Complex double inner-loop kernels. Every kernel has a scalar reference
// implementation; an AVX2/FMA variant is compiled on x86-64 and selected at
// runtime when the CPU supports it. All buffers are row-major and may be
// unaligned. Output buffers must not alias inputs unless noted.

#include <complex>
#include <cstddef>

namespace entropy_duel::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  const char* name;

  // c[m x n] = a[m x k] * b[k x n]
  void (*gemm)(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
               const cplx* b, cplx* c);

  // y[i] = w[i] * x[i] with real weights. y may alias x.
  void (*scale_real)(std::size_t n, const double* w, const cplx* x, cplx* y);

  // sum x[i] * y[i]
  cplx (*dotu)(std::size_t n, const cplx* x, const cplx* y);

  // sum conj(x[i]) * y[i]
  cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);

  // y += alpha * x
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);

  // y = alpha * x
  void (*scal_copy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);
};

const KernelTable& scalar_table();

// nullptr when the AVX2 variant was not compiled in.
const KernelTable* avx2_table();

bool cpu_supports_avx2();

// Table used by the library. Resolved once: AVX2 when compiled and supported,
// unless ENTROPY_DUEL_KERNELS=scalar is set in the environment.
const KernelTable& active();

}  // namespace entropy_duel::kernels
