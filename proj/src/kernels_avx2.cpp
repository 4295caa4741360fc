// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// AVX2+FMA variants of the complex kernels. Each __m256d holds two
// complex<double> values as [re0, im0, re1, im1]. This translation unit is
// compiled with -mavx2 -mfma; callers reach it only through the runtime
// dispatch in kernels.cpp.

#include "spincat/kernels.hpp"

#ifdef SPINCAT_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace spincat::kernels::avx2 {

namespace {

inline const double* as_doubles(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// [re0, im0, re1, im1] -> [im0, re0, im1, re1]
inline __m256d swap_halves(__m256d v) { return _mm256_permute_pd(v, 0x5); }
// duplicate real parts: [re0, re0, re1, re1]
inline __m256d dup_re(__m256d v) { return _mm256_movedup_pd(v); }
// duplicate imaginary parts: [im0, im0, im1, im1]
inline __m256d dup_im(__m256d v) { return _mm256_permute_pd(v, 0xF); }

// packed complex multiply x * y
inline __m256d cmul(__m256d x, __m256d y) {
  __m256d t = _mm256_mul_pd(swap_halves(x), dup_im(y));
  return _mm256_fmaddsub_pd(x, dup_re(y), t);
}

// packed x * conj(y)
inline __m256d cmul_conj(__m256d x, __m256d y) {
  __m256d t = _mm256_mul_pd(swap_halves(x), dup_im(y));
  return _mm256_fmsubadd_pd(x, dup_re(y), t);
}

// sum the two complex lanes of an accumulator
inline cplx reduce(__m256d acc) {
  __m128d lo = _mm256_castpd256_pd128(acc);
  __m128d hi = _mm256_extractf128_pd(acc, 1);
  __m128d s = _mm_add_pd(lo, hi);
  alignas(16) double out[2];
  _mm_store_pd(out, s);
  return {out[0], out[1]};
}

}  // namespace

cplx dotu(const cplx* a, const cplx* b, std::size_t n) {
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc = _mm256_add_pd(acc, cmul(va, vb));
  }
  cplx r = reduce(acc);
  for (; i < n; ++i) r += a[i] * b[i];
  return r;
}

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
  // conj(a)*b == conj(a * conj(b)); accumulate a*conj(b), conjugate once.
  const double* pa = as_doubles(a);
  const double* pb = as_doubles(b);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    acc = _mm256_add_pd(acc, cmul_conj(va, vb));
  }
  cplx r = std::conj(reduce(acc));
  for (; i < n; ++i) r += std::conj(a[i]) * b[i];
  return r;
}

double norm_sq(const cplx* a, std::size_t n) {
  const double* pa = as_doubles(a);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_fmadd_pd(va, va, acc);
  }
  cplx partial = reduce(acc);
  double r = partial.real() + partial.imag();
  for (; i < n; ++i) r += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  return r;
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double* px = as_doubles(x);
  double* py = as_doubles(y);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    __m256d t = _mm256_mul_pd(swap_halves(vx), ai);
    __m256d p = _mm256_fmaddsub_pd(vx, ar, t);
    _mm256_storeu_pd(py + 2 * i, _mm256_add_pd(vy, p));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale(cplx alpha, cplx* x, std::size_t n) {
  double* px = as_doubles(x);
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(px + 2 * i);
    __m256d t = _mm256_mul_pd(swap_halves(vx), ai);
    _mm256_storeu_pd(px + 2 * i, _mm256_fmaddsub_pd(vx, ar, t));
  }
  for (; i < n; ++i) x[i] *= alpha;
}

void hadamard(const cplx* a, cplx* y, std::size_t n) {
  const double* pa = as_doubles(a);
  double* py = as_doubles(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vy = _mm256_loadu_pd(py + 2 * i);
    _mm256_storeu_pd(py + 2 * i, cmul(vy, va));
  }
  for (; i < n; ++i) y[i] *= a[i];
}

}  // namespace spincat::kernels::avx2

#endif  // SPINCAT_HAVE_AVX2_KERNELS
