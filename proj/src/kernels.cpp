// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincat/kernels.hpp"

#include <stdexcept>

namespace spincat::kernels {

namespace scalar {

cplx dotc(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ar * bi - ai * br;
  }
  return {re, im};
}

cplx dotu(const cplx* a, const cplx* b, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br - ai * bi;
    im += ar * bi + ai * br;
  }
  return {re, im};
}

double norm_sq(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += a[i].real() * a[i].real() + a[i].imag() * a[i].imag();
  }
  return acc;
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const double cr = alpha.real(), ci = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx(cr * xr - ci * xi, cr * xi + ci * xr);
  }
}

void scale(cplx alpha, cplx* x, std::size_t n) {
  const double cr = alpha.real(), ci = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    x[i] = cplx(cr * xr - ci * xi, cr * xi + ci * xr);
  }
}

void hadamard(const cplx* a, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    y[i] = cplx(ar * yr - ai * yi, ar * yi + ai * yr);
  }
}

}  // namespace scalar

namespace {

constexpr Ops kScalarOps{scalar::dotc,  scalar::dotu,  scalar::norm_sq,
                         scalar::axpy,  scalar::scale, scalar::hadamard,
                         "scalar"};

#ifdef SPINCAT_HAVE_AVX2_KERNELS
constexpr Ops kAvx2Ops{avx2::dotc, avx2::dotu,  avx2::norm_sq,
                       avx2::axpy, avx2::scale, avx2::hadamard,
                       "avx2"};

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2") != 0; }
#endif

Backend detect_backend() {
#ifdef SPINCAT_HAVE_AVX2_KERNELS
  if (cpu_has_avx2()) return Backend::Avx2;
#endif
  return Backend::Scalar;
}

Backend g_backend = detect_backend();

}  // namespace

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#ifdef SPINCAT_HAVE_AVX2_KERNELS
      return cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return g_backend; }

void force_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument("requested kernel backend not supported on this CPU");
  }
  g_backend = b;
}

const Ops& ops() {
#ifdef SPINCAT_HAVE_AVX2_KERNELS
  if (g_backend == Backend::Avx2) return kAvx2Ops;
#endif
  return kScalarOps;
}

void matvec(const cplx* m, std::size_t rows, std::size_t cols, const cplx* x,
            cplx* y) {
  const Ops& k = ops();
  for (std::size_t i = 0; i < rows; ++i) {
    y[i] = k.dotu(m + i * cols, x, cols);
  }
}

}  // namespace spincat::kernels
