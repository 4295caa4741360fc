// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Complex double-precision kernels behind the dense linear algebra used by
// every hot loop in the library. A scalar reference implementation always
// exists; an AVX2 variant is selected at runtime when the CPU supports it.
// The two backends are equivalence-tested against each other.

#pragma once

#include <complex>
#include <cstddef>

namespace spincat::kernels {

using cplx = std::complex<double>;

/// Dispatch table for one backend.
struct Ops {
  // sum conj(a_i) * b_i
  cplx (*dotc)(const cplx* a, const cplx* b, std::size_t n);
  // sum a_i * b_i (no conjugation; used for matrix rows)
  cplx (*dotu)(const cplx* a, const cplx* b, std::size_t n);
  // sum |a_i|^2
  double (*norm_sq)(const cplx* a, std::size_t n);
  // y_i += alpha * x_i
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // x_i *= alpha
  void (*scale)(cplx alpha, cplx* x, std::size_t n);
  // y_i *= a_i (elementwise; applies diagonal phase factors)
  void (*hadamard)(const cplx* a, cplx* y, std::size_t n);
  const char* name;
};

enum class Backend { Scalar, Avx2 };

bool backend_supported(Backend b);

/// Backend chosen at startup: AVX2 if the CPU has it, scalar otherwise.
Backend active_backend();

/// Force a backend (testing hook). Throws std::invalid_argument if the CPU
/// does not support it.
void force_backend(Backend b);

/// Dispatch table of the active backend.
const Ops& ops();

/// Scalar reference implementations, always available.
namespace scalar {
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
cplx dotu(const cplx* a, const cplx* b, std::size_t n);
double norm_sq(const cplx* a, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale(cplx alpha, cplx* x, std::size_t n);
void hadamard(const cplx* a, cplx* y, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SPINCAT_HAVE_AVX2_KERNELS 1
namespace avx2 {
cplx dotc(const cplx* a, const cplx* b, std::size_t n);
cplx dotu(const cplx* a, const cplx* b, std::size_t n);
double norm_sq(const cplx* a, std::size_t n);
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);
void scale(cplx alpha, cplx* x, std::size_t n);
void hadamard(const cplx* a, cplx* y, std::size_t n);
}  // namespace avx2
#endif

/// y = M x for a dense row-major matrix (rows x cols).
void matvec(const cplx* m, std::size_t rows, std::size_t cols, const cplx* x,
            cplx* y);

}  // namespace spincat::kernels
