// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace spincat {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Value type; all operations are pure.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  cplx* data() { return data_.data(); }
  const cplx* data() const { return data_.data(); }
  const cplx* row(std::size_t i) const { return data_.data() + i * cols_; }

  CMatrix adjoint() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(cplx s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  /// y = M x
  std::vector<cplx> apply(const std::vector<cplx>& x) const;

  /// max_ij |M_ij - conj(M_ji)|
  double hermiticity_defect() const;

  /// max_ij |M_ij|
  double max_abs() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<cplx> data_;
};

/// Eigendecomposition of a Hermitian matrix: H = V diag(values) V^dagger,
/// eigenvalues ascending, eigenvectors in the columns of V.
struct HermEigen {
  std::vector<double> values;
  CMatrix vectors;
};

/// Hermitian eigendecomposition. Throws EigenFailure if the input is not
/// Hermitian (defect above `hermitian_tol` relative to the matrix scale) or
/// the solver does not converge.
HermEigen eigh(const CMatrix& m, double hermitian_tol = 1e-10);

}  // namespace spincat
