// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincat/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spincat/kernels.hpp"

namespace spincat {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      m(j, i) = std::conj((*this)(i, j));
    }
  }
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  kernels::ops().scale(s, data_.data(), data_.size());
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix dimension mismatch");
  }
  CMatrix c(a.rows(), b.cols());
  // ikj order: C_i. accumulates A_ik * B_k. row by row.
  const auto& k = kernels::ops();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx* ci = c.data() + i * c.cols();
    for (std::size_t kk = 0; kk < a.cols(); ++kk) {
      const cplx aik = a(i, kk);
      if (aik == cplx(0.0)) continue;
      k.axpy(aik, b.row(kk), ci, b.cols());
    }
  }
  return c;
}

std::vector<cplx> CMatrix::apply(const std::vector<cplx>& x) const {
  if (x.size() != cols_) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  std::vector<cplx> y(rows_);
  kernels::matvec(data_.data(), rows_, cols_, x.data(), y.data());
  return y;
}

double CMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      worst = std::max(worst,
                       std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

double CMatrix::max_abs() const {
  double worst = 0.0;
  for (const cplx& v : data_) worst = std::max(worst, std::abs(v));
  return worst;
}

}  // namespace spincat
