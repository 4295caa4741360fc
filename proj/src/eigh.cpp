// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include <Eigen/Dense>

#include "spincat/errors.hpp"
#include "spincat/matrix.hpp"

namespace spincat {

HermEigen eigh(const CMatrix& m, double hermitian_tol) {
  if (m.rows() != m.cols()) {
    throw EigenFailure("eigh: matrix is not square");
  }
  const double scale = std::max(m.max_abs(), 1.0);
  if (m.hermiticity_defect() > hermitian_tol * scale) {
    throw EigenFailure("eigh: matrix is not Hermitian within tolerance");
  }

  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd em(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      em(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(em);
  if (solver.info() != Eigen::Success) {
    throw EigenFailure("eigh: eigendecomposition did not converge");
  }

  HermEigen out;
  out.values.resize(m.rows());
  out.vectors = CMatrix(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      out.vectors(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          solver.eigenvectors()(i, j);
    }
  }
  return out;
}

}  // namespace spincat
