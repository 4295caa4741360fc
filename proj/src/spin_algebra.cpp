// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincat/spin_algebra.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace spincat {

Spin::Spin(int twice_s) : twice_s_(twice_s) {
  if (twice_s < 1 || twice_s > kMaxTwiceSpin) {
    throw std::invalid_argument("Spin: twice_s must be in [1, " +
                                std::to_string(kMaxTwiceSpin) + "], got " +
                                std::to_string(twice_s));
  }
}

SpinOperator build_sz(Spin spin) {
  const std::size_t d = spin.dimension();
  CMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) m(k, k) = spin.m_at(k);
  return {spin, std::move(m)};
}

SpinOperator build_splus(Spin spin) {
  const std::size_t d = spin.dimension();
  const double s = spin.s();
  CMatrix m(d, d);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double mk = spin.m_at(k);
    m(k + 1, k) = std::sqrt(s * (s + 1.0) - mk * (mk + 1.0));
  }
  return {spin, std::move(m)};
}

SpinOperator build_sminus(Spin spin) {
  SpinOperator p = build_splus(spin);
  return {spin, p.entries.adjoint()};
}

SpinOperator build_sx(Spin spin) {
  const std::size_t d = spin.dimension();
  const double s = spin.s();
  CMatrix m(d, d);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double mk = spin.m_at(k);
    const double c = 0.5 * std::sqrt(s * (s + 1.0) - mk * (mk + 1.0));
    m(k + 1, k) = c;
    m(k, k + 1) = c;
  }
  return {spin, std::move(m)};
}

SpinOperator build_sy(Spin spin) {
  const std::size_t d = spin.dimension();
  const double s = spin.s();
  CMatrix m(d, d);
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const double mk = spin.m_at(k);
    const double c = 0.5 * std::sqrt(s * (s + 1.0) - mk * (mk + 1.0));
    m(k + 1, k) = cplx(0.0, -c);
    m(k, k + 1) = cplx(0.0, c);
  }
  return {spin, std::move(m)};
}

SpinOperator commutator(const SpinOperator& a, const SpinOperator& b) {
  if (a.spin != b.spin) {
    throw std::invalid_argument("commutator: operators live on different spins");
  }
  return {a.spin, a.entries * b.entries - b.entries * a.entries};
}

CMatrix expi_generator(const SpinOperator& h, double zeta) {
  const HermEigen eig = eigh(h.entries);
  const std::size_t d = h.dimension();

  // V diag(e^{i zeta l}) V^dagger
  CMatrix phased = eig.vectors;
  for (std::size_t j = 0; j < d; ++j) {
    const cplx phase = std::polar(1.0, zeta * eig.values[j]);
    for (std::size_t i = 0; i < d; ++i) phased(i, j) *= phase;
  }
  return phased * eig.vectors.adjoint();
}

}  // namespace spincat
