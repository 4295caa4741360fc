// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincat/qfi_engine.hpp"

#include <cmath>
#include <stdexcept>

#include "spincat/errors.hpp"
#include "spincat/kernels.hpp"

namespace spincat {

namespace {
constexpr double kSupportThreshold = 1e-10;
}

const char* to_string(Generator g) {
  switch (g) {
    case Generator::Sx: return "sx";
    case Generator::Sy: return "sy";
    case Generator::Sz: return "sz";
  }
  return "?";
}

std::optional<Generator> generator_from_string(std::string_view name) {
  if (name == "sx") return Generator::Sx;
  if (name == "sy") return Generator::Sy;
  if (name == "sz") return Generator::Sz;
  return std::nullopt;
}

SpinOperator build_generator(Spin spin, Generator g) {
  switch (g) {
    case Generator::Sx: return build_sx(spin);
    case Generator::Sy: return build_sy(spin);
    case Generator::Sz: return build_sz(spin);
  }
  throw std::invalid_argument("unknown generator tag");
}

QcrbResult crb(double qfi, std::uint64_t repetitions) {
  if (qfi < 0.0) {
    throw std::invalid_argument("crb: Fisher information must be nonnegative");
  }
  QcrbResult r;
  r.qfi = qfi;
  r.repetitions = repetitions;
  if (qfi > kQfiFloor) {
    r.crb = 1.0 / std::sqrt(static_cast<double>(repetitions) * qfi);
  }
  return r;
}

double qfi_pure(const StateVector& state, const SpinOperator& h) {
  const std::size_t d = state.dimension();
  if (d != h.dimension()) {
    throw std::invalid_argument("qfi_pure: state/operator dimension mismatch");
  }
  if (std::abs(state.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("qfi_pure: state is not normalized");
  }

  // <H^2> = |H psi|^2 and <H> = <psi|H psi> for Hermitian H.
  std::vector<cplx> hpsi(d);
  kernels::matvec(h.entries.data(), d, d, state.amplitudes.data(), hpsi.data());
  const double h2 = kernels::ops().norm_sq(hpsi.data(), d);
  const cplx h1 = kernels::ops().dotc(state.amplitudes.data(), hpsi.data(), d);

  double f = 4.0 * (h2 - std::norm(h1));
  if (f < 0.0) {
    if (f < -1e-10) {
      throw std::runtime_error("qfi_pure: variance fell below -1e-10");
    }
    f = 0.0;
  }
  return f;
}

StateFamily::StateFamily(StateVector base, SpinOperator generator)
    : base_(std::move(base)), generator_(std::move(generator)),
      eig_(eigh(generator_.entries)) {
  if (base_.dimension() != generator_.dimension()) {
    throw std::invalid_argument("StateFamily: dimension mismatch");
  }
  // coefficients of the base state in the generator eigenbasis
  const std::size_t d = base_.dimension();
  const CMatrix vdag = eig_.vectors.adjoint();
  base_in_eigenbasis_.resize(d);
  kernels::matvec(vdag.data(), d, d, base_.amplitudes.data(),
                  base_in_eigenbasis_.data());
}

StateVector StateFamily::evolved(double zeta) const {
  const std::size_t d = base_.dimension();
  std::vector<cplx> w(d);
  for (std::size_t j = 0; j < d; ++j) {
    w[j] = std::polar(1.0, zeta * eig_.values[j]) * base_in_eigenbasis_[j];
  }
  std::vector<cplx> out(d);
  kernels::matvec(eig_.vectors.data(), d, d, w.data(), out.data());
  return {base_.spin, std::move(out)};
}

StateFamily make_cat_family(const CatParams& params, Generator g) {
  return StateFamily(cat_state(params), build_generator(params.spin, g));
}

StateFamily make_noon_family(Spin spin, Generator g) {
  return StateFamily(noon_state(spin), build_generator(spin, g));
}

StateVector evolved_state(const StateVector& state, const SpinOperator& h,
                          double zeta) {
  if (state.dimension() != h.dimension()) {
    throw std::invalid_argument("evolved_state: dimension mismatch");
  }
  const CMatrix u = expi_generator(h, zeta);
  return {state.spin, u.apply(state.amplitudes)};
}

namespace {

CMatrix outer_product(const StateVector& psi) {
  const std::size_t d = psi.dimension();
  CMatrix rho(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      rho(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
    }
  }
  return rho;
}

double trace_real(const CMatrix& m) {
  double t = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i).real();
  return t;
}

}  // namespace

CMatrix sld_operator(const CMatrix& rho, const CMatrix& drho) {
  if (rho.rows() != rho.cols() || drho.rows() != drho.cols() ||
      rho.rows() != drho.rows()) {
    throw std::invalid_argument("sld_operator: dimension mismatch");
  }
  if (rho.hermiticity_defect() > 1e-9 || drho.hermiticity_defect() > 1e-9) {
    throw std::invalid_argument("sld_operator: inputs must be Hermitian");
  }
  if (std::abs(trace_real(rho) - 1.0) > 1e-9) {
    throw std::invalid_argument("sld_operator: rho must have unit trace");
  }
  if (std::abs(trace_real(drho)) > 1e-9) {
    throw std::invalid_argument("sld_operator: drho must be traceless");
  }

  const HermEigen eig = eigh(rho);
  const std::size_t d = rho.rows();
  for (double p : eig.values) {
    if (p < -1e-8) {
      throw std::invalid_argument("sld_operator: rho has a negative eigenvalue");
    }
  }

  const CMatrix vdag = eig.vectors.adjoint();
  const CMatrix dr_eig = vdag * drho * eig.vectors;

  CMatrix l_eig(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double denom = eig.values[i] + eig.values[j];
      l_eig(i, j) = denom > kSupportThreshold ? 2.0 * dr_eig(i, j) / denom
                                              : cplx(0.0);
    }
  }
  return eig.vectors * l_eig * vdag;
}

double qfi_sld(const StateFamily& family, double zeta0, double delta) {
  const CMatrix rho = outer_product(family.evolved(zeta0));
  const CMatrix rho_plus = outer_product(family.evolved(zeta0 + delta));
  const CMatrix rho_minus = outer_product(family.evolved(zeta0 - delta));

  CMatrix drho = rho_plus - rho_minus;
  drho *= cplx(1.0 / (2.0 * delta));

  const CMatrix l = sld_operator(rho, drho);
  // Tr[rho L^2]
  const CMatrix rl2 = rho * l * l;
  return trace_real(rl2);
}

double qfi_spectral_unitary(const HermEigen& rho_eigen, const SpinOperator& h) {
  const std::size_t d = rho_eigen.values.size();
  if (d != h.dimension()) {
    throw std::invalid_argument("qfi_spectral_unitary: dimension mismatch");
  }
  double psum = 0.0;
  for (double p : rho_eigen.values) {
    if (p < -1e-8) {
      throw std::invalid_argument("qfi_spectral_unitary: invalid spectrum");
    }
    psum += p;
  }
  if (std::abs(psum - 1.0) > 1e-9) {
    throw std::invalid_argument("qfi_spectral_unitary: spectrum does not sum to 1");
  }

  // H in the eigenbasis of rho
  const CMatrix h_eig = rho_eigen.vectors.adjoint() * h.entries * rho_eigen.vectors;

  double f = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double pi = rho_eigen.values[i];
    if (pi <= 0.0) continue;
    // <i|H^2|i> = sum_j |H_ij|^2
    double h2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) h2 += std::norm(h_eig(i, j));
    f += 4.0 * pi * h2;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const double denom = rho_eigen.values[i] + rho_eigen.values[j];
      if (denom <= kSupportThreshold) continue;
      f -= 8.0 * rho_eigen.values[i] * rho_eigen.values[j] / denom *
           std::norm(h_eig(i, j));
    }
  }
  return f;
}

double qfi_fidelity_fd(const StateFamily& family, double zeta0, double delta) {
  if (delta < 1e-6 || delta > 1e-2) {
    throw std::invalid_argument("qfi_fidelity_fd: delta outside [1e-6, 1e-2]");
  }
  const StateVector a = family.evolved(zeta0);
  const StateVector b = family.evolved(zeta0 + delta);
  const cplx overlap = kernels::ops().dotc(a.amplitudes.data(),
                                           b.amplitudes.data(), a.dimension());
  return 8.0 * (1.0 - std::abs(overlap)) / (delta * delta);
}

}  // namespace spincat
