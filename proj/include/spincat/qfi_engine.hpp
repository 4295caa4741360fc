// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Numeric ground truth for the Fisher information of a state under a
// Hermitian generator, by three independent routes: pure-state variance,
// symmetric logarithmic derivative, and fidelity finite difference.
// Evolution is fixed as e^{+i zeta H}; the Fisher information is invariant
// under the sign of zeta, so either convention yields the same value.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "spincat/coherent_states.hpp"
#include "spincat/matrix.hpp"
#include "spincat/spin_algebra.hpp"

namespace spincat {

enum class Generator { Sx, Sy, Sz };

const char* to_string(Generator g);
std::optional<Generator> generator_from_string(std::string_view name);

SpinOperator build_generator(Spin spin, Generator g);

/// QFI floor below which the precision bound counts as divergent.
inline constexpr double kQfiFloor = 1e-10;

/// Fisher information together with the precision bound 1/sqrt(n F).
struct QcrbResult {
  double qfi = 0.0;
  /// 1/sqrt(n qfi), or +infinity when qfi <= floor.
  double crb = std::numeric_limits<double>::infinity();
  std::uint64_t repetitions = 1;

  bool divergent() const { return !(crb < std::numeric_limits<double>::infinity()); }
};

/// Precision bound from a Fisher information value: 1/sqrt(n F) for
/// F above the floor, divergent otherwise.
QcrbResult crb(double qfi, std::uint64_t repetitions = 1);

/// Pure-state Fisher information 4 [<H^2> - <H>^2], clamped to zero when the
/// variance is within tolerance of zero. Throws std::invalid_argument on
/// dimension mismatch or a state whose norm deviates by more than 1e-9.
double qfi_pure(const StateVector& state, const SpinOperator& h);

/// A one-parameter family e^{i zeta H} |psi0> with the generator
/// eigendecomposition cached, so repeated evolutions cost two small
/// matrix-vector products.
class StateFamily {
 public:
  StateFamily(StateVector base, SpinOperator generator);

  const StateVector& base() const { return base_; }
  const SpinOperator& generator() const { return generator_; }
  Spin spin() const { return base_.spin; }
  std::size_t dimension() const { return base_.dimension(); }

  StateVector evolved(double zeta) const;

 private:
  StateVector base_;
  SpinOperator generator_;
  HermEigen eig_;
  std::vector<cplx> base_in_eigenbasis_;
};

/// Family built from cat-state parameters and a generator tag.
StateFamily make_cat_family(const CatParams& params, Generator g);

/// Family built from the NOON state.
StateFamily make_noon_family(Spin spin, Generator g);

/// e^{i zeta H} |psi>; norm preserved. One-shot variant of StateFamily.
StateVector evolved_state(const StateVector& state, const SpinOperator& h,
                          double zeta);

/// Symmetric logarithmic derivative solving d rho = (L rho + rho L)/2.
/// In the eigenbasis of rho, L_ij = 2 (d rho)_ij / (p_i + p_j) on pairs with
/// p_i + p_j above the support threshold; other pairs are dropped.
/// Expects rho Hermitian PSD trace-1 and drho Hermitian traceless within
/// 1e-9 (eigenvalues may dip to -1e-8 from finite differencing).
CMatrix sld_operator(const CMatrix& rho, const CMatrix& drho);

/// SLD-route Fisher information Tr[rho L^2] at zeta0, with d rho estimated
/// by a central finite difference of step delta.
double qfi_sld(const StateFamily& family, double zeta0, double delta = 1e-5);

/// Fisher information of a mixed state with known spectral decomposition:
///   sum 4 p_i <i|H^2|i> - sum_{ij} 8 p_i p_j / (p_i + p_j) |<i|H|j>|^2,
/// skipping pairs with p_i + p_j below the support threshold.
double qfi_spectral_unitary(const HermEigen& rho_eigen, const SpinOperator& h);

/// Fidelity route: 8 (1 - |<psi_z0 | psi_z0+delta>|) / delta^2. Carries an
/// O(delta^2) truncation bias.
double qfi_fidelity_fd(const StateFamily& family, double zeta0,
                       double delta = 1e-4);

}  // namespace spincat
