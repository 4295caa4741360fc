// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Monte-Carlo check that the precision bound is operationally meaningful:
// projective measurements on the evolved state, maximum-likelihood
// estimation of the phase, and comparison of the empirical variance against
// 1/(n F). The measurement defaults to the eigenbasis of the symmetric
// logarithmic derivative at a reference point, which saturates the bound
// locally.

#pragma once

#include <cstdint>
#include <vector>

#include "spincat/qfi_engine.hpp"

namespace spincat {

/// Projective measurement described by an orthonormal basis (columns of
/// `basis`) applied to an evolved state family.
class MeasurementModel {
 public:
  MeasurementModel(StateFamily family, CMatrix basis);

  const StateFamily& family() const { return family_; }
  const CMatrix& basis() const { return basis_; }
  std::size_t outcomes() const { return basis_.cols(); }

  /// p_k(zeta) = |<e_k | psi_zeta>|^2. Sums to 1 within 1e-10.
  std::vector<double> outcome_probabilities(double zeta) const;

 private:
  StateFamily family_;
  CMatrix basis_;   // columns are the measurement states
  CMatrix basis_adjoint_;
};

/// Eigenbasis of the SLD at `zeta_ref` (locally optimal measurement).
MeasurementModel sld_measurement_basis(const StateFamily& family,
                                       double zeta_ref, double delta = 1e-5);

/// Dicke-basis projective measurement (testing and baselines).
MeasurementModel computational_basis_measurement(const StateFamily& family);

/// Multinomial draw of n shots from p(true_zeta); deterministic per seed.
std::vector<std::uint64_t> simulate_outcomes(const MeasurementModel& model,
                                             double true_zeta, std::uint64_t n,
                                             std::uint64_t seed);

/// Classical Fisher information of the induced distribution at zeta, via
/// Richardson-extrapolated central differences of p_k.
double classical_fisher_information(const MeasurementModel& model, double zeta,
                                    double step = 1e-4);

/// Maximum-likelihood estimate of zeta over [window_lo, window_hi]:
/// 512-point grid scan, then golden-section refinement to 1e-8.
/// Fractional weights are allowed. Throws FlatLikelihood when the maximum
/// is not unique at grid resolution. The window must not be wider than
/// pi/(2s), or the likelihood fringes alias.
double mle_estimate(const MeasurementModel& model,
                    const std::vector<double>& counts, double window_lo,
                    double window_hi);

/// Results of m repeated n-shot experiments.
struct EstimationRun {
  double true_zeta = 0.0;
  std::uint64_t shots_per_experiment = 0;   // n
  std::uint64_t experiments = 0;            // m
  std::uint64_t seed = 0;
  std::vector<double> estimates;
  double empirical_variance = 0.0;
  double qfi = 0.0;
  double crb_variance = 0.0;   // 1/(n F)
  double ratio = 0.0;          // empirical / CRB

  std::string report() const;
};

/// Run m independent experiments of n shots each and compare the empirical
/// estimator variance with 1/(n F). Experiments use per-index random
/// streams, so results are bit-identical for any worker count. `jobs` = 0
/// picks the hardware concurrency.
EstimationRun crb_saturation_experiment(const StateFamily& family,
                                        double true_zeta, std::uint64_t n,
                                        std::uint64_t m, std::uint64_t seed,
                                        unsigned jobs = 0);

}  // namespace spincat
