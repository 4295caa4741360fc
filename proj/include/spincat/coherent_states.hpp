// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Spin coherent states, their closed-form overlaps, two-component cat
// states and NOON states, all in the ascending-m Dicke basis.

#pragma once

#include <complex>
#include <vector>

#include "spincat/spin_algebra.hpp"

namespace spincat {

/// Point on the Bloch sphere. phi is reduced mod 2 pi on construction;
/// theta outside [0, pi] is rejected.
class BlochPoint {
 public:
  BlochPoint(double theta, double phi);

  double theta() const { return theta_; }
  double phi() const { return phi_; }

 private:
  double theta_;
  double phi_;
};

/// Parameters of a two-component superposition of coherent states.
struct CatParams {
  Spin spin;
  BlochPoint p1;
  BlochPoint p2;

  /// Phase difference Phi = phi1 - phi2.
  double phase_difference() const { return p1.phi() - p2.phi(); }
};

/// Unit-norm amplitude vector over the Dicke basis of a fixed spin.
struct StateVector {
  Spin spin;
  std::vector<cplx> amplitudes;

  std::size_t dimension() const { return amplitudes.size(); }
  double norm() const;
};

/// Squared-norm threshold below which a superposition counts as degenerate.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// Coherent state |theta, phi, s>: amplitude at m is
///   sqrt(binom(2s, s+m)) cos^{s-m}(theta/2) sin^{s+m}(theta/2) e^{-i(s+m)phi}.
/// Built from the trigonometric product form, so theta = pi is regular.
StateVector coherent_state(Spin spin, const BlochPoint& point);

/// Closed-form overlap <p1|p2> =
///   (cos(t1/2)cos(t2/2) + e^{i(phi1-phi2)} sin(t1/2)sin(t2/2))^{2s}.
cplx overlap_closed_form(Spin spin, const BlochPoint& p1, const BlochPoint& p2);

/// Normalized superposition N_c (|p1> + |p2>) with
/// N_c = [2 + 2 Re<p1|p2>]^{-1/2}. Throws DegenerateSuperposition when the
/// two components cancel.
StateVector cat_state(const CatParams& params);

/// (|s,-s> + |s,+s>)/sqrt(2).
StateVector noon_state(Spin spin);

/// Stereographic parameter z = e^{-i phi} tan(theta/2). Throws
/// PoleSingularity for theta >= pi - pole_margin.
cplx z_parameter(const BlochPoint& point, double pole_margin = 1e-6);

/// Validation-only construction of the coherent state through the
/// z-parametrization: (1+|z|^2)^{-s} sqrt(binom(2s,s+m)) z^{s+m}.
/// Must agree with coherent_state away from the pole.
StateVector coherent_state_from_z(Spin spin, const BlochPoint& point);

/// Overlap through the rational z form,
///   (1 + conj(z1) z2)^{2s} / ((1+|z1|^2)^s (1+|z2|^2)^s).
cplx overlap_from_z(Spin spin, const BlochPoint& p1, const BlochPoint& p2);

/// ln binom(2s, k) via lgamma; shared by the closed forms for large spins.
double log_binomial(int n, int k);

}  // namespace spincat
