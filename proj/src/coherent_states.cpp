// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincat/coherent_states.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spincat/errors.hpp"
#include "spincat/kernels.hpp"

namespace spincat {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

BlochPoint::BlochPoint(double theta, double phi) : theta_(theta) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw std::invalid_argument("BlochPoint: theta must lie in [0, pi]");
  }
  phi_ = std::fmod(phi, kTwoPi);
  if (phi_ < 0.0) phi_ += kTwoPi;
}

double StateVector::norm() const {
  return std::sqrt(kernels::ops().norm_sq(amplitudes.data(), amplitudes.size()));
}

double log_binomial(int n, int k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

StateVector coherent_state(Spin spin, const BlochPoint& point) {
  const std::size_t d = spin.dimension();
  const int ts = spin.twice_s();
  const double c = std::cos(0.5 * point.theta());
  const double s = std::sin(0.5 * point.theta());

  std::vector<cplx> amp(d);
  for (std::size_t k = 0; k < d; ++k) {
    // index k corresponds to m = k - s, so s+m = k and s-m = 2s-k
    const double mag = std::exp(0.5 * log_binomial(ts, static_cast<int>(k))) *
                       std::pow(c, static_cast<double>(ts - k)) *
                       std::pow(s, static_cast<double>(k));
    amp[k] = std::polar(mag, -static_cast<double>(k) * point.phi());
  }
  return {spin, std::move(amp)};
}

cplx overlap_closed_form(Spin spin, const BlochPoint& p1, const BlochPoint& p2) {
  const cplx base =
      std::cos(0.5 * p1.theta()) * std::cos(0.5 * p2.theta()) +
      std::polar(std::sin(0.5 * p1.theta()) * std::sin(0.5 * p2.theta()),
                 p1.phi() - p2.phi());
  return std::pow(base, spin.twice_s());
}

StateVector cat_state(const CatParams& params) {
  const StateVector a = coherent_state(params.spin, params.p1);
  const StateVector b = coherent_state(params.spin, params.p2);
  const std::size_t d = params.spin.dimension();

  std::vector<cplx> amp(d);
  for (std::size_t k = 0; k < d; ++k) amp[k] = a.amplitudes[k] + b.amplitudes[k];

  const double norm_sq = kernels::ops().norm_sq(amp.data(), amp.size());
  if (norm_sq < kDegeneracyThreshold) {
    throw DegenerateSuperposition(
        "cat_state: the two coherent components cancel; no normalization exists");
  }
  kernels::ops().scale(1.0 / std::sqrt(norm_sq), amp.data(), amp.size());
  return {params.spin, std::move(amp)};
}

StateVector noon_state(Spin spin) {
  std::vector<cplx> amp(spin.dimension());
  const double r = 1.0 / std::numbers::sqrt2;
  amp.front() = r;
  amp.back() = r;
  return {spin, std::move(amp)};
}

cplx z_parameter(const BlochPoint& point, double pole_margin) {
  if (point.theta() >= std::numbers::pi - pole_margin) {
    throw PoleSingularity("z_parameter: theta too close to the south pole");
  }
  return std::polar(std::tan(0.5 * point.theta()), -point.phi());
}

StateVector coherent_state_from_z(Spin spin, const BlochPoint& point) {
  const cplx z = z_parameter(point);
  const std::size_t d = spin.dimension();
  const int ts = spin.twice_s();
  const double s = spin.s();
  const double log_den = s * std::log1p(std::norm(z));

  std::vector<cplx> amp(d);
  cplx zk = 1.0;
  for (std::size_t k = 0; k < d; ++k) {
    amp[k] = std::exp(0.5 * log_binomial(ts, static_cast<int>(k)) - log_den) * zk;
    zk *= z;
  }
  return {spin, std::move(amp)};
}

cplx overlap_from_z(Spin spin, const BlochPoint& p1, const BlochPoint& p2) {
  const cplx z1 = z_parameter(p1);
  const cplx z2 = z_parameter(p2);
  const double s = spin.s();
  const cplx num = std::pow(1.0 + std::conj(z1) * z2, spin.twice_s());
  const double den =
      std::exp(s * (std::log1p(std::norm(z1)) + std::log1p(std::norm(z2))));
  return num / den;
}

}  // namespace spincat
