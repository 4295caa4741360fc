// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Exact Dicke-basis representations of the SU(2) generators for arbitrary
// spin. Basis ordering is ascending m everywhere: index k corresponds to
// m = k - s, so index 0 is the lowest-weight state |s,-s>.

#pragma once

#include <cstdint>

#include "spincat/matrix.hpp"

namespace spincat {

/// Half-integer spin label, stored exactly as twice the spin value.
class Spin {
 public:
  static constexpr int kMaxTwiceSpin = 200;

  explicit Spin(int twice_s);

  int twice_s() const { return twice_s_; }
  double s() const { return 0.5 * twice_s_; }
  /// Hilbert space dimension 2s + 1.
  std::size_t dimension() const { return static_cast<std::size_t>(twice_s_) + 1; }
  /// m value at basis index k (k = 0 .. 2s).
  double m_at(std::size_t k) const { return static_cast<double>(k) - s(); }

  friend bool operator==(Spin a, Spin b) { return a.twice_s_ == b.twice_s_; }
  friend bool operator!=(Spin a, Spin b) { return !(a == b); }

 private:
  int twice_s_;
};

/// Hermitian (or ladder) operator on the Dicke basis of a fixed spin.
struct SpinOperator {
  Spin spin;
  CMatrix entries;

  std::size_t dimension() const { return spin.dimension(); }
};

/// S_z: diagonal with entries m = -s .. s.
SpinOperator build_sz(Spin spin);

/// S_+: maps |s,m> to sqrt(s(s+1) - m(m+1)) |s,m+1>.
SpinOperator build_splus(Spin spin);

/// S_- = (S_+)^dagger.
SpinOperator build_sminus(Spin spin);

/// S_x = (S_+ + S_-)/2.
SpinOperator build_sx(Spin spin);

/// S_y = (S_+ - S_-)/(2i).
SpinOperator build_sy(Spin spin);

/// AB - BA. Throws std::invalid_argument on mismatched spins.
SpinOperator commutator(const SpinOperator& a, const SpinOperator& b);

/// e^{i zeta H} for Hermitian H, via eigendecomposition H = V L V^dagger.
/// Unconditionally stable at any zeta. Throws EigenFailure for
/// non-Hermitian input.
CMatrix expi_generator(const SpinOperator& h, double zeta);

}  // namespace spincat
