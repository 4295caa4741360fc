// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form precision bounds for two-component cat states: the spin-3/2
// catalog (general bounds for each generator plus the published
// phase-difference special cases, evaluated exactly as printed) and the
// general-spin Fisher information in the stereographic parametrization.
// The numeric engine is ground truth; these forms are verification targets,
// and printed-formula discrepancies are cataloged in the errata report
// rather than silently patched.

#pragma once

#include <string>
#include <vector>

#include "spincat/coherent_states.hpp"
#include "spincat/qfi_engine.hpp"

namespace spincat {

/// Dicke-amplitude building blocks of the spin-3/2 cat state: amplitudes are
/// N_c (A, sqrt3 B, sqrt3 C, D) with A real.
struct Spin32Coefficients {
  double a;
  cplx b, c, d;

  static Spin32Coefficients from_angles(double theta1, double phi1,
                                        double theta2, double phi2);

  /// N_c^{-2} = A^2 + 3 B conj(B) + 3 C conj(C) + D conj(D).
  double inv_norm_sq() const;
};

/// Fisher information of the spin-3/2 cat state from the closed forms.
/// Throws DegenerateSuperposition when the components cancel.
double spin32_qfi(Generator g, double theta1, double theta2, double phi1,
                  double phi2);

/// Precision bounds 1/sqrt(F) from the closed forms (+inf when F is below
/// the floor).
double crb_sz_general_32(double theta1, double theta2, double phi1, double phi2);
double crb_sx_general_32(double theta1, double theta2, double phi1, double phi2);
double crb_sy_general_32(double theta1, double theta2, double phi1, double phi2);

/// Phase-difference special cases published for spin 3/2. Each evaluator
/// computes the printed expression verbatim; whether it matches the general
/// form is measured by the errata report, not assumed.
enum class SpecialPhi { Zero, HalfPi, ThirdPi, ThreeQuarterPi, FourThirdsPi, Pi };

double special_phi_value(SpecialPhi c);
const char* to_string(SpecialPhi c);

/// True when a printed special form exists for (generator, case).
bool special_case_defined(Generator g, SpecialPhi c);

/// Printed special forms; throw std::invalid_argument for undefined pairs.
/// The Sy ThirdPi form is complex-valued as printed (cube roots of -1,
/// principal branches); its modulus is returned.
double crb_sz_special_32(double theta1, double theta2, SpecialPhi c);
double crb_sx_special_32(double theta1, double theta2, SpecialPhi c);
double crb_sy_special_32(double theta1, double theta2, SpecialPhi c);
double crb_special_32(Generator g, double theta1, double theta2, SpecialPhi c);

/// General-spin Fisher information in the z parametrization, computed in
/// log space so factorial ratios stay finite for large spins. Throws
/// PoleSingularity when either theta reaches the z-domain boundary and
/// DegenerateSuperposition when the components cancel.
double qfi_general_s(Spin spin, const BlochPoint& p1, const BlochPoint& p2,
                     Generator g);

/// Standard quantum limit 1/sqrt(2s).
double sql(Spin spin);
/// Heisenberg limit 1/(2s).
double hl(Spin spin);

/// One comparison row of the errata report: a printed special form against
/// the matching general form on a theta grid slice.
struct ErrataRow {
  std::string formula_id;
  std::string slice;
  double max_rel_dev = 0.0;
  std::size_t cells = 0;
  std::size_t skipped = 0;   // non-finite or degenerate cells
  bool confirmed = false;    // max_rel_dev <= 1e-9
};

struct ErrataReport {
  std::vector<ErrataRow> rows;
  std::vector<std::string> notes;

  std::string to_text() const;
  bool all_rows_measured() const;
};

/// Compare every special form against its general form on a grid x grid
/// slice and collect measured observations about the published values.
ErrataReport build_errata_report(std::size_t grid = 101);

}  // namespace spincat
