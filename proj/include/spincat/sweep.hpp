// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Parameter sweeps over the cat-state geometry. Grid cells are evaluated by
// a worker pool and written by index, so output is identical for any worker
// count. CSV serialization uses 17 significant digits and round-trips
// exactly; divergent bounds and degenerate cells appear as literal
// lowercase "inf" / "nan" tokens.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spincat/qfi_engine.hpp"

namespace spincat {

enum class EngineChoice { Numeric, Analytic, Both };

const char* to_string(EngineChoice e);
std::optional<EngineChoice> engine_from_string(std::string_view name);

/// Inclusive linear range.
struct AxisRange {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t steps = 2;   // >= 2

  double at(std::size_t i) const {
    return lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
};

/// Second-axis specification for 1-D sweeps.
enum class Theta2Mode { Range, Fixed, Diagonal };

struct SweepConfig {
  std::vector<int> twice_spins = {3};
  Generator generator = Generator::Sz;
  double phi1 = 0.0;
  double phi2 = 0.0;
  AxisRange theta1{0.0, 3.141592653589793, 201};
  Theta2Mode theta2_mode = Theta2Mode::Range;
  AxisRange theta2{0.0, 3.141592653589793, 201};
  double theta2_fixed = 0.0;
  EngineChoice engine = EngineChoice::Numeric;
  std::uint64_t repetitions = 1;
  double crb_cap = 1.0;      // heatmap clamp
  unsigned jobs = 0;         // 0 = hardware concurrency
  std::string out_csv;       // optional output paths
  std::string out_heatmap;

  void validate() const;     // throws std::invalid_argument
};

struct SweepRow {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  int twice_spin = 3;
  Generator generator = Generator::Sz;
  double qfi = 0.0;          // nan for degenerate cells
  double crb = 0.0;          // inf when divergent, nan when degenerate
  EngineChoice engine = EngineChoice::Numeric;   // engine actually used
};

struct SweepDataset {
  std::vector<SweepRow> rows;
  // grid geometry per spin block (rows are ordered spin-major, then
  // theta1-major, then theta2)
  std::size_t theta1_steps = 0;
  std::size_t theta2_steps = 0;   // 1 for 1-D sweeps
  // engine=both: largest |analytic - numeric| crb deviation over finite cells
  std::optional<double> max_engine_deviation;

  std::string to_csv() const;
  static SweepDataset from_csv(std::istream& in);
};

/// Evaluate the bound at one parameter point. Degenerate superpositions
/// yield nan; pole-adjacent thetas always use the numeric engine.
SweepRow evaluate_point(Spin spin, Generator g, double theta1, double theta2,
                        double phi1, double phi2, EngineChoice engine,
                        std::uint64_t repetitions);

/// theta1 x theta2 grid per spin.
SweepDataset run_sweep2d(const SweepConfig& config);

/// One free theta; the second is fixed or constrained to the diagonal.
SweepDataset run_sweep1d(const SweepConfig& config);

}  // namespace spincat
