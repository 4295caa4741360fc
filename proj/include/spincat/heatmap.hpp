// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Raster rendering of 2-D sweep datasets as binary portable pixmaps (P6).
// The colormap is linear over [hl(s), cap]; divergent cells are white and
// degenerate cells magenta. Output bytes are a pure function of the input.

#pragma once

#include <string>
#include <vector>

#include "spincat/sweep.hpp"

namespace spincat {

struct HeatmapImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<unsigned char> pixels;   // RGB, row-major, top row first

  std::string to_ppm() const;
};

/// Render the block of `dataset` belonging to `twice_spin`. Columns map to
/// ascending theta1, rows to descending theta2 (mathematical orientation).
/// Values clamp to [hl(s), cap]. Throws std::invalid_argument when the
/// dataset block is not a full grid.
HeatmapImage render_heatmap(const SweepDataset& dataset, int twice_spin,
                            double cap);

}  // namespace spincat
