// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincat/heatmap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spincat/closed_forms.hpp"

namespace spincat {

namespace {

struct Rgb {
  unsigned char r, g, b;
};

constexpr Rgb kDivergent{255, 255, 255};
constexpr Rgb kDegenerate{255, 0, 255};

// three-stop linear ramp, dark blue -> magenta-red -> yellow
constexpr Rgb kStops[3] = {{13, 8, 135}, {190, 48, 101}, {240, 249, 33}};

Rgb colormap(double t) {
  t = std::clamp(t, 0.0, 1.0);
  const double x = t * 2.0;
  const int seg = x < 1.0 ? 0 : 1;
  const double f = x - seg;
  const auto mix = [&](unsigned char a, unsigned char b) {
    return static_cast<unsigned char>(std::lround(a + f * (b - a)));
  };
  return {mix(kStops[seg].r, kStops[seg + 1].r),
          mix(kStops[seg].g, kStops[seg + 1].g),
          mix(kStops[seg].b, kStops[seg + 1].b)};
}

}  // namespace

std::string HeatmapImage::to_ppm() const {
  std::string out = "P6\n" + std::to_string(width) + " " +
                    std::to_string(height) + "\n255\n";
  out.append(reinterpret_cast<const char*>(pixels.data()), pixels.size());
  return out;
}

HeatmapImage render_heatmap(const SweepDataset& dataset, int twice_spin,
                            double cap) {
  if (dataset.theta2_steps < 2) {
    throw std::invalid_argument("render_heatmap: dataset is not a 2-D grid");
  }
  std::vector<const SweepRow*> block;
  block.reserve(dataset.theta1_steps * dataset.theta2_steps);
  for (const SweepRow& r : dataset.rows) {
    if (r.twice_spin == twice_spin) block.push_back(&r);
  }
  if (block.size() != dataset.theta1_steps * dataset.theta2_steps) {
    throw std::invalid_argument(
        "render_heatmap: dataset block does not match the declared grid");
  }

  const double lo = hl(Spin{twice_spin});
  const double hi = cap;
  if (!(hi > lo)) {
    throw std::invalid_argument("render_heatmap: cap must exceed the HL floor");
  }

  HeatmapImage img;
  img.width = dataset.theta1_steps;
  img.height = dataset.theta2_steps;
  img.pixels.resize(3 * img.width * img.height);

  for (std::size_t i = 0; i < dataset.theta1_steps; ++i) {
    for (std::size_t j = 0; j < dataset.theta2_steps; ++j) {
      // rows ordered theta1-major then theta2 within each spin block
      const SweepRow& r = *block[i * dataset.theta2_steps + j];
      Rgb c;
      if (std::isnan(r.crb)) {
        c = kDegenerate;
      } else if (std::isinf(r.crb)) {
        c = kDivergent;
      } else {
        c = colormap((std::clamp(r.crb, lo, hi) - lo) / (hi - lo));
      }
      // column = theta1 index, row = theta2 descending (origin bottom-left)
      const std::size_t px = i;
      const std::size_t py = img.height - 1 - j;
      unsigned char* p = img.pixels.data() + 3 * (py * img.width + px);
      p[0] = c.r;
      p[1] = c.g;
      p[2] = c.b;
    }
  }
  return img;
}

}  // namespace spincat
