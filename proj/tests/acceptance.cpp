// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one check per release criterion, one PASS/FAIL line
// each. Exits with the number of failed criteria. Criterion 3 reproduces
// the published point-value table with the numeric engine; two of its rows
// quote values that no formula route reproduces (see the errata notes), so
// they are asserted as published and reported honestly.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "spincat/closed_forms.hpp"
#include "spincat/errors.hpp"
#include "spincat/estimation.hpp"
#include "spincat/heatmap.hpp"
#include "spincat/kernels.hpp"
#include "spincat/rng.hpp"
#include "spincat/sweep.hpp"

using namespace spincat;

namespace {

constexpr double kPi = std::numbers::pi;

struct Criterion {
  int id;
  std::string name;
  bool passed;
  std::vector<std::string> details;
};

std::vector<Criterion> g_results;

void record(int id, const std::string& name, bool passed,
            std::vector<std::string> details = {}) {
  g_results.push_back({id, name, passed, std::move(details)});
}

double engine_crb(int ts, Generator g, double t1, double t2, double p1,
                  double p2, std::uint64_t n = 1) {
  const CatParams params{Spin(ts), BlochPoint(t1, p1), BlochPoint(t2, p2)};
  return crb(qfi_pure(cat_state(params), build_generator(Spin(ts), g)), n).crb;
}

// --------------------------------------------------------------------------

void criterion_1_heisenberg_law() {
  SplitMix64 rng(161803);
  bool ok = true;
  std::vector<std::string> details;
  for (int ts = 1; ts <= 32; ++ts) {
    const double phi2 = rng.uniform() * 2.0 * kPi;
    const double bound = engine_crb(ts, Generator::Sz, 0.0, kPi, 0.0, phi2);
    const double target = hl(Spin(ts));
    if (std::abs(bound - target) >= 1e-10) {
      ok = false;
      details.push_back("2s=" + std::to_string(ts) + ": |" +
                        std::to_string(bound) + " - " + std::to_string(target) +
                        "| >= 1e-10");
    }
  }
  record(1, "antipodal cat under sz reaches 1/(2s) for s = 1/2 .. 16", ok,
         std::move(details));
}

void criterion_2_sql_anchor() {
  const double bound = engine_crb(3, Generator::Sz, 0.5 * kPi, 0.5 * kPi, 0.0, 0.0);
  const bool ok = std::abs(bound - 0.5773) < 5e-4;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "measured %.6f vs 0.5773", bound);
  record(2, "shot-noise anchor at the coincident equatorial pair", ok, {buf});
}

void criterion_3_quoted_values() {
  struct RowSpec {
    const char* label;
    Generator g;
    double t1, t2, phi2;   // phi1 = 0
    double expected, tol;
  };
  // phase differences realized as phi2 = -Phi with phi1 = 0; all bounds are
  // even in the phase difference
  const RowSpec rows[] = {
      {"sx phi=0    (0, 0)         = 0.577", Generator::Sx, 0.0, 0.0, 0.0,
       0.577, 5e-3},
      // the source garbles this pair ("theta1=0 and theta1=3pi/4"); the
      // quoted value pins the assignment (3pi/4, 0) - see the errata notes
      {"sx phi=pi/2 (3pi/4, 0)     = 0.479", Generator::Sx, 0.75 * kPi, 0.0,
       -0.5 * kPi, 0.479, 5e-3},
      {"sx phi=3pi/4 (pi/2, pi/2)  = 0.3693", Generator::Sx, 0.5 * kPi,
       0.5 * kPi, -0.75 * kPi, 0.3693, 5e-4},
      {"sx phi=3pi/4 (2pi/3, pi/3) = 0.3985", Generator::Sx, 2.0 * kPi / 3.0,
       kPi / 3.0, -0.75 * kPi, 0.3985, 5e-4},
      {"sx phi=pi   (pi/2, pi/2)   = 1/3", Generator::Sx, 0.5 * kPi, 0.5 * kPi,
       -kPi, 1.0 / 3.0, 5e-4},
      {"sy phi=pi/2 (0, pi)        = 0.471", Generator::Sy, 0.0, kPi,
       -0.5 * kPi, 0.471, 5e-3},
      {"sy phi=pi/2 (pi/6, 5pi/6)  = 0.361", Generator::Sy, kPi / 6.0,
       5.0 * kPi / 6.0, -0.5 * kPi, 0.361, 5e-3},
      // exact cancellation sits at theta = pi on this slice; the quoted
      // value is the limit, evaluated just inside the domain
      {"sy phi=pi   (pi, pi) limit = 0.377964", Generator::Sy, kPi - 1e-3,
       kPi - 1e-3, -kPi, 0.377964, 1e-5},
      {"sz phi=4pi/3 diagonal (pi/2, pi/2) = 0.4236", Generator::Sz, 0.5 * kPi,
       0.5 * kPi, -4.0 * kPi / 3.0, 0.4236, 5e-3},
  };

  bool ok = true;
  std::vector<std::string> details;
  for (const RowSpec& row : rows) {
    const double measured = engine_crb(3, row.g, row.t1, row.t2, 0.0, row.phi2);
    const bool row_ok = std::abs(measured - row.expected) < row.tol;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s %s: measured %.6f",
                  row_ok ? "ok  " : "FAIL", row.label, measured);
    details.push_back(buf);
    ok = ok && row_ok;
  }
  record(3, "published point-value table reproduced by the numeric engine", ok,
         std::move(details));
}

void criterion_4_oracle_triangle() {
  SplitMix64 rng(424242);
  bool ok = true;
  std::vector<std::string> details;
  double worst = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int ts = 1 + static_cast<int>(rng.next() % 12);   // s <= 6
    const CatParams params{Spin(ts),
                           BlochPoint(rng.uniform() * kPi, rng.uniform() * 2.0 * kPi),
                           BlochPoint(rng.uniform() * kPi, rng.uniform() * 2.0 * kPi)};
    const Generator g = static_cast<Generator>(rng.next() % 3);
    const StateFamily family = make_cat_family(params, g);

    const double f_pure = qfi_pure(family.base(), family.generator());
    const double f_sld = qfi_sld(family, 0.0);
    const double f_fd = qfi_fidelity_fd(family, 0.0);
    const double scale = std::max(f_pure, 1.0);
    const double dev = std::max({std::abs(f_pure - f_sld), std::abs(f_pure - f_fd),
                                 std::abs(f_sld - f_fd)}) /
                       scale;
    worst = std::max(worst, dev);
    if (dev > 1e-4) {
      ok = false;
      details.push_back("case " + std::to_string(rep) + ": pairwise deviation " +
                        std::to_string(dev));
    }
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "worst pairwise relative deviation %.3e", worst);
  details.push_back(buf);
  record(4, "variance, sld and fidelity routes agree on 50 random families", ok,
         std::move(details));
}

void criterion_5_analytic_vs_numeric() {
  SplitMix64 rng(505050);
  const auto random_theta = [&] {
    return rng.uniform() * (kPi - 2e-3) + 1e-3;   // theta < pi - 1e-3
  };
  bool ok = true;
  std::vector<std::string> details;

  // spin-3/2 catalog, 200 points per generator
  for (Generator g : {Generator::Sx, Generator::Sy, Generator::Sz}) {
    double worst = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
      const double t1 = random_theta(), t2 = random_theta();
      const double p1 = rng.uniform() * 2.0 * kPi, p2 = rng.uniform() * 2.0 * kPi;
      const CatParams params{Spin(3), BlochPoint(t1, p1), BlochPoint(t2, p2)};
      const double numeric =
          qfi_pure(cat_state(params), build_generator(Spin(3), g));
      const double closed = spin32_qfi(g, t1, t2, p1, p2);
      worst = std::max(worst,
                       std::abs(closed - numeric) / std::max(numeric, 1e-12));
    }
    char buf[96];
    std::snprintf(buf, sizeof(buf), "spin-3/2 %s bound: max rel dev %.3e",
                  to_string(g), worst);
    details.push_back(buf);
    ok = ok && worst <= 1e-9;
  }

  // general-s closed forms, 200 points per generator with mixed spins
  for (Generator g : {Generator::Sx, Generator::Sy, Generator::Sz}) {
    double worst_small = 0.0, worst_large = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
      const int ts = 1 + static_cast<int>(rng.next() % 32);
      const BlochPoint p1(random_theta(), rng.uniform() * 2.0 * kPi);
      const BlochPoint p2(random_theta(), rng.uniform() * 2.0 * kPi);
      const CatParams params{Spin(ts), p1, p2};
      const double numeric =
          qfi_pure(cat_state(params), build_generator(Spin(ts), g));
      const double closed = qfi_general_s(Spin(ts), p1, p2, g);
      const double dev = std::abs(closed - numeric) / std::max(numeric, 1e-12);
      if (ts >= 20) {
        worst_large = std::max(worst_large, dev);
      } else {
        worst_small = std::max(worst_small, dev);
      }
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "general-s %s: max rel dev %.3e (s < 10), %.3e (s >= 10)",
                  to_string(g), worst_small, worst_large);
    details.push_back(buf);
    ok = ok && worst_small <= 1e-9 && worst_large <= 1e-6;
  }
  record(5, "closed forms agree with the numeric engine on random points", ok,
         std::move(details));
}

void criterion_6_errata_report() {
  const ErrataReport report = build_errata_report(101);

  std::ofstream out("errata_report.txt");
  out << report.to_text();
  out.close();

  bool ok = report.all_rows_measured();
  std::vector<std::string> details;
  int confirmed = 0, cataloged = 0;
  bool sy_pi_cataloged = false;
  for (const ErrataRow& row : report.rows) {
    (row.confirmed ? confirmed : cataloged)++;
    if (row.formula_id == "sy-special-phi=pi" && !row.confirmed) {
      sy_pi_cataloged = true;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-24s max rel dev %.3e -> %s",
                  row.formula_id.c_str(), row.max_rel_dev,
                  row.confirmed ? "confirmed" : "cataloged");
    details.push_back(buf);
  }
  ok = ok && sy_pi_cataloged;
  details.push_back("report written to errata_report.txt (" +
                    std::to_string(confirmed) + " confirmed, " +
                    std::to_string(cataloged) + " cataloged)");
  record(6, "special-form cross-validation report produced", ok,
         std::move(details));
}

void criterion_7_figure_geometry() {
  bool ok = true;
  std::vector<std::string> details;

  // density panel: z generator, zero phase difference, 201 x 201
  {
    SweepConfig cfg;
    cfg.twice_spins = {3};
    cfg.generator = Generator::Sz;
    cfg.theta1 = {0.0, kPi, 201};
    cfg.theta2 = {0.0, kPi, 201};
    const SweepDataset ds = run_sweep2d(cfg);
    const auto cell = [&](std::size_t i, std::size_t j) -> const SweepRow& {
      return ds.rows[i * 201 + j];
    };
    std::size_t inf_cells = 0;
    const bool inf_at_corners =
        std::isinf(cell(0, 0).crb) && std::isinf(cell(200, 200).crb);
    double minimum = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (std::size_t k = 0; k < ds.rows.size(); ++k) {
      if (std::isinf(ds.rows[k].crb)) ++inf_cells;
      if (std::isfinite(ds.rows[k].crb) && ds.rows[k].crb < minimum) {
        minimum = ds.rows[k].crb;
        arg = k;
      }
    }
    const bool min_at_corner = (arg == 200 || arg == 200 * 201) &&
                               std::abs(minimum - 1.0 / 3.0) < 1e-10;
    if (inf_cells != 2 || !inf_at_corners) {
      ok = false;
      details.push_back("divergences not confined to (0,0) and (pi,pi): " +
                        std::to_string(inf_cells) + " divergent cells");
    }
    if (!min_at_corner) {
      ok = false;
      details.push_back("minimum not 1/3 at an antipodal corner");
    }
    if (inf_cells == 2 && inf_at_corners && min_at_corner) {
      details.push_back("z-generator panel: divergent exactly at (0,0),(pi,pi); "
                        "minimum 1/3 at the antipodal corners");
    }
  }

  // theta scans on the coincident diagonal at zero phase difference
  {
    SweepConfig cfg;
    cfg.twice_spins = {3, 5, 8, 9, 12, 20, 32};
    cfg.generator = Generator::Sy;
    cfg.theta1 = {0.0, kPi, 401};
    cfg.theta2_mode = Theta2Mode::Diagonal;
    const SweepDataset ds = run_sweep1d(cfg);
    bool flat = true;
    for (const SweepRow& r : ds.rows) {
      if (std::abs(r.crb - sql(Spin(r.twice_spin))) > 1e-9) flat = false;
    }
    if (!flat) {
      ok = false;
      details.push_back("y-generator diagonal scan is not constant at 1/sqrt(2s)");
    } else {
      details.push_back("y-generator diagonal scan constant at 1/sqrt(2s) per spin");
    }

    cfg.generator = Generator::Sx;
    const SweepDataset dx = run_sweep1d(cfg);
    // index 200 is theta = pi/2 within each 401-point spin block
    bool sx_ok = true;
    for (std::size_t block = 0; block < cfg.twice_spins.size(); ++block) {
      if (!std::isinf(dx.rows[block * 401 + 200].crb)) sx_ok = false;
    }
    // s = 4 (twice_spins[2] = 8) block, theta = 0 entry
    const SweepRow& s4_start = dx.rows[2 * 401];
    if (std::abs(s4_start.crb - 0.35) > 5e-3) sx_ok = false;
    if (!sx_ok) {
      ok = false;
      details.push_back("x-generator diagonal scan: divergence at pi/2 or the "
                        "s=4 endpoint value 0.35 not reproduced");
    } else {
      details.push_back("x-generator diagonal scan diverges at pi/2; s=4 "
                        "endpoint within 5e-3 of 0.35");
    }
  }

  // x generator at phase difference pi, several spins: minimum at (pi/2, pi/2)
  {
    SweepConfig cfg;
    cfg.twice_spins = {5, 8, 9, 32};
    cfg.generator = Generator::Sx;
    cfg.phi2 = kPi;
    cfg.theta1 = {0.0, kPi, 101};
    cfg.theta2 = {0.0, kPi, 101};
    const SweepDataset ds = run_sweep2d(cfg);
    bool centers_ok = true;
    for (std::size_t block = 0; block < cfg.twice_spins.size(); ++block) {
      double minimum = std::numeric_limits<double>::infinity();
      std::size_t arg = 0;
      for (std::size_t k = 0; k < 101 * 101; ++k) {
        const SweepRow& r = ds.rows[block * 101 * 101 + k];
        if (std::isfinite(r.crb) && r.crb < minimum) {
          minimum = r.crb;
          arg = k;
        }
      }
      if (arg != 50 * 101 + 50) centers_ok = false;
    }
    if (!centers_ok) {
      ok = false;
      details.push_back("x-generator pi-slice minimum not at (pi/2, pi/2)");
    } else {
      details.push_back("x-generator pi-slice minimum at (pi/2, pi/2) for "
                        "2s = 5, 8, 9, 32");
    }
  }

  record(7, "figure geometry properties", ok, std::move(details));
}

void criterion_8_algebra_suite() {
  bool ok = true;
  std::vector<std::string> details;
  for (int ts = 1; ts <= 20; ++ts) {
    const Spin spin(ts);
    const SpinOperator sx = build_sx(spin), sy = build_sy(spin), sz = build_sz(spin);
    const SpinOperator sp = build_splus(spin), sm = build_sminus(spin);

    bool this_spin_ok =
        sx.entries.hermiticity_defect() < 1e-12 &&
        sy.entries.hermiticity_defect() < 1e-12 &&
        (commutator(sp, sm).entries - cplx(2.0) * sz.entries).max_abs() < 1e-12 &&
        (commutator(sz, sp).entries - sp.entries).max_abs() < 1e-12 &&
        (commutator(sx, sy).entries - cplx(0.0, 1.0) * sz.entries).max_abs() < 1e-12;

    const double s = spin.s();
    CMatrix casimir = sx.entries * sx.entries + sy.entries * sy.entries +
                      sz.entries * sz.entries;
    casimir -= cplx(s * (s + 1.0)) * CMatrix::identity(spin.dimension());
    this_spin_ok = this_spin_ok && casimir.max_abs() < 1e-10;

    for (const SpinOperator* op : {&sx, &sy, &sz}) {
      const HermEigen eig = eigh(op->entries);
      for (std::size_t k = 0; k < spin.dimension(); ++k) {
        this_spin_ok = this_spin_ok && std::abs(eig.values[k] - spin.m_at(k)) < 1e-10;
      }
    }
    if (!this_spin_ok) {
      ok = false;
      details.push_back("algebra violated at 2s=" + std::to_string(ts));
    }
  }

  SplitMix64 rng(888);
  double worst_overlap = 0.0;
  for (int rep = 0; rep < 50; ++rep) {
    const int ts = 1 + static_cast<int>(rng.next() % 20);
    const Spin spin(ts);
    const BlochPoint p1(rng.uniform() * kPi, rng.uniform() * 2.0 * kPi);
    const BlochPoint p2(rng.uniform() * kPi, rng.uniform() * 2.0 * kPi);
    const StateVector a = coherent_state(spin, p1);
    const StateVector b = coherent_state(spin, p2);
    const cplx direct = kernels::ops().dotc(a.amplitudes.data(),
                                            b.amplitudes.data(), a.dimension());
    worst_overlap =
        std::max(worst_overlap, std::abs(overlap_closed_form(spin, p1, p2) - direct));
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "overlap closed form worst |dev| %.3e",
                worst_overlap);
  details.push_back(buf);
  ok = ok && worst_overlap < 1e-12;
  record(8, "generator algebra, casimir, spectra, and overlaps for s <= 10", ok,
         std::move(details));
}

void criterion_9_saturation() {
  const StateFamily noon = make_noon_family(Spin(3), Generator::Sz);
  const EstimationRun run_a = crb_saturation_experiment(noon, 0.1, 10000, 400, 7, 1);
  const EstimationRun run_b = crb_saturation_experiment(noon, 0.1, 10000, 400, 7, 8);
  const EstimationRun run_c = crb_saturation_experiment(noon, 0.1, 10000, 400, 7, 8);

  bool ok = true;
  std::vector<std::string> details;
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "empirical variance / (1/nF) = %.4f (target [0.85, 1.25])",
                run_a.ratio);
  details.push_back(buf);
  if (!(run_a.ratio >= 0.85 && run_a.ratio <= 1.25)) {
    ok = false;
    details.push_back("ratio outside the acceptance window");
  }

  const bool reproducible = run_a.estimates == run_b.estimates &&
                            run_b.estimates == run_c.estimates &&
                            run_a.report() == run_b.report();
  if (!reproducible) {
    ok = false;
    details.push_back("estimates differ across invocations or worker counts");
  } else {
    details.push_back("bit-identical across repeat runs and jobs = 1 vs 8");
  }
  record(9, "Monte-Carlo estimator saturates the bound reproducibly", ok,
         std::move(details));
}

}  // namespace

int main() {
  criterion_1_heisenberg_law();
  criterion_2_sql_anchor();
  criterion_3_quoted_values();
  criterion_4_oracle_triangle();
  criterion_5_analytic_vs_numeric();
  criterion_6_errata_report();
  criterion_7_figure_geometry();
  criterion_8_algebra_suite();
  criterion_9_saturation();

  int failures = 0;
  for (const Criterion& c : g_results) {
    std::printf("[%s] %d. %s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str());
    for (const std::string& d : c.details) std::printf("        %s\n", d.c_str());
    if (!c.passed) ++failures;
  }
  std::printf("%zu/%zu criteria passed\n", g_results.size() - failures,
              g_results.size());
  return failures;
}
