// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0
//
// spincat command-line front end.
//
//   qfi       bound at a single parameter point
//   sweep2d   theta1 x theta2 grid sweep -> CSV (+ heatmap)
//   sweep1d   one free theta (fixed or diagonal second angle) -> CSV
//   verify    consistency suites (algebra, oracles, analytic, hl-law, errata)
//   estimate  Monte-Carlo phase estimation against the precision bound
//   render    CSV dataset -> portable pixmap heatmap
//
// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 numerical failure.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spincat/closed_forms.hpp"
#include "spincat/errors.hpp"
#include "spincat/estimation.hpp"
#include "spincat/heatmap.hpp"
#include "spincat/kernels.hpp"
#include "spincat/rng.hpp"
#include "spincat/sweep.hpp"

namespace {

using namespace spincat;
using nlohmann::json;

constexpr double kPi = std::numbers::pi;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerifyFailure = 2;
constexpr int kExitNumericalFailure = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// option plumbing

struct AxisSpec {
  enum class Kind { Unset, Range, Fixed, Diagonal } kind = Kind::Unset;
  AxisRange range;
  double fixed = 0.0;
};

AxisSpec parse_axis(const std::string& text) {
  AxisSpec spec;
  if (text == "diag" || text == "diagonal") {
    spec.kind = AxisSpec::Kind::Diagonal;
    return spec;
  }
  if (text.rfind("fixed:", 0) == 0) {
    spec.kind = AxisSpec::Kind::Fixed;
    spec.fixed = std::stod(text.substr(6));
    return spec;
  }
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) {
    spec.kind = AxisSpec::Kind::Fixed;
    spec.fixed = std::stod(text);
    return spec;
  }
  const auto c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw UsageError("axis spec must be lo:hi:steps, fixed:v, or a number: " + text);
  }
  spec.kind = AxisSpec::Kind::Range;
  spec.range.lo = std::stod(text.substr(0, c1));
  spec.range.hi = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
  const long steps = std::stol(text.substr(c2 + 1));
  if (steps < 2) throw UsageError("axis spec needs at least 2 steps");
  spec.range.steps = static_cast<std::size_t>(steps);
  return spec;
}

Generator parse_generator(const std::string& name) {
  const auto g = generator_from_string(name);
  if (!g) throw UsageError("unknown generator: " + name);
  return *g;
}

EngineChoice parse_engine(const std::string& name) {
  const auto e = engine_from_string(name);
  if (!e) throw UsageError("unknown engine: " + name);
  return *e;
}

// Options shared by the sweep subcommands; JSON config first, flags override.
struct SweepCliOptions {
  std::string config_path;
  std::vector<int> spins;
  std::string generator;
  std::optional<double> phi1, phi2;
  std::string theta1, theta2;
  std::string engine;
  std::optional<std::uint64_t> repetitions;
  std::optional<double> cap;
  std::optional<unsigned> jobs;
  std::string out_csv, out_heatmap;
};

void add_sweep_options(CLI::App* cmd, SweepCliOptions& opt) {
  cmd->add_option("--config", opt.config_path, "JSON config file");
  cmd->add_option("--spin", opt.spins, "twice the spin value (repeatable)");
  cmd->add_option("--generator", opt.generator, "sx|sy|sz");
  cmd->add_option("--phi1", opt.phi1, "azimuth of the first component [rad]");
  cmd->add_option("--phi2", opt.phi2, "azimuth of the second component [rad]");
  cmd->add_option("--theta1", opt.theta1, "lo:hi:steps");
  cmd->add_option("--theta2", opt.theta2, "lo:hi:steps | fixed:v | diag");
  cmd->add_option("--engine", opt.engine, "numeric|analytic|both");
  cmd->add_option("--n", opt.repetitions, "experiment repetitions in the bound");
  cmd->add_option("--cap", opt.cap, "heatmap clamp value");
  cmd->add_option("--jobs", opt.jobs, "worker threads (0 = hardware)");
  cmd->add_option("--out", opt.out_csv, "CSV output path");
  cmd->add_option("--heatmap", opt.out_heatmap, "PPM output path");
}

AxisSpec axis_from_json(const json& j) {
  AxisSpec spec;
  if (j.is_string()) {
    return parse_axis(j.get<std::string>());
  }
  if (j.is_number()) {
    spec.kind = AxisSpec::Kind::Fixed;
    spec.fixed = j.get<double>();
    return spec;
  }
  if (j.contains("fixed")) {
    spec.kind = AxisSpec::Kind::Fixed;
    spec.fixed = j.at("fixed").get<double>();
    return spec;
  }
  spec.kind = AxisSpec::Kind::Range;
  spec.range.lo = j.at("lo").get<double>();
  spec.range.hi = j.at("hi").get<double>();
  spec.range.steps = j.at("steps").get<std::size_t>();
  return spec;
}

void apply_axis(const AxisSpec& spec, bool is_theta2, SweepConfig& cfg) {
  switch (spec.kind) {
    case AxisSpec::Kind::Unset:
      return;
    case AxisSpec::Kind::Range:
      if (is_theta2) {
        cfg.theta2 = spec.range;
        cfg.theta2_mode = Theta2Mode::Range;
      } else {
        cfg.theta1 = spec.range;
      }
      return;
    case AxisSpec::Kind::Fixed:
      if (!is_theta2) throw UsageError("theta1 must be a range in sweeps");
      cfg.theta2_fixed = spec.fixed;
      cfg.theta2_mode = Theta2Mode::Fixed;
      return;
    case AxisSpec::Kind::Diagonal:
      if (!is_theta2) throw UsageError("only theta2 can be diagonal");
      cfg.theta2_mode = Theta2Mode::Diagonal;
      return;
  }
}

SweepConfig build_sweep_config(const SweepCliOptions& opt) {
  SweepConfig cfg;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw UsageError("cannot open config file: " + opt.config_path);
    json j;
    in >> j;
    if (j.contains("spins")) cfg.twice_spins = j.at("spins").get<std::vector<int>>();
    if (j.contains("generator"))
      cfg.generator = parse_generator(j.at("generator").get<std::string>());
    if (j.contains("phi1")) cfg.phi1 = j.at("phi1").get<double>();
    if (j.contains("phi2")) cfg.phi2 = j.at("phi2").get<double>();
    if (j.contains("theta1")) apply_axis(axis_from_json(j.at("theta1")), false, cfg);
    if (j.contains("theta2")) apply_axis(axis_from_json(j.at("theta2")), true, cfg);
    if (j.contains("engine"))
      cfg.engine = parse_engine(j.at("engine").get<std::string>());
    if (j.contains("n")) cfg.repetitions = j.at("n").get<std::uint64_t>();
    if (j.contains("cap")) cfg.crb_cap = j.at("cap").get<double>();
    if (j.contains("jobs")) cfg.jobs = j.at("jobs").get<unsigned>();
    if (j.contains("out")) cfg.out_csv = j.at("out").get<std::string>();
    if (j.contains("heatmap")) cfg.out_heatmap = j.at("heatmap").get<std::string>();
  }
  if (!opt.spins.empty()) cfg.twice_spins = opt.spins;
  if (!opt.generator.empty()) cfg.generator = parse_generator(opt.generator);
  if (opt.phi1) cfg.phi1 = *opt.phi1;
  if (opt.phi2) cfg.phi2 = *opt.phi2;
  if (!opt.theta1.empty()) apply_axis(parse_axis(opt.theta1), false, cfg);
  if (!opt.theta2.empty()) apply_axis(parse_axis(opt.theta2), true, cfg);
  if (!opt.engine.empty()) cfg.engine = parse_engine(opt.engine);
  if (opt.repetitions) cfg.repetitions = *opt.repetitions;
  if (opt.cap) cfg.crb_cap = *opt.cap;
  if (opt.jobs) cfg.jobs = *opt.jobs;
  if (!opt.out_csv.empty()) cfg.out_csv = opt.out_csv;
  if (!opt.out_heatmap.empty()) cfg.out_heatmap = opt.out_heatmap;
  return cfg;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::string heatmap_path_for_spin(const std::string& base, int twice_spin,
                                  bool multi) {
  if (!multi) return base;
  const auto dot = base.rfind('.');
  const std::string suffix = "_2s" + std::to_string(twice_spin);
  if (dot == std::string::npos) return base + suffix;
  return base.substr(0, dot) + suffix + base.substr(dot);
}

void emit_outputs(const SweepConfig& cfg, const SweepDataset& ds) {
  if (!cfg.out_csv.empty()) {
    write_file(cfg.out_csv, ds.to_csv());
    std::cout << "wrote " << cfg.out_csv << " (" << ds.rows.size() << " rows)\n";
  }
  if (!cfg.out_heatmap.empty()) {
    if (ds.theta2_steps < 2) {
      throw UsageError("heatmap output requires a 2-D sweep");
    }
    const bool multi = cfg.twice_spins.size() > 1;
    for (int ts : cfg.twice_spins) {
      const std::string path = heatmap_path_for_spin(cfg.out_heatmap, ts, multi);
      write_file(path, render_heatmap(ds, ts, cfg.crb_cap).to_ppm());
      std::cout << "wrote " << path << "\n";
    }
  }
  if (ds.max_engine_deviation) {
    std::printf("max |analytic - numeric| deviation: %.3e\n",
                *ds.max_engine_deviation);
  }
}

// ---------------------------------------------------------------------------
// verify suites

struct VerifyContext {
  int checks = 0;
  int failures = 0;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      std::cout << "  FAIL  " << what << "\n";
    }
  }
};

void verify_algebra(VerifyContext& v) {
  std::cout << "[algebra] generator representations for s = 1/2 .. 10\n";
  for (int ts = 1; ts <= 20; ++ts) {
    const Spin spin(ts);
    const SpinOperator sx = build_sx(spin), sy = build_sy(spin), sz = build_sz(spin);
    const SpinOperator sp = build_splus(spin), sm = build_sminus(spin);
    const std::string tag = " (2s=" + std::to_string(ts) + ")";

    v.check(sx.entries.hermiticity_defect() < 1e-12, "sx hermitian" + tag);
    v.check(sy.entries.hermiticity_defect() < 1e-12, "sy hermitian" + tag);
    v.check((commutator(sp, sm).entries - cplx(2.0) * sz.entries).max_abs() < 1e-12,
            "[s+, s-] = 2 sz" + tag);
    v.check((commutator(sz, sp).entries - sp.entries).max_abs() < 1e-12,
            "[sz, s+] = s+" + tag);
    v.check((commutator(sx, sy).entries - cplx(0.0, 1.0) * sz.entries).max_abs() <
                1e-12,
            "[sx, sy] = i sz" + tag);

    const double s = spin.s();
    CMatrix casimir = sx.entries * sx.entries + sy.entries * sy.entries +
                      sz.entries * sz.entries;
    casimir -= cplx(s * (s + 1.0)) * CMatrix::identity(spin.dimension());
    v.check(casimir.max_abs() < 1e-10, "casimir s(s+1)" + tag);

    const HermEigen eig = eigh(sx.entries);
    bool spectrum_ok = true;
    for (std::size_t k = 0; k < spin.dimension(); ++k) {
      spectrum_ok = spectrum_ok && std::abs(eig.values[k] - spin.m_at(k)) < 1e-10;
    }
    v.check(spectrum_ok, "sx spectrum {-s..s}" + tag);
  }

  std::cout << "[algebra] overlap closed form vs inner product\n";
  SplitMix64 rng(2026);
  for (int rep = 0; rep < 40; ++rep) {
    const int ts = 1 + static_cast<int>(rng.next() % 20);
    const Spin spin(ts);
    const BlochPoint p1(rng.uniform() * kPi, rng.uniform() * 2.0 * kPi);
    const BlochPoint p2(rng.uniform() * kPi, rng.uniform() * 2.0 * kPi);
    const StateVector a = coherent_state(spin, p1);
    const StateVector b = coherent_state(spin, p2);
    const cplx direct = kernels::ops().dotc(a.amplitudes.data(),
                                            b.amplitudes.data(), a.dimension());
    v.check(std::abs(overlap_closed_form(spin, p1, p2) - direct) < 1e-12,
            "overlap closed form (2s=" + std::to_string(ts) + ")");
  }
}

void verify_oracles(VerifyContext& v) {
  std::cout << "[oracles] three-route agreement on 50 random families\n";
  SplitMix64 rng(515253);
  for (int rep = 0; rep < 50; ++rep) {
    const int ts = 1 + static_cast<int>(rng.next() % 12);   // s <= 6
    const Spin spin(ts);
    const CatParams params{spin,
                           BlochPoint(rng.uniform() * kPi, rng.uniform() * 2.0 * kPi),
                           BlochPoint(rng.uniform() * kPi, rng.uniform() * 2.0 * kPi)};
    const Generator g = static_cast<Generator>(rng.next() % 3);
    const StateFamily family = make_cat_family(params, g);

    const double f_pure = qfi_pure(family.base(), family.generator());
    const double f_sld = qfi_sld(family, 0.0);
    const double f_fd = qfi_fidelity_fd(family, 0.0);
    const double scale = std::max(f_pure, 1.0);
    const std::string tag = " (case " + std::to_string(rep) + ", 2s=" +
                            std::to_string(ts) + ", " + to_string(g) + ")";
    v.check(std::abs(f_pure - f_sld) / scale <= 1e-4, "variance vs sld" + tag);
    v.check(std::abs(f_pure - f_fd) / scale <= 1e-4, "variance vs fidelity" + tag);
  }
}

void verify_analytic(VerifyContext& v) {
  std::cout << "[analytic] closed forms vs the numeric engine\n";
  SplitMix64 rng(777);
  const auto random_theta = [&] { return 1e-3 + rng.uniform() * (kPi - 2e-3); };

  for (Generator g : {Generator::Sx, Generator::Sy, Generator::Sz}) {
    double worst32 = 0.0;
    for (int rep = 0; rep < 200; ++rep) {
      const double t1 = random_theta(), t2 = random_theta();
      const double p1 = rng.uniform() * 2.0 * kPi, p2 = rng.uniform() * 2.0 * kPi;
      const CatParams params{Spin(3), BlochPoint(t1, p1), BlochPoint(t2, p2)};
      const double numeric = qfi_pure(cat_state(params), build_generator(Spin(3), g));
      const double closed = spin32_qfi(g, t1, t2, p1, p2);
      worst32 = std::max(worst32,
                         std::abs(closed - numeric) / std::max(numeric, 1e-12));
    }
    char line[128];
    std::snprintf(line, sizeof(line), "spin-3/2 %s closed form, 200 points (max dev %.2e)",
                  to_string(g), worst32);
    v.check(worst32 <= 1e-9, line);
  }

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
    char line[128];
    std::snprintf(line, sizeof(line), "general-s %s (s < 10, max dev %.2e)",
                  to_string(g), worst_small);
    v.check(worst_small <= 1e-9, line);
    std::snprintf(line, sizeof(line), "general-s %s (s >= 10, max dev %.2e)",
                  to_string(g), worst_large);
    v.check(worst_large <= 1e-6, line);
  }
}

void verify_hl_law(VerifyContext& v) {
  std::cout << "[hl-law] antipodal cat under sz reaches 1/(2s)\n";
  SplitMix64 rng(31415);
  for (int ts = 1; ts <= 32; ++ts) {
    const Spin spin(ts);
    const double phi2 = rng.uniform() * 2.0 * kPi;
    const CatParams params{spin, BlochPoint(0.0, 0.0), BlochPoint(kPi, phi2)};
    const double f = qfi_pure(cat_state(params), build_sz(spin));
    const double bound = crb(f).crb;
    v.check(std::abs(bound - hl(spin)) < 1e-10,
            "2s=" + std::to_string(ts) + " bound = 1/(2s)");
  }
}

int run_verify(const std::vector<std::string>& suites) {
  VerifyContext v;
  bool ran_checks = false;
  for (const std::string& suite : suites) {
    if (suite == "algebra") {
      verify_algebra(v);
      ran_checks = true;
    } else if (suite == "oracles") {
      verify_oracles(v);
      ran_checks = true;
    } else if (suite == "analytic") {
      verify_analytic(v);
      ran_checks = true;
    } else if (suite == "hl-law") {
      verify_hl_law(v);
      ran_checks = true;
    } else if (suite == "errata") {
      // informational: never fails the run
      std::cout << build_errata_report().to_text();
    } else {
      throw UsageError("unknown verify suite: " + suite);
    }
  }
  if (ran_checks) {
    std::cout << v.checks - v.failures << "/" << v.checks << " checks passed\n";
  }
  return v.failures == 0 ? kExitOk : kExitVerifyFailure;
}

// ---------------------------------------------------------------------------

int run_qfi_point(int twice_spin, const std::string& generator,
                  double theta1, double theta2, double phi1, double phi2,
                  const std::string& engine, std::uint64_t n) {
  const Spin spin(twice_spin);
  const Generator g = parse_generator(generator);
  const EngineChoice e = engine.empty() ? EngineChoice::Numeric : parse_engine(engine);

  const auto print_result = [&](const char* label, double f) {
    const QcrbResult r = crb(f, n);
    std::printf("%-9s qfi = %.12g   crb = ", label, r.qfi);
    if (r.divergent()) {
      std::printf("inf\n");
    } else {
      std::printf("%.12g\n", r.crb);
    }
  };

  double f_numeric = 0.0, f_analytic = 0.0;
  if (e != EngineChoice::Analytic) {
    const CatParams params{spin, BlochPoint(theta1, phi1), BlochPoint(theta2, phi2)};
    f_numeric = qfi_pure(cat_state(params), build_generator(spin, g));
    print_result("numeric", f_numeric);
  }
  bool have_analytic = false;
  if (e != EngineChoice::Numeric) {
    try {
      if (twice_spin == 3) {
        f_analytic = spin32_qfi(g, theta1, theta2, phi1, phi2);
      } else {
        f_analytic = qfi_general_s(spin, BlochPoint(theta1, phi1),
                                   BlochPoint(theta2, phi2), g);
      }
      have_analytic = true;
      print_result("analytic", f_analytic);
    } catch (const PoleSingularity&) {
      if (e == EngineChoice::Analytic) throw;
      std::printf("analytic  (pole-adjacent point; closed form not defined)\n");
    }
  }
  if (e == EngineChoice::Both && have_analytic) {
    std::printf("deviation %.3e\n", std::abs(f_numeric - f_analytic));
  }
  return kExitOk;
}

int run_estimate(int twice_spin, const std::string& generator, double theta1,
                 double theta2, double phi1, double phi2, double zeta,
                 std::uint64_t n, std::uint64_t m, std::uint64_t seed,
                 unsigned jobs) {
  const Spin spin(twice_spin);
  const CatParams params{spin, BlochPoint(theta1, phi1), BlochPoint(theta2, phi2)};
  const StateFamily family = make_cat_family(params, parse_generator(generator));
  const EstimationRun run = crb_saturation_experiment(family, zeta, n, m, seed, jobs);
  std::cout << run.report();
  return kExitOk;
}

int run_render(const std::string& in_path, const std::string& out_path,
               double cap, int twice_spin) {
  std::ifstream in(in_path);
  if (!in) throw UsageError("cannot open dataset: " + in_path);
  const SweepDataset ds = SweepDataset::from_csv(in);
  if (ds.rows.empty()) throw UsageError("dataset is empty");
  const int ts = twice_spin > 0 ? twice_spin : ds.rows.front().twice_spin;
  write_file(out_path, render_heatmap(ds, ts, cap).to_ppm());
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"precision bounds for superposed spin coherent states"};
  app.require_subcommand(1);

  // qfi
  int q_spin = 3;
  std::string q_generator = "sz";
  double q_theta1 = 0.0, q_theta2 = kPi, q_phi1 = 0.0, q_phi2 = 0.0;
  std::string q_engine = "both";
  std::uint64_t q_n = 1;
  CLI::App* qfi_cmd = app.add_subcommand("qfi", "bound at a single point");
  qfi_cmd->add_option("--spin", q_spin, "twice the spin value");
  qfi_cmd->add_option("--generator", q_generator, "sx|sy|sz");
  qfi_cmd->add_option("--theta1", q_theta1, "first polar angle [rad]");
  qfi_cmd->add_option("--theta2", q_theta2, "second polar angle [rad]");
  qfi_cmd->add_option("--phi1", q_phi1, "first azimuth [rad]");
  qfi_cmd->add_option("--phi2", q_phi2, "second azimuth [rad]");
  qfi_cmd->add_option("--engine", q_engine, "numeric|analytic|both");
  qfi_cmd->add_option("--n", q_n, "experiment repetitions in the bound");

  // sweep2d / sweep1d
  SweepCliOptions s2_opt, s1_opt;
  CLI::App* sweep2_cmd = app.add_subcommand("sweep2d", "theta1 x theta2 grid");
  add_sweep_options(sweep2_cmd, s2_opt);
  CLI::App* sweep1_cmd = app.add_subcommand("sweep1d", "single-theta sweep");
  add_sweep_options(sweep1_cmd, s1_opt);

  // verify
  std::vector<std::string> suites;
  CLI::App* verify_cmd = app.add_subcommand("verify", "consistency suites");
  verify_cmd->add_option("suite", suites,
                         "algebra|oracles|analytic|hl-law|errata (default all)");

  // estimate
  int e_spin = 3;
  std::string e_generator = "sz";
  double e_theta1 = 0.0, e_theta2 = kPi, e_phi1 = 0.0, e_phi2 = 0.0;
  double e_zeta = 0.1;
  std::uint64_t e_n = 10000, e_m = 400, e_seed = 7;
  unsigned e_jobs = 0;
  CLI::App* estimate_cmd =
      app.add_subcommand("estimate", "Monte-Carlo bound saturation");
  estimate_cmd->add_option("--spin", e_spin, "twice the spin value");
  estimate_cmd->add_option("--generator", e_generator, "sx|sy|sz");
  estimate_cmd->add_option("--theta1", e_theta1, "first polar angle [rad]");
  estimate_cmd->add_option("--theta2", e_theta2, "second polar angle [rad]");
  estimate_cmd->add_option("--phi1", e_phi1, "first azimuth [rad]");
  estimate_cmd->add_option("--phi2", e_phi2, "second azimuth [rad]");
  estimate_cmd->add_option("--zeta", e_zeta, "true phase");
  estimate_cmd->add_option("--n", e_n, "shots per experiment");
  estimate_cmd->add_option("--m", e_m, "experiments");
  estimate_cmd->add_option("--seed", e_seed, "random seed");
  estimate_cmd->add_option("--jobs", e_jobs, "worker threads (0 = hardware)");

  // render
  std::string r_in, r_out;
  double r_cap = 1.0;
  int r_spin = 0;
  CLI::App* render_cmd = app.add_subcommand("render", "CSV -> PPM heatmap");
  render_cmd->add_option("--in", r_in, "input CSV dataset")->required();
  render_cmd->add_option("--heatmap", r_out, "output PPM path")->required();
  render_cmd->add_option("--cap", r_cap, "clamp value");
  render_cmd->add_option("--spin", r_spin, "dataset block to render (twice s)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (qfi_cmd->parsed()) {
      return run_qfi_point(q_spin, q_generator, q_theta1, q_theta2, q_phi1,
                           q_phi2, q_engine, q_n);
    }
    if (sweep2_cmd->parsed()) {
      const SweepConfig cfg = build_sweep_config(s2_opt);
      const SweepDataset ds = run_sweep2d(cfg);
      emit_outputs(cfg, ds);
      return kExitOk;
    }
    if (sweep1_cmd->parsed()) {
      SweepConfig cfg = build_sweep_config(s1_opt);
      if (cfg.theta2_mode == Theta2Mode::Range) {
        throw UsageError("sweep1d needs --theta2 fixed:v or diag");
      }
      const SweepDataset ds = run_sweep1d(cfg);
      emit_outputs(cfg, ds);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      if (suites.empty()) {
        suites = {"algebra", "oracles", "analytic", "hl-law", "errata"};
      }
      return run_verify(suites);
    }
    if (estimate_cmd->parsed()) {
      return run_estimate(e_spin, e_generator, e_theta1, e_theta2, e_phi1,
                          e_phi2, e_zeta, e_n, e_m, e_seed, e_jobs);
    }
    if (render_cmd->parsed()) {
      return run_render(r_in, r_out, r_cap, r_spin);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumericalFailure;
  }
  return kExitUsage;
}
