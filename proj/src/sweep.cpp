// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincat/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spincat/closed_forms.hpp"
#include "spincat/errors.hpp"

namespace spincat {

namespace {

constexpr double kPoleMargin = 1e-6;

std::string fmt17(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(const std::string& tok) {
  if (tok == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (tok == "inf") return std::numeric_limits<double>::infinity();
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  return std::stod(tok);
}

}  // namespace

const char* to_string(EngineChoice e) {
  switch (e) {
    case EngineChoice::Numeric: return "numeric";
    case EngineChoice::Analytic: return "analytic";
    case EngineChoice::Both: return "both";
  }
  return "?";
}

std::optional<EngineChoice> engine_from_string(std::string_view name) {
  if (name == "numeric") return EngineChoice::Numeric;
  if (name == "analytic") return EngineChoice::Analytic;
  if (name == "both") return EngineChoice::Both;
  return std::nullopt;
}

void SweepConfig::validate() const {
  if (twice_spins.empty()) {
    throw std::invalid_argument("sweep config: at least one spin required");
  }
  for (int ts : twice_spins) Spin{ts};
  if (theta1.steps < 2 || (theta2_mode == Theta2Mode::Range && theta2.steps < 2)) {
    throw std::invalid_argument("sweep config: ranges need at least 2 steps");
  }
  const auto in_range = [](const AxisRange& r) {
    return r.lo >= 0.0 && r.hi <= std::numbers::pi && r.lo <= r.hi;
  };
  if (!in_range(theta1) || (theta2_mode == Theta2Mode::Range && !in_range(theta2))) {
    throw std::invalid_argument("sweep config: theta ranges must lie in [0, pi]");
  }
  if (theta2_mode == Theta2Mode::Fixed &&
      (theta2_fixed < 0.0 || theta2_fixed > std::numbers::pi)) {
    throw std::invalid_argument("sweep config: fixed theta2 must lie in [0, pi]");
  }
  if (repetitions < 1) {
    throw std::invalid_argument("sweep config: repetitions must be >= 1");
  }
}

namespace {

double analytic_qfi(Spin spin, Generator g, double t1, double t2, double p1,
                    double p2) {
  if (spin.twice_s() == 3) {
    return spin32_qfi(g, t1, t2, p1, p2);
  }
  return qfi_general_s(spin, BlochPoint(t1, p1), BlochPoint(t2, p2), g);
}

}  // namespace

SweepRow evaluate_point(Spin spin, Generator g, double theta1, double theta2,
                        double phi1, double phi2, EngineChoice engine,
                        std::uint64_t repetitions) {
  SweepRow row;
  row.theta1 = theta1;
  row.theta2 = theta2;
  row.phi1 = phi1;
  row.phi2 = phi2;
  row.twice_spin = spin.twice_s();
  row.generator = g;
  row.engine = engine;

  // the z-parametrized closed forms are singular at the south pole; reroute
  const bool pole_adjacent = theta1 >= std::numbers::pi - kPoleMargin ||
                             theta2 >= std::numbers::pi - kPoleMargin;
  EngineChoice effective = engine;
  if (engine != EngineChoice::Numeric && pole_adjacent &&
      spin.twice_s() != 3) {
    effective = EngineChoice::Numeric;
  }

  try {
    double f = 0.0;
    switch (effective) {
      case EngineChoice::Numeric: {
        const CatParams params{spin, BlochPoint(theta1, phi1),
                               BlochPoint(theta2, phi2)};
        f = qfi_pure(cat_state(params), build_generator(spin, g));
        break;
      }
      case EngineChoice::Analytic:
        f = analytic_qfi(spin, g, theta1, theta2, phi1, phi2);
        break;
      case EngineChoice::Both: {
        const CatParams params{spin, BlochPoint(theta1, phi1),
                               BlochPoint(theta2, phi2)};
        f = qfi_pure(cat_state(params), build_generator(spin, g));
        break;
      }
    }
    row.engine = effective == EngineChoice::Both ? EngineChoice::Numeric : effective;
    row.qfi = f;
    row.crb = crb(f, repetitions).crb;
  } catch (const DegenerateSuperposition&) {
    row.qfi = std::numeric_limits<double>::quiet_NaN();
    row.crb = std::numeric_limits<double>::quiet_NaN();
    row.engine = EngineChoice::Numeric;
  }
  return row;
}

namespace {

// evaluate all cells of a prepared parameter list with a worker pool,
// writing results by index
void evaluate_cells(const SweepConfig& config,
                    const std::vector<SweepRow>& points,
                    std::vector<SweepRow>& out,
                    std::optional<double>& max_dev) {
  out.resize(points.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::uint64_t> dev_bits{0};   // max |analytic-numeric| as bits

  const bool both = config.engine == EngineChoice::Both;
  unsigned jobs = config.jobs == 0
                      ? std::max(1u, std::thread::hardware_concurrency())
                      : config.jobs;
  jobs = std::min<std::size_t>(jobs, points.size() == 0 ? 1 : points.size());

  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      const SweepRow& pt = points[i];
      const Spin spin{pt.twice_spin};
      out[i] = evaluate_point(spin, pt.generator, pt.theta1, pt.theta2, pt.phi1,
                              pt.phi2, config.engine, config.repetitions);
      if (both && std::isfinite(out[i].crb)) {
        SweepRow arow = evaluate_point(spin, pt.generator, pt.theta1, pt.theta2,
                                       pt.phi1, pt.phi2, EngineChoice::Analytic,
                                       config.repetitions);
        if (std::isfinite(arow.crb)) {
          const double dev = std::abs(arow.crb - out[i].crb);
          // lock-free running max over nonnegative doubles (monotone bit order)
          std::uint64_t bits;
          std::memcpy(&bits, &dev, sizeof bits);
          std::uint64_t cur = dev_bits.load();
          while (bits > cur && !dev_bits.compare_exchange_weak(cur, bits)) {
          }
        }
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();

  if (both) {
    const std::uint64_t bits = dev_bits.load();
    double dev;
    std::memcpy(&dev, &bits, sizeof dev);
    max_dev = dev;
  }
}

}  // namespace

SweepDataset run_sweep2d(const SweepConfig& config) {
  config.validate();
  if (config.theta2_mode != Theta2Mode::Range) {
    throw std::invalid_argument("run_sweep2d: theta2 must be a range");
  }

  std::vector<SweepRow> points;
  points.reserve(config.twice_spins.size() * config.theta1.steps *
                 config.theta2.steps);
  for (int ts : config.twice_spins) {
    for (std::size_t i = 0; i < config.theta1.steps; ++i) {
      for (std::size_t j = 0; j < config.theta2.steps; ++j) {
        SweepRow pt;
        pt.theta1 = config.theta1.at(i);
        pt.theta2 = config.theta2.at(j);
        pt.phi1 = config.phi1;
        pt.phi2 = config.phi2;
        pt.twice_spin = ts;
        pt.generator = config.generator;
        points.push_back(pt);
      }
    }
  }

  SweepDataset ds;
  ds.theta1_steps = config.theta1.steps;
  ds.theta2_steps = config.theta2.steps;
  evaluate_cells(config, points, ds.rows, ds.max_engine_deviation);
  return ds;
}

SweepDataset run_sweep1d(const SweepConfig& config) {
  config.validate();
  if (config.theta2_mode == Theta2Mode::Range) {
    throw std::invalid_argument(
        "run_sweep1d: theta2 must be fixed or diagonal");
  }

  std::vector<SweepRow> points;
  points.reserve(config.twice_spins.size() * config.theta1.steps);
  for (int ts : config.twice_spins) {
    for (std::size_t i = 0; i < config.theta1.steps; ++i) {
      SweepRow pt;
      pt.theta1 = config.theta1.at(i);
      pt.theta2 = config.theta2_mode == Theta2Mode::Diagonal ? pt.theta1
                                                             : config.theta2_fixed;
      pt.phi1 = config.phi1;
      pt.phi2 = config.phi2;
      pt.twice_spin = ts;
      pt.generator = config.generator;
      points.push_back(pt);
    }
  }

  SweepDataset ds;
  ds.theta1_steps = config.theta1.steps;
  ds.theta2_steps = 1;
  evaluate_cells(config, points, ds.rows, ds.max_engine_deviation);
  return ds;
}

std::string SweepDataset::to_csv() const {
  std::ostringstream out;
  out << "theta1,theta2,phi1,phi2,spin_times_2,generator,qfi,crb,engine\n";
  for (const SweepRow& r : rows) {
    out << fmt17(r.theta1) << ',' << fmt17(r.theta2) << ',' << fmt17(r.phi1)
        << ',' << fmt17(r.phi2) << ',' << r.twice_spin << ','
        << to_string(r.generator) << ',' << fmt17(r.qfi) << ',' << fmt17(r.crb)
        << ',' << to_string(r.engine) << '\n';
  }
  out << "# theta1_steps=" << theta1_steps << " theta2_steps=" << theta2_steps;
  if (max_engine_deviation) {
    out << " max_engine_deviation=" << fmt17(*max_engine_deviation);
  }
  out << '\n';
  return out.str();
}

SweepDataset SweepDataset::from_csv(std::istream& in) {
  SweepDataset ds;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string tok;
      while (meta >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
        if (key == "theta1_steps") ds.theta1_steps = std::stoul(val);
        if (key == "theta2_steps") ds.theta2_steps = std::stoul(val);
        if (key == "max_engine_deviation") ds.max_engine_deviation = parse_double(val);
      }
      continue;
    }
    if (!header_seen) {
      header_seen = true;   // column header
      continue;
    }
    std::istringstream cells(line);
    std::string tok;
    std::vector<std::string> toks;
    while (std::getline(cells, tok, ',')) toks.push_back(tok);
    if (toks.size() != 9) {
      throw std::invalid_argument("sweep csv: malformed row: " + line);
    }
    SweepRow r;
    r.theta1 = parse_double(toks[0]);
    r.theta2 = parse_double(toks[1]);
    r.phi1 = parse_double(toks[2]);
    r.phi2 = parse_double(toks[3]);
    r.twice_spin = std::stoi(toks[4]);
    const auto g = generator_from_string(toks[5]);
    const auto e = engine_from_string(toks[8]);
    if (!g || !e) {
      throw std::invalid_argument("sweep csv: bad generator/engine token");
    }
    r.generator = *g;
    r.qfi = parse_double(toks[6]);
    r.crb = parse_double(toks[7]);
    r.engine = *e;
    ds.rows.push_back(r);
  }
  return ds;
}

}  // namespace spincat
