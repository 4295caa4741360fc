// Copyright 2026 The SpinCat Authors
// SPDX-License-Identifier: Apache-2.0

#include "spincat/estimation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spincat/errors.hpp"
#include "spincat/kernels.hpp"
#include "spincat/rng.hpp"

namespace spincat {

MeasurementModel::MeasurementModel(StateFamily family, CMatrix basis)
    : family_(std::move(family)), basis_(std::move(basis)),
      basis_adjoint_(basis_.adjoint()) {
  if (basis_.rows() != family_.dimension() || basis_.cols() != family_.dimension()) {
    throw std::invalid_argument("MeasurementModel: basis dimension mismatch");
  }
  // columns must be orthonormal
  const CMatrix gram = basis_adjoint_ * basis_;
  CMatrix defect = gram - CMatrix::identity(basis_.cols());
  if (defect.max_abs() > 1e-10) {
    throw std::invalid_argument("MeasurementModel: basis is not orthonormal");
  }
}

std::vector<double> MeasurementModel::outcome_probabilities(double zeta) const {
  const StateVector psi = family_.evolved(zeta);
  const std::size_t d = psi.dimension();
  std::vector<cplx> projected(d);
  kernels::matvec(basis_adjoint_.data(), d, d, psi.amplitudes.data(),
                  projected.data());
  std::vector<double> p(d);
  for (std::size_t k = 0; k < d; ++k) p[k] = std::norm(projected[k]);
  return p;
}

MeasurementModel sld_measurement_basis(const StateFamily& family,
                                       double zeta_ref, double delta) {
  const std::size_t d = family.dimension();
  const auto outer = [&](double z) {
    const StateVector psi = family.evolved(z);
    CMatrix rho(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        rho(i, j) = psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
      }
    }
    return rho;
  };

  const CMatrix rho = outer(zeta_ref);
  CMatrix drho = outer(zeta_ref + delta) - outer(zeta_ref - delta);
  drho *= cplx(1.0 / (2.0 * delta));

  const CMatrix l = sld_operator(rho, drho);
  const HermEigen eig = eigh(l);
  return MeasurementModel(family, eig.vectors);
}

MeasurementModel computational_basis_measurement(const StateFamily& family) {
  return MeasurementModel(family, CMatrix::identity(family.dimension()));
}

std::vector<std::uint64_t> simulate_outcomes(const MeasurementModel& model,
                                             double true_zeta, std::uint64_t n,
                                             std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("simulate_outcomes: n must be >= 1");
  const std::vector<double> p = model.outcome_probabilities(true_zeta);
  std::vector<double> cdf(p.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    acc += p[k];
    cdf[k] = acc;
  }
  cdf.back() = 1.0;

  SplitMix64 rng(seed);
  std::vector<std::uint64_t> counts(p.size(), 0);
  for (std::uint64_t shot = 0; shot < n; ++shot) {
    const double u = rng.uniform();
    const std::size_t k = static_cast<std::size_t>(
        std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    ++counts[std::min(k, counts.size() - 1)];
  }
  return counts;
}

double classical_fisher_information(const MeasurementModel& model, double zeta,
                                    double step) {
  const std::vector<double> p = model.outcome_probabilities(zeta);
  // Richardson: D = (4 D(h/2) - D(h)) / 3 with central differences.
  const auto central = [&](double h) {
    const std::vector<double> plus = model.outcome_probabilities(zeta + h);
    const std::vector<double> minus = model.outcome_probabilities(zeta - h);
    std::vector<double> dp(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
      dp[k] = (plus[k] - minus[k]) / (2.0 * h);
    }
    return dp;
  };
  const std::vector<double> d1 = central(step);
  const std::vector<double> d2 = central(0.5 * step);

  double cfi = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const double dp = (4.0 * d2[k] - d1[k]) / 3.0;
    if (p[k] > 1e-12) cfi += dp * dp / p[k];
  }
  return cfi;
}

namespace {

double log_likelihood(const MeasurementModel& model,
                      const std::vector<double>& counts, double zeta) {
  const std::vector<double> p = model.outcome_probabilities(zeta);
  double ll = 0.0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != 0.0) ll += counts[k] * std::log(std::max(p[k], 1e-300));
  }
  return ll;
}

}  // namespace

double mle_estimate(const MeasurementModel& model,
                    const std::vector<double>& counts, double window_lo,
                    double window_hi) {
  if (counts.size() != model.outcomes()) {
    throw std::invalid_argument("mle_estimate: counts length mismatch");
  }
  if (!(window_hi > window_lo)) {
    throw std::invalid_argument("mle_estimate: empty search window");
  }
  // pi/(2s) = pi / twice_s
  const double max_width = std::numbers::pi / model.family().spin().twice_s();
  if (window_hi - window_lo > max_width + 1e-12) {
    throw std::invalid_argument(
        "mle_estimate: window wider than pi/(2s); fringes would alias");
  }

  constexpr std::size_t kGridPoints = 512;
  std::vector<double> ll(kGridPoints);
  double best = -std::numeric_limits<double>::infinity();
  std::size_t best_idx = 0;
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    const double z = window_lo + (window_hi - window_lo) *
                                     static_cast<double>(i) / (kGridPoints - 1);
    ll[i] = log_likelihood(model, counts, z);
    if (ll[i] > best) {
      best = ll[i];
      best_idx = i;
    }
  }

  // Uniqueness at grid resolution: all near-maximal points must form one
  // contiguous run around the best index.
  const double tie_tol = 1e-9 * std::max(1.0, std::abs(best));
  std::size_t run_lo = best_idx, run_hi = best_idx;
  while (run_lo > 0 && best - ll[run_lo - 1] <= tie_tol) --run_lo;
  while (run_hi + 1 < kGridPoints && best - ll[run_hi + 1] <= tie_tol) ++run_hi;
  for (std::size_t i = 0; i < kGridPoints; ++i) {
    if (best - ll[i] <= tie_tol && (i < run_lo || i > run_hi)) {
      throw FlatLikelihood(
          "mle_estimate: likelihood maximum is not unique in the window");
    }
  }
  if (run_hi - run_lo + 1 == kGridPoints) {
    throw FlatLikelihood("mle_estimate: likelihood is flat over the window");
  }

  // golden-section refinement on the bracketing neighbors
  const double step = (window_hi - window_lo) / (kGridPoints - 1);
  double lo = window_lo + (best_idx == 0 ? 0.0 : (best_idx - 1) * step);
  double hi = window_lo + (best_idx + 1 >= kGridPoints
                               ? (kGridPoints - 1) * step
                               : (best_idx + 1) * step);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = log_likelihood(model, counts, x1);
  double f2 = log_likelihood(model, counts, x2);
  while (hi - lo > 1e-8) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = log_likelihood(model, counts, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = log_likelihood(model, counts, x1);
    }
  }
  return 0.5 * (lo + hi);
}

std::string EstimationRun::report() const {
  std::ostringstream out;
  char buf[128];
  out << "phase estimation run\n";
  std::snprintf(buf, sizeof(buf), "  true zeta          %.17g\n", true_zeta);
  out << buf;
  out << "  shots/experiment   " << shots_per_experiment << "\n";
  out << "  experiments        " << experiments << "\n";
  out << "  seed               " << seed << "\n";
  std::snprintf(buf, sizeof(buf), "  qfi                %.17g\n", qfi);
  out << buf;
  std::snprintf(buf, sizeof(buf), "  crb variance 1/nF  %.17g\n", crb_variance);
  out << buf;
  std::snprintf(buf, sizeof(buf), "  empirical variance %.17g\n",
                empirical_variance);
  out << buf;
  std::snprintf(buf, sizeof(buf), "  ratio              %.17g\n", ratio);
  out << buf;
  return out.str();
}

EstimationRun crb_saturation_experiment(const StateFamily& family,
                                        double true_zeta, std::uint64_t n,
                                        std::uint64_t m, std::uint64_t seed,
                                        unsigned jobs) {
  if (m < 2) {
    throw std::invalid_argument(
        "crb_saturation_experiment: need at least 2 experiments for a variance");
  }
  const MeasurementModel model = sld_measurement_basis(family, true_zeta);
  const double f = qfi_pure(family.evolved(true_zeta), family.generator());

  // zeta_true +- pi/(4s); total width pi/(2s), the aliasing limit
  const double half_window = std::numbers::pi / (4.0 * family.spin().s());
  const double window_lo = true_zeta - half_window;
  const double window_hi = true_zeta + half_window;

  EstimationRun run;
  run.true_zeta = true_zeta;
  run.shots_per_experiment = n;
  run.experiments = m;
  run.seed = seed;
  run.qfi = f;
  run.crb_variance = 1.0 / (static_cast<double>(n) * f);
  run.estimates.assign(m, 0.0);

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(m));

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<std::uint64_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= m) return;
      try {
        SplitMix64 rng = stream_rng(seed, i);
        const std::uint64_t experiment_seed = rng.next();
        const std::vector<std::uint64_t> counts =
            simulate_outcomes(model, true_zeta, n, experiment_seed);
        std::vector<double> weights(counts.begin(), counts.end());
        run.estimates[i] = mle_estimate(model, weights, window_lo, window_hi);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  double mean = 0.0;
  for (double e : run.estimates) mean += e;
  mean /= static_cast<double>(m);
  double var = 0.0;
  for (double e : run.estimates) var += (e - mean) * (e - mean);
  var /= static_cast<double>(m - 1);

  run.empirical_variance = var;
  run.ratio = var / run.crb_variance;
  return run;
}

}  // namespace spincat
