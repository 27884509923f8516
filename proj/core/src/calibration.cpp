// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#include "slowpair/calibration.hpp"

#include <cmath>
#include <string>

namespace slowpair {

namespace {

constexpr double kReferenceIndex = 3.0;  // silicon nanowire
constexpr double kFlatGroupIndex = 30.0;

template <typename F>
double bisect(F&& f, double lo, double hi, int iterations, const char* what) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0)) {
    throw numerical_error(std::string("calibration: no sign change for ") + what);
  }
  for (int i = 0; i < iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double calibrate_gamma_eff_length(double mu, double power_w) {
  if (!(mu > 0.0) || !(power_w > 0.0)) {
    throw std::invalid_argument("calibrate_gamma_eff_length: mu and power must be > 0");
  }
  return std::sqrt(mu) / power_w;
}

double calibrate_noise_per_gate(double car, double mu, double loss_db) {
  if (!(car > 0.0)) throw std::invalid_argument("calibrate_noise_per_gate: car must be > 0");
  const PairNumberModel model = PairNumberModel::poisson(mu);
  ChannelSpec channel;
  channel.total_loss_db = loss_db;
  channel.noise_per_gate = 0.0;
  auto car_minus_target = [&](double noise) {
    ChannelSpec arm = channel;
    arm.noise_per_gate = noise;
    return car_analytic(model, arm, arm, 1.0) - car;
  };
  // CAR decreases monotonically in the noise; bracket from just above zero.
  return bisect(car_minus_target, 1e-12, 0.5, 200, "noise_per_gate");
}

double calibrate_tpa_strength(double deviation, double power_w, double length_m) {
  if (!(deviation > 0.0 && deviation < 1.0)) {
    throw std::invalid_argument("calibrate_tpa_strength: deviation must be in (0, 1)");
  }
  const double target = std::sqrt(1.0 - deviation);  // log1p(x)/x at solution
  auto ratio_minus_target = [&](double x) { return std::log1p(x) / x - target; };
  const double x = bisect(ratio_minus_target, 1e-9, 100.0, 200, "tpa_strength");
  return x / (power_w * length_m);
}

double car_at_power(const RunConfig& config, double power_w) {
  RunConfig point = config;
  point.pump.peak_power_w = power_w;
  const OperatingPoint op = derive_operating_point(point);
  if (!(op.p_accidental > 0.0)) {
    throw numerical_error("car_at_power: accidental probability is zero");
  }
  return (op.p_coincidence - op.p_accidental) / op.p_accidental;
}

double car_peak_power(const RunConfig& config) {
  // Golden-section search; the analytic CAR(P) is unimodal on this range.
  const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 0.02;
  double hi = 1.5;
  double c1 = hi - golden * (hi - lo);
  double c2 = lo + golden * (hi - lo);
  double f1 = car_at_power(config, c1);
  double f2 = car_at_power(config, c2);
  for (int i = 0; i < 120; ++i) {
    if (f1 > f2) {
      hi = c2;
      c2 = c1;
      f2 = f1;
      c1 = hi - golden * (hi - lo);
      f1 = car_at_power(config, c1);
    } else {
      lo = c1;
      c1 = c2;
      f1 = f2;
      c2 = lo + golden * (hi - lo);
      f2 = car_at_power(config, c2);
    }
  }
  return 0.5 * (lo + hi);
}

double calibrate_fca_strength(double peak_power_w, const RunConfig& config) {
  auto peak_minus_target = [&](double fca) {
    RunConfig candidate = config;
    candidate.waveguide.fca_strength = fca;
    return car_peak_power(candidate) - peak_power_w;
  };
  if (peak_minus_target(0.0) <= 0.0) {
    throw numerical_error(
        "calibrate_fca_strength: CAR already peaks at or below the target "
        "power without FCA");
  }
  return bisect(peak_minus_target, 0.0, 400.0, 100, "fca_strength");
}

RunConfig paper_fig3_config() {
  const CalibrationTargets targets;

  RunConfig config;
  config.waveguide.length_m = 96e-6;
  config.waveguide.n_ref = kReferenceIndex;
  config.waveguide.profile =
      GroupIndexProfile::synthetic_flat(kFlatGroupIndex, 1553.0, 7.5, 2.0, 60.0);
  config.waveguide.linear_loss_db_per_m = 0.0;

  const double gamma_eff_length =
      calibrate_gamma_eff_length(targets.mu, targets.mu_at_power_w);
  const double slowdown = slowdown_factor(kFlatGroupIndex, kReferenceIndex);
  config.waveguide.gamma_base =
      gamma_eff_length / (config.waveguide.length_m * slowdown);

  config.pump.wavelength_nm = 1550.1;
  config.pump.pulse_fwhm_s = 14e-12;
  config.pump.effective_rep_rate_hz = 5e6;
  config.pump.peak_power_w = targets.mu_at_power_w;

  ChannelSpec arm;
  arm.detuning_nm = 4.8;
  arm.filter_bandwidth_nm = 0.5;
  arm.total_loss_db = 21.8;
  arm.detector_efficiency = 1.0;
  arm.noise_per_gate =
      calibrate_noise_per_gate(targets.car, targets.car_at_mu, arm.total_loss_db);
  config.signal = arm;
  config.idler = arm;

  config.model_kind = PairKind::thermal;
  config.schmidt_modes = 0;  // derive from bandwidths
  config.n_pulses = 1500000000ull;
  config.seed = 1;
  config.mode = SimMode::aggregate;

  config.waveguide.tpa_strength = calibrate_tpa_strength(
      targets.quad_deviation, targets.deviation_at_power_w,
      config.waveguide.length_m);
  config.waveguide.fca_strength =
      calibrate_fca_strength(targets.car_peak_power_w, config);
  return config;
}

}  // namespace slowpair
