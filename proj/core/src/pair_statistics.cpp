// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#include "slowpair/pair_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slowpair {

namespace {

constexpr double kSpeedOfLight = 2.99792458e8;       // m/s
constexpr double kGaussianTimeBandwidth = 0.4412712003;  // FWHM * FWHM
constexpr double kTailBound = 1e-14;

void check_probability(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(name) + ": must be within [0, 1]");
  }
}

}  // namespace

PairNumberModel PairNumberModel::poisson(double mu) {
  PairNumberModel m{mu, PairKind::poisson, 1};
  m.validate();
  return m;
}

PairNumberModel PairNumberModel::thermal(double mu, int schmidt_modes) {
  PairNumberModel m{mu, PairKind::thermal, schmidt_modes};
  m.validate();
  return m;
}

void PairNumberModel::validate() const {
  if (!(mu >= 0.0)) throw std::invalid_argument("pair model: mu must be >= 0");
  if (kind == PairKind::thermal && schmidt_modes < 1) {
    throw std::invalid_argument("pair model: schmidt_modes must be >= 1");
  }
}

double PairNumberModel::pmf(std::int64_t n) const {
  validate();
  if (n < 0) return 0.0;
  if (mu == 0.0) return n == 0 ? 1.0 : 0.0;
  const double nd = static_cast<double>(n);
  if (kind == PairKind::poisson) {
    return std::exp(-mu + nd * std::log(mu) - std::lgamma(nd + 1.0));
  }
  const double k = static_cast<double>(schmidt_modes);
  return std::exp(std::lgamma(nd + k) - std::lgamma(k) - std::lgamma(nd + 1.0) +
                  nd * std::log(mu / k) - (nd + k) * std::log1p(mu / k));
}

double PairNumberModel::pgf(double x) const {
  validate();
  if (kind == PairKind::poisson) return std::exp(-mu * (1.0 - x));
  const double k = static_cast<double>(schmidt_modes);
  return std::pow(1.0 + mu * (1.0 - x) / k, -k);
}

std::int64_t PairNumberModel::truncation_limit() const {
  validate();
  const auto n_min = static_cast<std::int64_t>(
      std::ceil(10.0 + 20.0 * std::max(1.0, mu)));
  if (mu == 0.0) return n_min;

  const double k = static_cast<double>(schmidt_modes);
  const double q = mu / (k + mu);  // thermal successive-ratio limit
  double prob = kind == PairKind::poisson ? std::exp(-mu)
                                          : std::exp(-k * std::log1p(mu / k));
  std::int64_t n = 0;
  while (true) {
    const double nd = static_cast<double>(n);
    // Successive pmf ratio at n; decreasing in n for both laws, so once it
    // is < 1 it bounds the tail geometrically.
    const double ratio = kind == PairKind::poisson
                             ? mu / (nd + 1.0)
                             : q * (nd + k) / (nd + 1.0);
    if (ratio < 1.0 && prob * ratio / (1.0 - ratio) < kTailBound &&
        n >= n_min) {
      return n;
    }
    prob *= ratio;
    ++n;
    if (n > 100000000) {
      throw std::runtime_error("pair model truncation did not converge");
    }
  }
}

void ChannelSpec::validate() const {
  if (!(filter_bandwidth_nm > 0.0)) {
    throw std::invalid_argument("channel.filter_bandwidth_nm: must be > 0");
  }
  if (!(total_loss_db >= 0.0)) {
    throw std::invalid_argument("channel.total_loss_db: must be >= 0 dB");
  }
  if (!(detector_efficiency >= 0.0 && detector_efficiency <= 1.0)) {
    throw std::invalid_argument("channel.detector_efficiency: must be within [0, 1]");
  }
  if (!(noise_per_gate >= 0.0 && noise_per_gate <= 1.0)) {
    throw std::invalid_argument("channel.noise_per_gate: must be within [0, 1]");
  }
}

double db_to_transmittance(double loss_db) {
  if (!(loss_db >= 0.0)) {
    throw std::domain_error("db_to_transmittance: loss must be >= 0 dB");
  }
  return std::pow(10.0, -loss_db / 10.0);
}

double channel_transmittance(const ChannelSpec& channel) {
  channel.validate();
  return db_to_transmittance(channel.total_loss_db) * channel.detector_efficiency;
}

double click_probability(const PairNumberModel& model, double eta, double noise) {
  check_probability(eta, "click_probability eta");
  check_probability(noise, "click_probability noise");
  return 1.0 - (1.0 - noise) * model.pgf(1.0 - eta);
}

double coincidence_probability(const PairNumberModel& model,
                               const ChannelSpec& signal,
                               const ChannelSpec& idler) {
  const double eta_s = channel_transmittance(signal);
  const double eta_i = channel_transmittance(idler);
  const double miss_s = model.pgf(1.0 - eta_s);
  const double miss_i = model.pgf(1.0 - eta_i);
  const double miss_joint = model.pgf((1.0 - eta_s) * (1.0 - eta_i));
  const double quiet_s = 1.0 - signal.noise_per_gate;
  const double quiet_i = 1.0 - idler.noise_per_gate;
  return 1.0 - quiet_s * miss_s - quiet_i * miss_i +
         quiet_s * quiet_i * miss_joint;
}

double accidental_probability(const PairNumberModel& model,
                              const ChannelSpec& signal,
                              const ChannelSpec& idler) {
  return click_probability(model, channel_transmittance(signal),
                           signal.noise_per_gate) *
         click_probability(model, channel_transmittance(idler),
                           idler.noise_per_gate);
}

double car_analytic(const PairNumberModel& model, const ChannelSpec& signal,
                    const ChannelSpec& idler, double survival) {
  check_probability(survival, "car_analytic survival");
  ChannelSpec s = signal;
  ChannelSpec i = idler;
  s.detector_efficiency *= survival;
  i.detector_efficiency *= survival;
  const double p_acc = accidental_probability(model, s, i);
  if (!(p_acc > 0.0)) {
    throw std::domain_error("car_analytic: accidental probability is zero; CAR undefined");
  }
  return (coincidence_probability(model, s, i) - p_acc) / p_acc;
}

double car_upper_limit(double mu) {
  if (!(mu > 0.0)) throw std::domain_error("car_upper_limit: mu must be > 0");
  return 1.0 / mu;
}

double expected_counts(double prob_per_pulse, double rep_rate_hz,
                       double duration_s) {
  if (!(prob_per_pulse >= 0.0) || !(rep_rate_hz >= 0.0) || !(duration_s >= 0.0)) {
    throw std::invalid_argument("expected_counts: arguments must be >= 0");
  }
  return prob_per_pulse * rep_rate_hz * duration_s;
}

int schmidt_mode_estimate(double filter_bandwidth_nm, double pump_wavelength_nm,
                          double pulse_fwhm_s) {
  if (!(filter_bandwidth_nm > 0.0) || !(pump_wavelength_nm > 0.0) ||
      !(pulse_fwhm_s > 0.0)) {
    throw std::invalid_argument("schmidt_mode_estimate: arguments must be > 0");
  }
  const double bandwidth_hz = kGaussianTimeBandwidth / pulse_fwhm_s;
  const double lambda_m = pump_wavelength_nm * 1e-9;
  const double pump_bandwidth_nm =
      lambda_m * lambda_m * bandwidth_hz / kSpeedOfLight * 1e9;
  const auto k = static_cast<int>(std::lround(filter_bandwidth_nm / pump_bandwidth_nm));
  return std::max(1, k);
}

}  // namespace slowpair
