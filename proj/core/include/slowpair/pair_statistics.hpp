// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace slowpair {

enum class PairKind { poisson, thermal };

/// Per-pulse photon-pair number distribution.
///
/// poisson: many-mode limit, pmf e^-mu mu^n / n!.
/// thermal(K): negative binomial with K Schmidt modes,
///   pmf C(n+K-1, n) (mu/K)^n / (1 + mu/K)^(n+K);
/// K = 1 is single-mode thermal statistics.
struct PairNumberModel {
  double mu = 0.0;
  PairKind kind = PairKind::poisson;
  int schmidt_modes = 1;  // K; ignored for poisson

  static PairNumberModel poisson(double mu);
  static PairNumberModel thermal(double mu, int schmidt_modes);

  double pmf(std::int64_t n) const;

  /// Probability generating function G(x) = E[x^n] for x in [0, 1].
  double pgf(double x) const;

  /// Truncation index N such that sum_{n<=N} pmf(n) >= 1 - 1e-12:
  /// the scan continues until the geometric tail bound drops below 1e-14,
  /// and never stops before n = 10 + 20 max(1, mu).
  std::int64_t truncation_limit() const;

  void validate() const;
};

/// One collection arm: spectral position, filtering, lumped loss and
/// detector behaviour. In the default accounting the detector efficiency is
/// already folded into total_loss_db, so detector_efficiency stays at 1.
struct ChannelSpec {
  double detuning_nm = 4.8;
  double filter_bandwidth_nm = 0.5;
  double total_loss_db = 21.8;
  double detector_efficiency = 1.0;
  double noise_per_gate = 0.0;  // dark counts + pump leakage, lumped

  void validate() const;
};

/// 10^(-loss/10); loss must be nonnegative.
double db_to_transmittance(double loss_db);

/// End-to-end photon survival of an arm: transmittance times detector
/// efficiency.
double channel_transmittance(const ChannelSpec& channel);

/// Per-gate click probability of a threshold detector fed by one arm of the
/// pair source: 1 - (1 - noise) G(1 - eta).
double click_probability(const PairNumberModel& model, double eta, double noise);

/// Per-gate probability that both detectors click in the same gate. The
/// signal and idler photon numbers are perfectly correlated per pair, so the
/// joint no-click term is G((1-eta_s)(1-eta_i)).
double coincidence_probability(const PairNumberModel& model,
                               const ChannelSpec& signal,
                               const ChannelSpec& idler);

/// Per-gate accidental-coincidence probability: product of the two singles
/// probabilities (consecutive pulses carry no pair correlation).
double accidental_probability(const PairNumberModel& model,
                              const ChannelSpec& signal,
                              const ChannelSpec& idler);

/// CAR = (P_cc - P_acc) / P_acc with the FCA survival folded into each
/// arm's efficiency before evaluation (each photon of a pair survives with
/// probability `survival`). Throws if the accidental probability is zero.
double car_analytic(const PairNumberModel& model, const ChannelSpec& signal,
                    const ChannelSpec& idler, double survival);

/// Noiseless upper limit of the CAR: 1/mu.
double car_upper_limit(double mu);

/// Expected number of events: probability per pulse x rate x duration.
double expected_counts(double prob_per_pulse, double rep_rate_hz,
                       double duration_s);

/// Schmidt-mode count used for the default thermal model: the ratio of the
/// collection filter bandwidth to the transform-limited pump bandwidth
/// (Gaussian pulses, time-bandwidth product 0.441), rounded, minimum 1.
int schmidt_mode_estimate(double filter_bandwidth_nm, double pump_wavelength_nm,
                          double pulse_fwhm_s);

}  // namespace slowpair
