// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "slowpair/detection.hpp"
#include "slowpair/pair_statistics.hpp"
#include "slowpair/waveguide.hpp"

namespace slowpair {

enum class SimMode { per_pulse, aggregate };

/// Full experiment configuration for one run.
struct RunConfig {
  WaveguideSpec waveguide;
  PumpSpec pump;
  ChannelSpec signal;
  ChannelSpec idler;
  PairKind model_kind = PairKind::thermal;
  int schmidt_modes = 0;  // 0 = derive from filter and pump bandwidths
  std::uint64_t n_pulses = 1;
  std::uint64_t seed = 1;
  SimMode mode = SimMode::aggregate;

  /// Validates all member specs plus the cross-field invariants (the arm
  /// detunings must be energy-consistent with the pump within the idler
  /// filter bandwidth).
  void validate() const;
};

/// Analytic per-pulse picture of a configuration at its operating power:
/// mean pair number mu = Phi^2 with the FCA survival folded into the arm
/// efficiencies. This is the common input to the analytic sweep mode and to
/// the aggregate Monte Carlo draw.
struct OperatingPoint {
  double mu = 0.0;
  double survival = 1.0;
  PairNumberModel model;
  double eta_s = 0.0;  // channel transmittance x survival
  double eta_i = 0.0;
  double noise_s = 0.0;
  double noise_i = 0.0;
  double p_click_s = 0.0;
  double p_click_i = 0.0;
  double p_coincidence = 0.0;
  double p_accidental = 0.0;
};

OperatingPoint derive_operating_point(const RunConfig& config);

/// Analytic expectation of the counting result for the configured number of
/// gates (delayed accidentals have n_gates - 1 opportunities).
CountingResult analytic_expectation(const RunConfig& config);

/// Stochastic simulation of the full experiment.
///
/// per_pulse mode samples every gate: pair number n from the configured
/// law, then one uniform per arm against 1 - (1-noise)(1-eta)^n, which is
/// exactly the click law of binomially thinned pairs OR-composed with noise.
/// aggregate mode draws the per-category gate totals from the multinomial
/// implied by the analytic per-pulse probabilities.
///
/// Randomness is addressed by (seed, gate index), so identical seed and
/// config give bit-identical results for any worker count. n_threads = 0
/// picks the hardware concurrency.
CountingResult simulate_run(const RunConfig& config, unsigned n_threads = 0);

struct SweepRow {
  double power_w = 0.0;
  double mu = 0.0;
  CountingResult counts;
  bool ok = true;
  std::string error;
};

/// One run (Monte Carlo) or analytic evaluation per power. mu and the FCA
/// survival are recomputed per point, so TPA/FCA shape the curve. Per-point
/// failures are flagged on the row instead of aborting the sweep.
std::vector<SweepRow> sweep_power(const RunConfig& config,
                                  std::span<const double> powers_w,
                                  bool analytic, unsigned n_threads = 0);

}  // namespace slowpair
