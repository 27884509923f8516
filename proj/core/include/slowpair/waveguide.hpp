// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "slowpair/profile.hpp"

namespace slowpair {

/// Slow-light waveguide device parameters.
///
/// gamma_base is the nonlinearity of a reference fast-light waveguide at
/// group index n_ref; the slow-light enhancement (n_g/n_ref)^2 is applied on
/// top of it. tpa_strength is the effective (already slow-light scaled)
/// two-photon absorption coefficient acting on the pump, in 1/(W m).
/// fca_strength is a phenomenological free-carrier survival parameter for
/// the generated photons, in 1/W^2.
struct WaveguideSpec {
  double length_m = 96e-6;
  double gamma_base = 35.0;  // 1/(W m) at n_ref
  double n_ref = 3.0;
  GroupIndexProfile profile =
      GroupIndexProfile::synthetic_flat(30.0, 1553.0, 7.5, 2.0, 60.0);
  double linear_loss_db_per_m = 0.0;
  double tpa_strength = 0.0;  // 1/(W m)
  double fca_strength = 0.0;  // 1/W^2

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

/// Pump pulse train parameters. peak_power_w is the coupled peak power.
struct PumpSpec {
  double wavelength_nm = 1550.1;
  double pulse_fwhm_s = 14e-12;
  double effective_rep_rate_hz = 5e6;
  double peak_power_w = 0.23;

  static constexpr double max_peak_power_w = 10.0;  // model validity bound

  void validate() const;
};

/// Slow-light enhancement of the nonlinear interaction: (n_g / n_ref)^2.
double slowdown_factor(double group_index, double reference_index);

/// gamma_base scaled by the slowdown factor at the given wavelength;
/// n_g comes from linear interpolation of the device profile.
double effective_gamma(const WaveguideSpec& spec, double wavelength_nm);

/// Dimensionless interaction strength Phi = gamma_eff * integral_0^L P(z) dz
/// for a pump obeying dP/dz = -alpha P - tpa P^2. Uses the closed form of
/// the integral; the alpha -> 0 and tpa -> 0 limits are handled analytically.
/// The per-pulse mean pair number is Phi^2.
double effective_interaction(const WaveguideSpec& spec, const PumpSpec& pump);

/// Survival probability of a generated signal/idler photon against
/// free-carrier absorption: 1 / (1 + fca_strength * P0^2).
double pair_survival(const WaveguideSpec& spec, const PumpSpec& pump);

/// Phase-matching factor sinc^2(dk_eff L / 2) at the given signal detuning
/// (signal at pump - detuning, idler at the energy-conserving wavelength).
/// dk_eff = beta2_fit * dOmega^2 + 2 gamma_eff P0, with beta2_fit obtained
/// from a quadratic fit to k(omega) reconstructed by trapezoidal integration
/// of n_g / c over the profile.
double sfwm_relative_efficiency(const WaveguideSpec& spec, const PumpSpec& pump,
                                double detuning_nm);

/// Idler wavelength from exact photon-energy conservation:
/// 1/lambda_i = 2/lambda_p - 1/lambda_s.
double energy_conserving_idler(double pump_wavelength_nm,
                               double signal_wavelength_nm);

}  // namespace slowpair
