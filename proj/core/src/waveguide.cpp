// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#include "slowpair/waveguide.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace slowpair {

namespace {

constexpr double kSpeedOfLight = 2.99792458e8;  // m/s

double sinc(double x) {
  if (std::abs(x) < 1e-6) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

double angular_frequency(double wavelength_nm) {
  return 2.0 * M_PI * kSpeedOfLight / (wavelength_nm * 1e-9);
}

/// Least-squares fit of y = c0 + c1 t + c2 t^2; returns c2.
double quadratic_coefficient(const std::vector<double>& t,
                             const std::vector<double>& y) {
  std::array<double, 5> s{};  // sums of t^0 .. t^4
  std::array<double, 3> b{};  // sums of y t^0 .. y t^2
  for (std::size_t i = 0; i < t.size(); ++i) {
    double power = 1.0;
    for (int k = 0; k < 5; ++k) {
      s[k] += power;
      if (k < 3) b[k] += y[i] * power;
      power *= t[i];
    }
  }
  double m[3][4] = {{s[0], s[1], s[2], b[0]},
                    {s[1], s[2], s[3], b[1]},
                    {s[2], s[3], s[4], b[2]}};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    std::swap(m[col], m[pivot]);
    if (m[col][col] == 0.0) {
      throw std::runtime_error("degenerate dispersion fit");
    }
    for (int row = 0; row < 3; ++row) {
      if (row == col) continue;
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= f * m[col][k];
    }
  }
  return m[2][3] / m[2][2];
}

}  // namespace

void WaveguideSpec::validate() const {
  if (!(length_m > 0.0)) throw std::invalid_argument("waveguide.length_m: must be > 0");
  if (!(gamma_base >= 0.0)) throw std::invalid_argument("waveguide.gamma_base: must be >= 0");
  if (!(n_ref >= 1.0)) throw std::invalid_argument("waveguide.n_ref: must be >= 1");
  if (!(linear_loss_db_per_m >= 0.0)) {
    throw std::invalid_argument("waveguide.linear_loss_db_per_m: must be >= 0");
  }
  if (!(tpa_strength >= 0.0)) throw std::invalid_argument("waveguide.tpa_strength: must be >= 0");
  if (!(fca_strength >= 0.0)) throw std::invalid_argument("waveguide.fca_strength: must be >= 0");
}

void PumpSpec::validate() const {
  if (!(wavelength_nm > 0.0)) throw std::invalid_argument("pump.wavelength_nm: must be > 0");
  if (!(pulse_fwhm_s > 0.0)) throw std::invalid_argument("pump.pulse_fwhm_s: must be > 0");
  if (!(effective_rep_rate_hz > 0.0)) {
    throw std::invalid_argument("pump.effective_rep_rate_hz: must be > 0");
  }
  if (!(peak_power_w >= 0.0 && peak_power_w <= max_peak_power_w)) {
    throw std::invalid_argument("pump.peak_power_w: must be within [0, 10] W");
  }
}

double slowdown_factor(double group_index, double reference_index) {
  if (!(group_index >= 1.0) || !(reference_index >= 1.0)) {
    throw std::domain_error("slowdown_factor: group indices must be >= 1");
  }
  const double ratio = group_index / reference_index;
  return ratio * ratio;
}

double effective_gamma(const WaveguideSpec& spec, double wavelength_nm) {
  spec.validate();
  const double n_g = spec.profile.group_index_at(wavelength_nm);
  return spec.gamma_base * slowdown_factor(n_g, spec.n_ref);
}

double effective_interaction(const WaveguideSpec& spec, const PumpSpec& pump) {
  spec.validate();
  pump.validate();
  const double gamma = effective_gamma(spec, pump.wavelength_nm);
  const double alpha = spec.linear_loss_db_per_m * std::log(10.0) / 10.0;  // 1/m
  const double power = pump.peak_power_w;

  // Effective length under linear loss; exact alpha -> 0 limit.
  const double alpha_l = alpha * spec.length_m;
  const double effective_length =
      alpha_l < 1e-12 ? spec.length_m * (1.0 - 0.5 * alpha_l)
                      : -std::expm1(-alpha_l) / alpha;

  // integral_0^L P(z) dz = ln(1 + tpa * P0 * L_eff) / tpa, with the
  // tpa -> 0 limit P0 * L_eff. Uses log1p(x)/x to stay accurate for tiny x.
  const double x = spec.tpa_strength * power * effective_length;
  double integral = power * effective_length;
  if (x > 0.0) integral *= std::log1p(x) / x;
  return gamma * integral;
}

double pair_survival(const WaveguideSpec& spec, const PumpSpec& pump) {
  spec.validate();
  pump.validate();
  const double p = pump.peak_power_w;
  return 1.0 / (1.0 + spec.fca_strength * p * p);
}

double energy_conserving_idler(double pump_wavelength_nm,
                               double signal_wavelength_nm) {
  if (!(pump_wavelength_nm > 0.0) || !(signal_wavelength_nm > 0.0)) {
    throw std::domain_error("energy_conserving_idler: wavelengths must be > 0");
  }
  const double inverse =
      2.0 / pump_wavelength_nm - 1.0 / signal_wavelength_nm;
  if (!(inverse > 0.0)) {
    throw std::domain_error(
        "energy_conserving_idler: signal too far blue of the pump; "
        "idler frequency would be nonpositive");
  }
  return 1.0 / inverse;
}

double sfwm_relative_efficiency(const WaveguideSpec& spec, const PumpSpec& pump,
                                double detuning_nm) {
  spec.validate();
  pump.validate();
  const double signal_nm = pump.wavelength_nm - detuning_nm;
  const double idler_nm = energy_conserving_idler(pump.wavelength_nm, signal_nm);
  for (double wl : {pump.wavelength_nm, signal_nm, idler_nm}) {
    if (!spec.profile.contains(wl)) {
      throw std::out_of_range(
          "sfwm_relative_efficiency: wavelength " + std::to_string(wl) +
          " nm outside the group-index profile");
    }
  }

  // Reconstruct k(omega) by trapezoidal integration of n_g/c on a uniform
  // omega grid, then fit a quadratic; beta2 is twice the curvature. The
  // profile is resampled densely so the fit does not depend on how coarse
  // the input table is.
  const auto& samples = spec.profile.samples();
  const std::size_t grid_n =
      std::max<std::size_t>(64, 4 * samples.size());
  const double omega_lo = angular_frequency(spec.profile.max_wavelength_nm());
  const double omega_hi = angular_frequency(spec.profile.min_wavelength_nm());
  const double step = (omega_hi - omega_lo) / static_cast<double>(grid_n - 1);

  std::vector<double> omega(grid_n), k(grid_n);
  double accumulated = 0.0;
  double previous_inv_vg = 0.0;
  for (std::size_t i = 0; i < grid_n; ++i) {
    omega[i] = omega_lo + step * static_cast<double>(i);
    const double wl_nm = 2.0 * M_PI * kSpeedOfLight / omega[i] * 1e9;
    const double inv_vg =
        spec.profile.group_index_at(std::clamp(
            wl_nm, spec.profile.min_wavelength_nm(),
            spec.profile.max_wavelength_nm())) /
        kSpeedOfLight;
    if (i > 0) accumulated += 0.5 * (inv_vg + previous_inv_vg) * step;
    k[i] = accumulated;
    previous_inv_vg = inv_vg;
  }

  // Center and scale omega for a well-conditioned fit.
  const double omega_mid = 0.5 * (omega_lo + omega_hi);
  const double omega_scale = 0.5 * (omega_hi - omega_lo);
  std::vector<double> t(grid_n);
  for (std::size_t i = 0; i < grid_n; ++i) t[i] = (omega[i] - omega_mid) / omega_scale;
  const double c2 = quadratic_coefficient(t, k);
  const double beta2 = 2.0 * c2 / (omega_scale * omega_scale);  // s^2/m

  const double delta_omega =
      angular_frequency(signal_nm) - angular_frequency(pump.wavelength_nm);
  const double gamma = effective_gamma(spec, pump.wavelength_nm);
  const double delta_k =
      beta2 * delta_omega * delta_omega + 2.0 * gamma * pump.peak_power_w;
  const double s = sinc(0.5 * delta_k * spec.length_m);
  return s * s;
}

}  // namespace slowpair
