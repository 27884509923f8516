// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slowpair {

struct ProfileSample {
  double wavelength_nm = 0.0;
  double group_index = 1.0;
  double transmission_db = 0.0;
};

/// Sampled group-index curve n_g(lambda) of the slow-light waveguide.
///
/// Interpolation is linear in wavelength. Queries outside the sampled range
/// throw instead of clamping: a silently extrapolated group index usually
/// means a misconfigured profile.
class GroupIndexProfile {
 public:
  explicit GroupIndexProfile(std::vector<ProfileSample> samples);

  /// Flat n_g over [center - half_window, center + half_window], ramping
  /// linearly to edge_index within ramp_nm on both sides.
  static GroupIndexProfile synthetic_flat(double flat_index, double center_nm,
                                          double half_window_nm, double ramp_nm,
                                          double edge_index);

  /// Parses the CSV interchange format:
  /// header `wavelength_nm,group_index,transmission_db`, rows ascending in
  /// wavelength.
  static GroupIndexProfile load_csv(const std::string& path);
  static GroupIndexProfile parse_csv(std::istream& in, const std::string& origin);

  double group_index_at(double wavelength_nm) const;
  double transmission_db_at(double wavelength_nm) const;

  double min_wavelength_nm() const { return samples_.front().wavelength_nm; }
  double max_wavelength_nm() const { return samples_.back().wavelength_nm; }
  bool contains(double wavelength_nm) const {
    return wavelength_nm >= min_wavelength_nm() &&
           wavelength_nm <= max_wavelength_nm();
  }

  const std::vector<ProfileSample>& samples() const { return samples_; }

 private:
  double interpolate(double wavelength_nm, double ProfileSample::*field) const;

  std::vector<ProfileSample> samples_;
};

}  // namespace slowpair
