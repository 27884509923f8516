// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#include "slowpair/profile.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace slowpair {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_field(const std::string& text, const std::string& origin, int line) {
  std::size_t consumed = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &consumed);
  } catch (const std::exception&) {
    throw std::runtime_error(origin + ":" + std::to_string(line) +
                             ": not a number: '" + text + "'");
  }
  if (consumed != text.size()) {
    throw std::runtime_error(origin + ":" + std::to_string(line) +
                             ": trailing junk in field: '" + text + "'");
  }
  return value;
}

}  // namespace

GroupIndexProfile::GroupIndexProfile(std::vector<ProfileSample> samples)
    : samples_(std::move(samples)) {
  if (samples_.size() < 2) {
    throw std::invalid_argument("profile: needs at least 2 samples");
  }
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (samples_[i].group_index < 1.0) {
      throw std::invalid_argument("profile: group_index must be >= 1");
    }
    if (i > 0 &&
        samples_[i].wavelength_nm <= samples_[i - 1].wavelength_nm) {
      throw std::invalid_argument(
          "profile: wavelengths must be strictly ascending");
    }
  }
}

GroupIndexProfile GroupIndexProfile::synthetic_flat(double flat_index,
                                                    double center_nm,
                                                    double half_window_nm,
                                                    double ramp_nm,
                                                    double edge_index) {
  const double lo = center_nm - half_window_nm;
  const double hi = center_nm + half_window_nm;
  // Slightly increased loss inside the slow-light window, echoing measured
  // transmission curves.
  std::vector<ProfileSample> rows = {
      {lo - ramp_nm, edge_index, -10.0}, {lo, flat_index, -13.0},
      {center_nm, flat_index, -13.0},    {hi, flat_index, -13.0},
      {hi + ramp_nm, edge_index, -10.0},
  };
  return GroupIndexProfile(std::move(rows));
}

GroupIndexProfile GroupIndexProfile::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  return parse_csv(in, path);
}

GroupIndexProfile GroupIndexProfile::parse_csv(std::istream& in,
                                               const std::string& origin) {
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error(origin + ":1: empty profile file");
  }
  if (trim(line) != "wavelength_nm,group_index,transmission_db") {
    throw std::runtime_error(
        origin + ":1: bad header; expected "
                 "'wavelength_nm,group_index,transmission_db'");
  }

  std::vector<ProfileSample> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    std::stringstream ss(stripped);
    std::string field;
    ProfileSample sample;
    double* fields[3] = {&sample.wavelength_nm, &sample.group_index,
                         &sample.transmission_db};
    for (double* slot : fields) {
      if (!std::getline(ss, field, ',')) {
        throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                                 ": expected 3 comma-separated fields");
      }
      *slot = parse_field(trim(field), origin, line_no);
    }
    if (std::getline(ss, field, ',')) {
      throw std::runtime_error(origin + ":" + std::to_string(line_no) +
                               ": expected 3 comma-separated fields");
    }
    rows.push_back(sample);
  }
  try {
    return GroupIndexProfile(std::move(rows));
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(origin + ": " + err.what());
  }
}

double GroupIndexProfile::group_index_at(double wavelength_nm) const {
  return interpolate(wavelength_nm, &ProfileSample::group_index);
}

double GroupIndexProfile::transmission_db_at(double wavelength_nm) const {
  return interpolate(wavelength_nm, &ProfileSample::transmission_db);
}

double GroupIndexProfile::interpolate(double wavelength_nm,
                                      double ProfileSample::*field) const {
  if (!contains(wavelength_nm)) {
    throw std::out_of_range(
        "profile: wavelength " + std::to_string(wavelength_nm) +
        " nm outside sampled range [" + std::to_string(min_wavelength_nm()) +
        ", " + std::to_string(max_wavelength_nm()) + "] nm");
  }
  const auto upper = std::upper_bound(
      samples_.begin(), samples_.end(), wavelength_nm,
      [](double w, const ProfileSample& s) { return w < s.wavelength_nm; });
  if (upper == samples_.begin()) return samples_.front().*field;
  if (upper == samples_.end()) return samples_.back().*field;
  const ProfileSample& hi = *upper;
  const ProfileSample& lo = *(upper - 1);
  const double t =
      (wavelength_nm - lo.wavelength_nm) / (hi.wavelength_nm - lo.wavelength_nm);
  return lo.*field + t * (hi.*field - lo.*field);
}

}  // namespace slowpair
