// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace slowpair {

/// Binomial(n, p) sampled by inversion of the pmf enumerated outward from
/// the mode (order m, m+1, m-1, m+2, ...). One uniform per draw; exact up to
/// floating point, no rejection loop, and the pmf recurrence never touches
/// the underflowing tails first. Good for the huge-n / small-np draws of the
/// aggregate mode.
inline std::uint64_t sample_binomial(std::uint64_t n, double p, double u) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binomial p outside [0,1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  // Work with p <= 1/2; mirror the result otherwise.
  if (p > 0.5) return n - sample_binomial(n, 1.0 - p, u);

  const double nd = static_cast<double>(n);
  const auto mode_d = std::floor((nd + 1.0) * p);
  const auto mode = static_cast<std::uint64_t>(std::min(mode_d, nd));
  const double md = static_cast<double>(mode);

  // log pmf at the mode via lgamma, then ratio recurrences outward.
  const double log_pmf_mode = std::lgamma(nd + 1.0) - std::lgamma(md + 1.0) -
                              std::lgamma(nd - md + 1.0) + md * std::log(p) +
                              (nd - md) * std::log1p(-p);
  const double pmf_mode = std::exp(log_pmf_mode);

  double cumulative = pmf_mode;
  if (u < cumulative) return mode;

  const double odds = p / (1.0 - p);
  double pmf_up = pmf_mode;    // pmf at current upper index
  double pmf_down = pmf_mode;  // pmf at current lower index
  std::uint64_t up = mode;
  std::uint64_t down = mode;
  while (true) {
    bool advanced = false;
    if (up < n) {
      const double k = static_cast<double>(up);
      pmf_up *= (nd - k) / (k + 1.0) * odds;
      ++up;
      cumulative += pmf_up;
      advanced = true;
      if (u < cumulative) return up;
    }
    if (down > 0) {
      const double k = static_cast<double>(down);
      pmf_down *= k / ((nd - k + 1.0) * odds);
      --down;
      cumulative += pmf_down;
      advanced = true;
      if (u < cumulative) return down;
    }
    if (!advanced) return up;  // u in the lost rounding tail; clamp to max
  }
}

/// Cumulative table for a nonnegative discrete distribution, sampled by a
/// forward scan. The pair-per-pulse laws have nearly all mass at n = 0, so
/// the scan is O(1) in practice.
class CdfTable {
 public:
  explicit CdfTable(std::vector<double> cdf) : cdf_(std::move(cdf)) {
    if (cdf_.empty()) throw std::invalid_argument("empty cdf table");
  }

  std::uint32_t sample(double u) const {
    for (std::uint32_t n = 0; n < cdf_.size(); ++n) {
      if (u < cdf_[n]) return n;
    }
    return static_cast<std::uint32_t>(cdf_.size() - 1);
  }

  std::size_t size() const { return cdf_.size(); }

 private:
  std::vector<double> cdf_;
};

}  // namespace slowpair
