// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "slowpair/pair_statistics.hpp"

namespace slowpair {

/// N identical, statistically independent heralded pair sources behind a
/// binary routing tree. The lowest-indexed heralding unit is routed to the
/// output through ceil(log2 N) switch stages, each costing switch_loss_db.
struct MultiplexSpec {
  std::uint32_t n_units = 1;
  double per_unit_mu = 0.006;
  PairKind kind = PairKind::poisson;
  int schmidt_modes = 1;
  ChannelSpec herald_channel;
  ChannelSpec output_channel;
  double switch_loss_db = 0.0;  // per routing stage

  PairNumberModel model() const;
  void validate() const;
};

/// Number of binary routing stages: ceil(log2 n_units).
int switch_stages(std::uint32_t n_units);

/// Probability that at least one unit heralds: 1 - (1 - p_h)^N.
double herald_success_probability(const MultiplexSpec& spec);

struct HeraldedOutputStats {
  /// Probability exactly one photon leaves the routed output, conditioned on
  /// at least one unit heralding.
  double p_single = 0.0;
  /// Probability the heralding unit made n >= 2 pairs, conditioned on its
  /// herald click: the multi-photon contamination of the heralded state.
  double p_multi_given_herald = 0.0;
};

HeraldedOutputStats heralded_output_stats(const MultiplexSpec& spec);

}  // namespace slowpair
