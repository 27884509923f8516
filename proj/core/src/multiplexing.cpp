// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#include "slowpair/multiplexing.hpp"

#include <cmath>
#include <stdexcept>

namespace slowpair {

PairNumberModel MultiplexSpec::model() const {
  return kind == PairKind::poisson
             ? PairNumberModel::poisson(per_unit_mu)
             : PairNumberModel::thermal(per_unit_mu, schmidt_modes);
}

void MultiplexSpec::validate() const {
  if (n_units < 1) throw std::invalid_argument("multiplex.n_units: must be >= 1");
  if (!(per_unit_mu >= 0.0)) {
    throw std::invalid_argument("multiplex.per_unit_mu: must be >= 0");
  }
  if (!(switch_loss_db >= 0.0)) {
    throw std::invalid_argument("multiplex.switch_loss_db: must be >= 0 dB");
  }
  herald_channel.validate();
  output_channel.validate();
  model();  // validates mu/K
}

int switch_stages(std::uint32_t n_units) {
  int stages = 0;
  std::uint32_t capacity = 1;
  while (capacity < n_units) {
    capacity <<= 1;
    ++stages;
  }
  return stages;
}

double herald_success_probability(const MultiplexSpec& spec) {
  spec.validate();
  const double p_h =
      click_probability(spec.model(), channel_transmittance(spec.herald_channel),
                        spec.herald_channel.noise_per_gate);
  return 1.0 - std::pow(1.0 - p_h, static_cast<double>(spec.n_units));
}

HeraldedOutputStats heralded_output_stats(const MultiplexSpec& spec) {
  spec.validate();
  const PairNumberModel model = spec.model();
  const double eta_h = channel_transmittance(spec.herald_channel);
  const double noise_h = spec.herald_channel.noise_per_gate;
  const double p_h = click_probability(model, eta_h, noise_h);

  HeraldedOutputStats stats;
  if (!(p_h > 0.0)) return stats;  // nothing ever heralds

  // Exit probability of one photon of the selected unit: the routing tree
  // plus the output arm.
  const double t_route = db_to_transmittance(
      spec.switch_loss_db * static_cast<double>(switch_stages(spec.n_units)));
  const double t_out = t_route * channel_transmittance(spec.output_channel);

  // The units are iid, so conditioned on the selected (lowest-indexed
  // heralding) unit, its pair number follows P(n | its herald clicked).
  const std::int64_t limit = model.truncation_limit();
  double p_single_joint = 0.0;
  double p_multi_joint = 0.0;
  for (std::int64_t n = 0; n <= limit; ++n) {
    const double nd = static_cast<double>(n);
    const double herald_click =
        1.0 - (1.0 - noise_h) * std::pow(1.0 - eta_h, nd);
    const double joint = model.pmf(n) * herald_click;
    if (n >= 2) p_multi_joint += joint;
    if (n >= 1) {
      const double exactly_one =
          nd * t_out * std::pow(1.0 - t_out, nd - 1.0);
      p_single_joint += joint * exactly_one;
    }
  }
  stats.p_single = p_single_joint / p_h;
  stats.p_multi_given_herald = p_multi_joint / p_h;
  return stats;
}

}  // namespace slowpair
