// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#include "slowpair/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "slowpair/rng.hpp"
#include "slowpair/sampling.hpp"

namespace slowpair {

namespace {

constexpr std::uint32_t kStreamGates = 0;
constexpr std::uint32_t kStreamAggregate = 1;
constexpr std::uint64_t kGatesPerBlock = 1u << 16;

PairNumberModel resolve_model(const RunConfig& config, double mu) {
  if (config.model_kind == PairKind::poisson) {
    return PairNumberModel::poisson(mu);
  }
  const int k = config.schmidt_modes > 0
                    ? config.schmidt_modes
                    : schmidt_mode_estimate(config.signal.filter_bandwidth_nm,
                                            config.pump.wavelength_nm,
                                            config.pump.pulse_fwhm_s);
  return PairNumberModel::thermal(mu, k);
}

/// Precomputed per-gate sampling tables: pair-number cdf and, per pair
/// count, the click probability of each arm.
struct GateTables {
  CdfTable pair_cdf;
  std::vector<double> p_click_s;  // indexed by n
  std::vector<double> p_click_i;
};

GateTables make_tables(const OperatingPoint& op) {
  const std::int64_t limit = op.model.truncation_limit();
  std::vector<double> cdf(static_cast<std::size_t>(limit) + 1);
  std::vector<double> ps(cdf.size()), pi(cdf.size());
  double cumulative = 0.0;
  for (std::size_t n = 0; n < cdf.size(); ++n) {
    cumulative += op.model.pmf(static_cast<std::int64_t>(n));
    cdf[n] = cumulative;
    const double nd = static_cast<double>(n);
    ps[n] = 1.0 - (1.0 - op.noise_s) * std::pow(1.0 - op.eta_s, nd);
    pi[n] = 1.0 - (1.0 - op.noise_i) * std::pow(1.0 - op.eta_i, nd);
  }
  return GateTables{CdfTable(std::move(cdf)), std::move(ps), std::move(pi)};
}

ChunkSummary simulate_block(const GateTables& tables, std::uint64_t seed,
                            std::uint64_t first_gate, std::uint64_t n_gates) {
  ChunkSummary chunk;
  for (std::uint64_t g = first_gate; g < first_gate + n_gates; ++g) {
    const GateRandom rng(seed, g, kStreamGates);
    const auto words = rng.block(0);
    const double u_pairs = uniform_double(words[0], words[1]);
    const std::uint32_t n = tables.pair_cdf.sample(u_pairs);
    const bool click_s = uniform_single(words[2]) < tables.p_click_s[n];
    const bool click_i = uniform_single(words[3]) < tables.p_click_i[n];
    chunk.append_gate(click_s, click_i);
  }
  return chunk;
}

CountingResult run_per_pulse(const RunConfig& config, const OperatingPoint& op,
                             unsigned n_threads) {
  const GateTables tables = make_tables(op);
  const std::uint64_t n_blocks =
      (config.n_pulses + kGatesPerBlock - 1) / kGatesPerBlock;

  unsigned workers = n_threads != 0 ? n_threads : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(
      std::min<std::uint64_t>(workers, n_blocks));

  std::vector<ChunkSummary> blocks(n_blocks);
  auto work = [&](unsigned, std::atomic<std::uint64_t>& cursor) {
    for (std::uint64_t b = cursor.fetch_add(1); b < n_blocks;
         b = cursor.fetch_add(1)) {
      const std::uint64_t first = b * kGatesPerBlock;
      const std::uint64_t count =
          std::min<std::uint64_t>(kGatesPerBlock, config.n_pulses - first);
      blocks[b] = simulate_block(tables, config.seed, first, count);
    }
  };

  if (workers <= 1) {
    std::atomic<std::uint64_t> cursor{0};
    work(0, cursor);
  } else {
    std::atomic<std::uint64_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(work, w, std::ref(cursor));
    }
    for (auto& t : pool) t.join();
  }

  // Merge in gate order; the seam pairs are recovered here, so the result
  // does not depend on the block schedule.
  ChunkSummary total;
  for (const auto& block : blocks) total.merge(block);
  return summarize(total.counts, config.pump.effective_rep_rate_hz);
}

CountingResult run_aggregate(const RunConfig& config, const OperatingPoint& op) {
  RandomStream stream(config.seed, kStreamAggregate);
  const std::uint64_t n = config.n_pulses;

  const double p_cc = op.p_coincidence;
  const double p_s_only = std::max(0.0, op.p_click_s - p_cc);
  const double p_i_only = std::max(0.0, op.p_click_i - p_cc);

  const std::uint64_t n_both = sample_binomial(n, p_cc, stream.next_double());
  const std::uint64_t n_s_only = sample_binomial(
      n - n_both, std::min(1.0, p_s_only / std::max(1e-300, 1.0 - p_cc)),
      stream.next_double());
  const std::uint64_t n_i_only = sample_binomial(
      n - n_both - n_s_only,
      std::min(1.0, p_i_only / std::max(1e-300, 1.0 - p_cc - p_s_only)),
      stream.next_double());
  const std::uint64_t n_delayed =
      n > 1 ? sample_binomial(n - 1, op.p_accidental, stream.next_double()) : 0;

  GateStreamSummary summary;
  summary.n_gates = n;
  summary.coincidences_raw = n_both;
  summary.singles_s = n_both + n_s_only;
  summary.singles_i = n_both + n_i_only;
  summary.accidentals_delayed = n_delayed;
  return summarize(summary, config.pump.effective_rep_rate_hz);
}

}  // namespace

void RunConfig::validate() const {
  waveguide.validate();
  pump.validate();
  signal.validate();
  idler.validate();
  if (n_pulses < 1) throw std::invalid_argument("run.n_pulses: must be >= 1");
  if (model_kind == PairKind::thermal && schmidt_modes < 0) {
    throw std::invalid_argument("run.schmidt_modes: must be >= 0");
  }
  const double signal_nm = pump.wavelength_nm - signal.detuning_nm;
  const double idler_nm = pump.wavelength_nm + idler.detuning_nm;
  const double conserved_nm =
      energy_conserving_idler(pump.wavelength_nm, signal_nm);
  if (std::abs(idler_nm - conserved_nm) > idler.filter_bandwidth_nm) {
    throw std::invalid_argument(
        "channels: detunings violate energy conservation; idler arm at " +
        std::to_string(idler_nm) + " nm but pairs appear at " +
        std::to_string(conserved_nm) + " nm");
  }
}

OperatingPoint derive_operating_point(const RunConfig& config) {
  config.validate();
  OperatingPoint op;
  const double phi = effective_interaction(config.waveguide, config.pump);
  op.mu = phi * phi;
  op.survival = pair_survival(config.waveguide, config.pump);
  op.model = resolve_model(config, op.mu);
  op.eta_s = channel_transmittance(config.signal) * op.survival;
  op.eta_i = channel_transmittance(config.idler) * op.survival;
  op.noise_s = config.signal.noise_per_gate;
  op.noise_i = config.idler.noise_per_gate;
  op.p_click_s = click_probability(op.model, op.eta_s, op.noise_s);
  op.p_click_i = click_probability(op.model, op.eta_i, op.noise_i);

  ChannelSpec folded_s = config.signal;
  ChannelSpec folded_i = config.idler;
  folded_s.detector_efficiency *= op.survival;
  folded_i.detector_efficiency *= op.survival;
  op.p_coincidence = coincidence_probability(op.model, folded_s, folded_i);
  op.p_accidental = op.p_click_s * op.p_click_i;
  return op;
}

CountingResult analytic_expectation(const RunConfig& config) {
  const OperatingPoint op = derive_operating_point(config);
  const double gates = static_cast<double>(config.n_pulses);

  CountingResult result;
  result.c_raw = op.p_coincidence * gates;
  result.a = op.p_accidental * (gates - 1.0);
  result.c_net = result.c_raw - result.a;
  result.duration_s = gates / config.pump.effective_rep_rate_hz;
  if (result.a > 0.0) {
    result.car_defined = true;
    result.car = result.c_net / result.a;
    result.car_sigma = std::sqrt(std::max(
        0.0, (result.c_raw + result.a * result.car * result.car +
              2.0 * result.a * result.car) /
                 (result.a * result.a)));
  }
  return result;
}

CountingResult simulate_run(const RunConfig& config, unsigned n_threads) {
  const OperatingPoint op = derive_operating_point(config);
  if (config.mode == SimMode::per_pulse) {
    return run_per_pulse(config, op, n_threads);
  }
  return run_aggregate(config, op);
}

std::vector<SweepRow> sweep_power(const RunConfig& config,
                                  std::span<const double> powers_w,
                                  bool analytic, unsigned n_threads) {
  if (powers_w.empty()) {
    throw std::invalid_argument("sweep_power: empty power list");
  }
  std::vector<SweepRow> rows;
  rows.reserve(powers_w.size());
  for (std::size_t i = 0; i < powers_w.size(); ++i) {
    SweepRow row;
    row.power_w = powers_w[i];
    RunConfig point = config;
    point.pump.peak_power_w = powers_w[i];
    point.seed = mix_seed(config.seed, i);
    try {
      row.mu = derive_operating_point(point).mu;
      row.counts = analytic ? analytic_expectation(point)
                            : simulate_run(point, n_threads);
    } catch (const std::exception& err) {
      row.ok = false;
      row.error = err.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace slowpair
