// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#include "slowpair/detection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slowpair {

void ChunkSummary::append_gate(bool signal_click, bool idler_click) {
  if (counts.n_gates == 0) {
    first_gate_idler = idler_click;
  } else if (last_gate_signal && idler_click) {
    ++counts.accidentals_delayed;
  }
  ++counts.n_gates;
  counts.singles_s += signal_click ? 1 : 0;
  counts.singles_i += idler_click ? 1 : 0;
  counts.coincidences_raw += (signal_click && idler_click) ? 1 : 0;
  last_gate_signal = signal_click;
}

void ChunkSummary::merge(const ChunkSummary& next) {
  if (next.counts.n_gates == 0) return;
  if (counts.n_gates == 0) {
    *this = next;
    return;
  }
  counts.singles_s += next.counts.singles_s;
  counts.singles_i += next.counts.singles_i;
  counts.coincidences_raw += next.counts.coincidences_raw;
  counts.accidentals_delayed += next.counts.accidentals_delayed;
  if (last_gate_signal && next.first_gate_idler) ++counts.accidentals_delayed;
  counts.n_gates += next.counts.n_gates;
  last_gate_signal = next.last_gate_signal;
}

GateStreamSummary count_coincidences(std::span<const std::uint8_t> stream_s,
                                     std::span<const std::uint8_t> stream_i) {
  if (stream_s.size() != stream_i.size()) {
    throw std::invalid_argument("count_coincidences: stream length mismatch");
  }
  ChunkSummary chunk;
  for (std::size_t g = 0; g < stream_s.size(); ++g) {
    chunk.append_gate(stream_s[g] != 0, stream_i[g] != 0);
  }
  return chunk.counts;
}

CountingResult summarize(const GateStreamSummary& summary, double rep_rate_hz) {
  if (!(rep_rate_hz > 0.0)) {
    throw std::invalid_argument("summarize: rep rate must be > 0");
  }
  CountingResult result;
  result.c_raw = static_cast<double>(summary.coincidences_raw);
  result.a = static_cast<double>(summary.accidentals_delayed);
  result.c_net = result.c_raw - result.a;
  result.duration_s = static_cast<double>(summary.n_gates) / rep_rate_hz;
  if (result.a > 0.0) {
    result.car_defined = true;
    result.car = result.c_net / result.a;
    const double variance =
        (result.c_raw + result.a * result.car * result.car +
         2.0 * result.a * result.car) /
        (result.a * result.a);
    result.car_sigma = std::sqrt(std::max(0.0, variance));
  }
  return result;
}

}  // namespace slowpair
