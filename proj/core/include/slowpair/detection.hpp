// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>

namespace slowpair {

/// Counts accumulated over a stream of detection gates.
struct GateStreamSummary {
  std::uint64_t n_gates = 0;
  std::uint64_t singles_s = 0;
  std::uint64_t singles_i = 0;
  std::uint64_t coincidences_raw = 0;
  /// Same-stream pairing of signal gate g with idler gate g+1, mirroring the
  /// delayed-trigger accidental measurement.
  std::uint64_t accidentals_delayed = 0;
};

/// GateStreamSummary plus the boundary clicks needed to merge adjacent
/// chunks without losing the delayed pair that straddles the seam.
struct ChunkSummary {
  GateStreamSummary counts;
  bool first_gate_idler = false;
  bool last_gate_signal = false;

  /// Folds one gate onto the end of this chunk.
  void append_gate(bool signal_click, bool idler_click);

  /// Concatenation: `this` followed by `next`. Adds the seam's delayed pair.
  void merge(const ChunkSummary& next);
};

/// Gate-by-gate coincidence counting over two equal-length click streams
/// (nonzero byte = click).
GateStreamSummary count_coincidences(std::span<const std::uint8_t> stream_s,
                                     std::span<const std::uint8_t> stream_i);

/// Counting figures for one acquisition.
struct CountingResult {
  double c_raw = 0.0;
  double a = 0.0;
  double c_net = 0.0;  // c_raw - a
  double car = 0.0;
  double car_sigma = 0.0;
  bool car_defined = false;  // false when a == 0
  double duration_s = 0.0;
};

/// Derives the counting result; duration = n_gates / rep_rate. CAR follows
/// C/A; its uncertainty uses independent-Poisson propagation on c_raw and a:
/// car_sigma^2 = (c_raw + a car^2 + 2 a car) / a^2. With a = 0 the CAR is
/// flagged undefined rather than infinite.
CountingResult summarize(const GateStreamSummary& summary, double rep_rate_hz);

}  // namespace slowpair
