// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace slowpair {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// Stateless block cipher mapping a 128-bit counter and 64-bit key to four
/// 32-bit words. Streams are addressed, not advanced: every (seed, gate,
/// block) triple yields the same output no matter how work is scheduled,
/// which is what makes the Monte Carlo results independent of the worker
/// count.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static Counter block(Counter ctr, Key key) {
    for (int round = 0; round < 9; ++round) {
      ctr = single_round(ctr, key);
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return single_round(ctr, key);
  }

 private:
  static Counter single_round(const Counter& x, const Key& k) {
    const std::uint64_t p0 = std::uint64_t{kMul0} * x[0];
    const std::uint64_t p1 = std::uint64_t{kMul1} * x[2];
    const auto lo0 = static_cast<std::uint32_t>(p0);
    const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
    const auto lo1 = static_cast<std::uint32_t>(p1);
    const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
    return {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
  }
};

/// Converts two 32-bit words to a double uniform on [0, 1) with 53-bit
/// resolution.
inline double uniform_double(std::uint32_t hi, std::uint32_t lo) {
  const std::uint64_t bits = (std::uint64_t{hi} << 32) | lo;
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Centered 32-bit uniform on (0, 1); grid spacing 2^-32, so the worst-case
/// bias of a Bernoulli comparison is 2^-33.
inline double uniform_single(std::uint32_t w) {
  return (static_cast<double>(w) + 0.5) * 0x1.0p-32;
}

/// Addressed per-gate randomness: counter = {gate_lo, gate_hi, block, stream}.
class GateRandom {
 public:
  GateRandom(std::uint64_t seed, std::uint64_t gate, std::uint32_t stream)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        base_{static_cast<std::uint32_t>(gate),
              static_cast<std::uint32_t>(gate >> 32), 0u, stream} {}

  /// The block-th 4x32 output for this gate.
  Philox4x32::Counter block(std::uint32_t block_index) const {
    auto ctr = base_;
    ctr[2] = block_index;
    return Philox4x32::block(ctr, key_);
  }

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter base_;
};

/// Sequential stream over Philox blocks, for the samplers that consume a
/// variable number of uniforms (aggregate mode, auxiliary draws).
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint32_t stream)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  double next_double() {
    const auto w0 = next_word();
    const auto w1 = next_word();
    return uniform_double(w0, w1);
  }

  std::uint32_t next_word() {
    if (index_ == 4) {
      buffer_ = Philox4x32::block(
          {static_cast<std::uint32_t>(counter_),
           static_cast<std::uint32_t>(counter_ >> 32), 0u, stream_},
          key_);
      ++counter_;
      index_ = 0;
    }
    return buffer_[index_++];
  }

 private:
  Philox4x32::Key key_;
  std::uint32_t stream_;
  std::uint64_t counter_ = 0;
  Philox4x32::Counter buffer_{};
  int index_ = 4;
};

/// SplitMix64 finalizer; used to derive independent sub-seeds (e.g. one per
/// sweep point) from a user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace slowpair
