// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "slowpair/montecarlo.hpp"
#include "slowpair/multiplexing.hpp"

namespace slowpair {

/// Thrown for malformed / out-of-range configuration input. The message
/// names the offending field or the parse position.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A validated experiment configuration plus bookkeeping: where each value
/// came from (preset default or user config) and a stable hash of the
/// effective configuration.
struct ExperimentConfig {
  RunConfig run;
  MultiplexSpec multiplex;
  std::string preset_name;
  /// Flattened field path -> "default" | "config".
  std::map<std::string, std::string> provenance;
  std::string config_hash;
};

/// The named preset as a config (currently only "paper-fig3").
ExperimentConfig preset_config(const std::string& name);

/// Loads a JSON config file. Missing fields are filled from the paper
/// preset (recorded in the provenance table); unknown keys are rejected;
/// ranges are enforced at load time. Parse errors carry line/column.
ExperimentConfig load_config(const std::string& path);

/// Same, from a JSON string (origin names the source in error messages).
ExperimentConfig parse_config(const std::string& text, const std::string& origin);

/// Serializes the effective configuration (canonical key order).
std::string config_to_json(const ExperimentConfig& config);

/// FNV-1a 64-bit hash of a canonical JSON dump, as fixed-width hex.
std::string fnv1a_hex(const std::string& text);

}  // namespace slowpair
