// Copyright (c) 2026 the slowpair authors.
// SPDX-License-Identifier: Apache-2.0
#include "slowpair/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "slowpair/calibration.hpp"

namespace slowpair {

namespace {

using nlohmann::json;

std::string location_of(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json profile_to_json(const GroupIndexProfile& profile) {
  json rows = json::array();
  for (const auto& s : profile.samples()) {
    rows.push_back({s.wavelength_nm, s.group_index, s.transmission_db});
  }
  return json{{"samples", rows}};
}

json channel_to_json(const ChannelSpec& c) {
  return json{{"detuning_nm", c.detuning_nm},
              {"filter_bandwidth_nm", c.filter_bandwidth_nm},
              {"total_loss_db", c.total_loss_db},
              {"detector_efficiency", c.detector_efficiency},
              {"noise_per_gate", c.noise_per_gate}};
}

json config_to_json_object(const ExperimentConfig& config) {
  const RunConfig& r = config.run;
  const MultiplexSpec& m = config.multiplex;
  return json{
      {"waveguide",
       {{"length_m", r.waveguide.length_m},
        {"gamma_base", r.waveguide.gamma_base},
        {"n_ref", r.waveguide.n_ref},
        {"linear_loss_db_per_m", r.waveguide.linear_loss_db_per_m},
        {"tpa_strength", r.waveguide.tpa_strength},
        {"fca_strength", r.waveguide.fca_strength},
        {"profile", profile_to_json(r.waveguide.profile)}}},
      {"pump",
       {{"wavelength_nm", r.pump.wavelength_nm},
        {"pulse_fwhm_s", r.pump.pulse_fwhm_s},
        {"effective_rep_rate_hz", r.pump.effective_rep_rate_hz},
        {"peak_power_w", r.pump.peak_power_w}}},
      {"channels",
       {{"signal", channel_to_json(r.signal)}, {"idler", channel_to_json(r.idler)}}},
      {"run",
       {{"model_kind", r.model_kind == PairKind::poisson ? "poisson" : "thermal"},
        {"schmidt_modes", r.schmidt_modes},
        {"n_pulses", r.n_pulses},
        {"seed", r.seed},
        {"mode", r.mode == SimMode::per_pulse ? "per_pulse" : "aggregate"}}},
      {"multiplex",
       {{"n_units", m.n_units},
        {"per_unit_mu", m.per_unit_mu},
        {"kind", m.kind == PairKind::poisson ? "poisson" : "thermal"},
        {"schmidt_modes", m.schmidt_modes},
        {"switch_loss_db", m.switch_loss_db},
        {"herald", channel_to_json(m.herald_channel)},
        {"output", channel_to_json(m.output_channel)}}}};
}

double number_at(const json& node, const std::string& path) {
  if (!node.is_number()) {
    throw config_error(path + ": expected a number");
  }
  return node.get<double>();
}

std::uint64_t unsigned_at(const json& node, const std::string& path) {
  if (!node.is_number_unsigned()) {
    throw config_error(path + ": expected a nonnegative integer");
  }
  return node.get<std::uint64_t>();
}

ChannelSpec channel_from_json(const json& node, const std::string& path) {
  ChannelSpec c;
  c.detuning_nm = number_at(node.at("detuning_nm"), path + ".detuning_nm");
  c.filter_bandwidth_nm =
      number_at(node.at("filter_bandwidth_nm"), path + ".filter_bandwidth_nm");
  c.total_loss_db = number_at(node.at("total_loss_db"), path + ".total_loss_db");
  c.detector_efficiency =
      number_at(node.at("detector_efficiency"), path + ".detector_efficiency");
  c.noise_per_gate = number_at(node.at("noise_per_gate"), path + ".noise_per_gate");
  return c;
}

GroupIndexProfile profile_from_json(const json& node) {
  if (node.contains("file")) {
    return GroupIndexProfile::load_csv(node.at("file").get<std::string>());
  }
  if (node.contains("synthetic")) {
    const json& s = node.at("synthetic");
    return GroupIndexProfile::synthetic_flat(
        number_at(s.at("flat_index"), "profile.synthetic.flat_index"),
        number_at(s.at("center_nm"), "profile.synthetic.center_nm"),
        number_at(s.at("half_window_nm"), "profile.synthetic.half_window_nm"),
        number_at(s.at("ramp_nm"), "profile.synthetic.ramp_nm"),
        number_at(s.at("edge_index"), "profile.synthetic.edge_index"));
  }
  if (node.contains("samples")) {
    std::vector<ProfileSample> rows;
    for (const auto& row : node.at("samples")) {
      if (!row.is_array() || row.size() != 3) {
        throw config_error("profile.samples: each row must be [wavelength_nm, group_index, transmission_db]");
      }
      rows.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>()});
    }
    return GroupIndexProfile(std::move(rows));
  }
  throw config_error("profile: expected one of 'file', 'synthetic', 'samples'");
}

PairKind kind_from_json(const json& node, const std::string& path) {
  const std::string text = node.is_string() ? node.get<std::string>() : "";
  if (text == "poisson") return PairKind::poisson;
  if (text == "thermal") return PairKind::thermal;
  throw config_error(path + ": expected 'poisson' or 'thermal'");
}

ExperimentConfig config_from_json(const json& merged, std::string preset_name) {
  ExperimentConfig config;
  config.preset_name = std::move(preset_name);
  RunConfig& r = config.run;

  const json& w = merged.at("waveguide");
  r.waveguide.length_m = number_at(w.at("length_m"), "waveguide.length_m");
  r.waveguide.gamma_base = number_at(w.at("gamma_base"), "waveguide.gamma_base");
  r.waveguide.n_ref = number_at(w.at("n_ref"), "waveguide.n_ref");
  r.waveguide.linear_loss_db_per_m =
      number_at(w.at("linear_loss_db_per_m"), "waveguide.linear_loss_db_per_m");
  r.waveguide.tpa_strength = number_at(w.at("tpa_strength"), "waveguide.tpa_strength");
  r.waveguide.fca_strength = number_at(w.at("fca_strength"), "waveguide.fca_strength");
  r.waveguide.profile = profile_from_json(w.at("profile"));

  const json& p = merged.at("pump");
  r.pump.wavelength_nm = number_at(p.at("wavelength_nm"), "pump.wavelength_nm");
  r.pump.pulse_fwhm_s = number_at(p.at("pulse_fwhm_s"), "pump.pulse_fwhm_s");
  r.pump.effective_rep_rate_hz =
      number_at(p.at("effective_rep_rate_hz"), "pump.effective_rep_rate_hz");
  r.pump.peak_power_w = number_at(p.at("peak_power_w"), "pump.peak_power_w");

  r.signal = channel_from_json(merged.at("channels").at("signal"), "channels.signal");
  r.idler = channel_from_json(merged.at("channels").at("idler"), "channels.idler");

  const json& run = merged.at("run");
  r.model_kind = kind_from_json(run.at("model_kind"), "run.model_kind");
  const double k = number_at(run.at("schmidt_modes"), "run.schmidt_modes");
  r.schmidt_modes = static_cast<int>(k);
  r.n_pulses = unsigned_at(run.at("n_pulses"), "run.n_pulses");
  r.seed = unsigned_at(run.at("seed"), "run.seed");
  const std::string mode = run.at("mode").is_string() ? run.at("mode").get<std::string>() : "";
  if (mode == "per_pulse") {
    r.mode = SimMode::per_pulse;
  } else if (mode == "aggregate") {
    r.mode = SimMode::aggregate;
  } else {
    throw config_error("run.mode: expected 'per_pulse' or 'aggregate'");
  }

  const json& m = merged.at("multiplex");
  config.multiplex.n_units =
      static_cast<std::uint32_t>(unsigned_at(m.at("n_units"), "multiplex.n_units"));
  config.multiplex.per_unit_mu = number_at(m.at("per_unit_mu"), "multiplex.per_unit_mu");
  config.multiplex.kind = kind_from_json(m.at("kind"), "multiplex.kind");
  config.multiplex.schmidt_modes =
      static_cast<int>(number_at(m.at("schmidt_modes"), "multiplex.schmidt_modes"));
  config.multiplex.switch_loss_db =
      number_at(m.at("switch_loss_db"), "multiplex.switch_loss_db");
  config.multiplex.herald_channel = channel_from_json(m.at("herald"), "multiplex.herald");
  config.multiplex.output_channel = channel_from_json(m.at("output"), "multiplex.output");

  try {
    config.run.validate();
    config.multiplex.validate();
  } catch (const std::invalid_argument& err) {
    throw config_error(err.what());
  }
  config.config_hash = fnv1a_hex(config_to_json(config));
  return config;
}

void flatten_paths(const json& node, const std::string& prefix,
                   std::vector<std::string>& out) {
  if (!node.is_object()) {
    out.push_back(prefix);
    return;
  }
  for (const auto& [key, value] : node.items()) {
    flatten_paths(value, prefix.empty() ? key : prefix + "." + key, out);
  }
}

/// Merges `user` over `base`, rejecting keys the schema does not know.
/// The waveguide profile is a one-of (file | synthetic | samples), so it is
/// replaced wholesale rather than merged.
json merge_over_preset(const json& base, const json& user,
                       const std::string& prefix) {
  json merged = base;
  for (const auto& [key, value] : user.items()) {
    const std::string path = prefix.empty() ? key : prefix + "." + key;
    if (path == "waveguide.profile") {
      if (!value.is_object() ||
          !(value.contains("file") || value.contains("synthetic") ||
            value.contains("samples"))) {
        throw config_error(
            "waveguide.profile: expected an object with 'file', 'synthetic' "
            "or 'samples'");
      }
      merged[key] = value;
      continue;
    }
    if (!base.contains(key)) {
      throw config_error("unknown configuration key: " + path);
    }
    if (base.at(key).is_object()) {
      if (!value.is_object()) {
        throw config_error(path + ": expected an object");
      }
      merged[key] = merge_over_preset(base.at(key), value, path);
    } else {
      merged[key] = value;
    }
  }
  return merged;
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (const char c : text) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ull;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

std::string config_to_json(const ExperimentConfig& config) {
  return config_to_json_object(config).dump(2);
}

ExperimentConfig preset_config(const std::string& name) {
  if (name != "paper-fig3") {
    throw config_error("unknown preset: '" + name + "' (available: paper-fig3)");
  }
  ExperimentConfig config;
  config.preset_name = name;
  config.run = paper_fig3_config();
  config.multiplex.n_units = 10;
  config.multiplex.per_unit_mu = 0.006;
  config.multiplex.kind = PairKind::poisson;
  config.multiplex.schmidt_modes = 1;
  config.multiplex.herald_channel = config.run.signal;
  config.multiplex.output_channel = config.run.idler;
  config.multiplex.switch_loss_db = 0.5;
  std::vector<std::string> leaves;
  flatten_paths(config_to_json_object(config), "", leaves);
  for (const auto& path : leaves) config.provenance[path] = "default";
  config.config_hash = fnv1a_hex(config_to_json(config));
  return config;
}

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
  json user;
  try {
    user = json::parse(text);
  } catch (const json::parse_error& err) {
    throw config_error(origin + ": parse error at " +
                       location_of(text, err.byte) + ": " + err.what());
  }
  if (!user.is_object()) {
    throw config_error(origin + ": top level must be a JSON object");
  }

  ExperimentConfig preset = preset_config("paper-fig3");
  const json base = config_to_json_object(preset);
  const json merged = merge_over_preset(base, user, "");

  ExperimentConfig config = config_from_json(merged, preset.preset_name);

  // Provenance: a top-section leaf is "config" if the user supplied it.
  std::vector<std::string> user_paths;
  flatten_paths(user, "", user_paths);
  config.provenance = preset.provenance;
  for (auto& [path, source] : config.provenance) {
    for (const auto& user_path : user_paths) {
      if (user_path == path || user_path.rfind(path + ".", 0) == 0) {
        source = "config";
        break;
      }
    }
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

}  // namespace slowpair
