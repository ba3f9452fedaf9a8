#include "slitmon/config_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace slitmon {

namespace {

using nlohmann::json;

constexpr const char* kSlit = "slit_separation_d";
constexpr const char* kDelta = "electron_width_delta";
constexpr const char* kProton = "proton_width_Delta";
constexpr const char* kVelocity = "electron_velocity_v";
constexpr const char* kEnergy = "kinetic_energy_ev";
constexpr const char* kScreen = "screen_distance_D";
constexpr const char* kTau = "interaction_time_tau";

double number_at(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) throw ConfigError(key, std::string("missing required key '") + key + "'");
  if (!it->is_number()) {
    throw ConfigError(key, std::string("key '") + key + "' must be a number");
  }
  const double value = it->get<double>();
  if (!(value > 0.0)) {
    throw ConfigError(key, std::string("key '") + key + "' must be positive");
  }
  return value;
}

std::optional<double> optional_number_at(const json& doc, const char* key) {
  if (!doc.contains(key)) return std::nullopt;
  return number_at(doc, key);
}

}  // namespace

ConfigError::ConfigError(std::string key, const std::string& message)
    : std::runtime_error(message), key_(std::move(key)) {}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{kSlit, kDelta,  kProton, kVelocity,
                                             kEnergy, kScreen, kTau};
  return keys;
}

ConfigInput parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");

  const auto& keys = config_keys();
  for (const auto& item : doc.items()) {
    if (std::find(keys.begin(), keys.end(), item.key()) == keys.end()) {
      throw ConfigError(item.key(), "unknown config key '" + item.key() + "'");
    }
  }

  const bool has_velocity = doc.contains(kVelocity);
  const bool has_energy = doc.contains(kEnergy);
  if (has_velocity && has_energy) {
    throw ConfigError(kEnergy, "keys 'electron_velocity_v' and 'kinetic_energy_ev' are "
                               "mutually exclusive");
  }
  if (!has_velocity && !has_energy) {
    throw ConfigError(kVelocity,
                      "one of 'electron_velocity_v' or 'kinetic_energy_ev' is required");
  }

  ConfigInput in;
  in.slit_separation = number_at(doc, kSlit);
  in.electron_width = number_at(doc, kDelta);
  in.proton_width = number_at(doc, kProton);
  in.electron_velocity = optional_number_at(doc, kVelocity);
  in.kinetic_energy_ev = optional_number_at(doc, kEnergy);
  in.screen_distance = number_at(doc, kScreen);
  in.interaction_time = optional_number_at(doc, kTau);
  return in;
}

ConfigInput load_config(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ConfigError("", "cannot open config file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return parse_config(buffer.str());
}

nlohmann::ordered_json to_json(const ExperimentConfig& config) {
  nlohmann::ordered_json out;
  out[kSlit] = config.slit_separation;
  out[kDelta] = config.electron_width;
  out[kProton] = config.proton_width;
  out[kVelocity] = config.electron_velocity;
  out[kScreen] = config.screen_distance;
  out[kTau] = interaction_time(config);
  return out;
}

nlohmann::ordered_json to_json(const DerivedParams& derived) {
  nlohmann::ordered_json out;
  out["impulse_model"] =
      derived.impulse_model == ImpulseModel::asymptotic ? "asymptotic" : "finite_tau";
  out["impulse"] = derived.impulse_P;
  out["alpha"] = derived.alpha;
  out["recoil_velocity"] = derived.recoil_velocity_v0;
  out["proton_velocity"] = derived.proton_velocity;
  out["visibility"] = derived.visibility_V;
  out["normalization"] = derived.normalization_N;
  out["propagation_time"] = derived.propagation_time_T;
  out["spreading_time"] = derived.spreading_time;
  out["fringe_spacing"] = derived.fringe_spacing_Lambda;
  out["envelope_factor"] = derived.envelope_factor_A;
  out["interaction_time"] = derived.interaction_time_tau;
  return out;
}

nlohmann::ordered_json to_json(const std::vector<RegimeWarning>& warnings) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& w : warnings) {
    out.push_back({{"name", w.name},
                   {"message", w.message},
                   {"value", w.value},
                   {"threshold", w.threshold}});
  }
  return out;
}

}  // namespace slitmon
