#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "slitmon/params.hpp"

namespace slitmon {

/// Schema violation in a config document. key() names the offending key
/// (empty when the problem is with the document as a whole).
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

/// The accepted config keys, in canonical order.
const std::vector<std::string>& config_keys();

ConfigInput parse_config(std::string_view json_text);
ConfigInput load_config(const std::filesystem::path& path);

/// Resolved config (velocity form, tau filled in) as a JSON object.
nlohmann::ordered_json to_json(const ExperimentConfig& config);
nlohmann::ordered_json to_json(const DerivedParams& derived);
nlohmann::ordered_json to_json(const std::vector<RegimeWarning>& warnings);

}  // namespace slitmon
