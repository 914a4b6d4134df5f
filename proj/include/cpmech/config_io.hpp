// Experiment configuration files: `key = value` lines, `#` comments, unit
// suffixes in the key names. Unknown keys are rejected; only the two
// readout-noise keys have defaults.

#pragma once

#include <stdexcept>
#include <string>

#include "cpmech/experiment.hpp"

namespace cpmech {

class ConfigError : public std::runtime_error {
 public:
  ConfigError(const std::string& key, const std::string& message)
      : std::runtime_error("config key '" + key + "': " + message), key_(key) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

ExperimentConfig load_config(const std::string& path);

// Same grammar, parsed from memory.
ExperimentConfig parse_config(const std::string& text);

// Canonical key = value block; load(print(config)) == config, with doubles
// rendered in round-trip-exact decimal form.
std::string print_config(const ExperimentConfig& config);

}  // namespace cpmech
