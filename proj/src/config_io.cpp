#include "cpmech/config_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

namespace cpmech {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double value = std::stod(text, &used);
    if (used != text.size() || std::isnan(value))
      throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ConfigError(key, "not a number: '" + text + "'");
  }
}

std::int64_t parse_int(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const std::int64_t value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ConfigError(key, "not an integer: '" + text + "'");
  }
}

std::uint64_t parse_uint(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    if (!text.empty() && text[0] == '-') throw std::invalid_argument("");
    const std::uint64_t value = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw ConfigError(key, "not an unsigned integer: '" + text + "'");
  }
}

using Entries = std::map<std::string, std::string>;

Entries parse_entries(const std::string& text) {
  Entries entries;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(line_no),
                        "expected 'key = value', got '" + stripped + "'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("line " + std::to_string(line_no),
                        "expected 'key = value', got '" + stripped + "'");
    if (!entries.emplace(key, value).second)
      throw ConfigError(key, "duplicate key");
  }
  return entries;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  Entries entries = parse_entries(text);

  const auto take = [&entries](const std::string& key) -> std::string {
    const auto it = entries.find(key);
    if (it == entries.end()) throw ConfigError(key, "missing required key");
    std::string value = it->second;
    entries.erase(it);
    return value;
  };

  const auto take_positive = [&take](const std::string& key) {
    const double v = parse_double(key, take(key));
    if (!(v > 0.0)) throw ConfigError(key, "must be > 0");
    return v;
  };

  ExperimentConfig config;
  config.source.pair_rate_hz = take_positive("pair_rate_hz");
  config.source.wavelength_m = take_positive("wavelength_m");
  config.amplifier.gain = parse_double("gain", take("gain"));
  if (!(config.amplifier.gain >= 1.0))
    throw ConfigError("gain", "must be >= 1");
  config.plate.mass_density_kg_m3 = take_positive("density_kg_m3");
  config.plate.thickness_m = take_positive("thickness_m");
  config.plate.radius_m = take_positive("radius_m");
  config.plate.birefringence = take_positive("birefringence");
  config.geometry.separation_m = take_positive("separation_m");
  config.geometry.measurement_window_s = take_positive("window_s");
  config.coast_time_s = parse_double("coast_s", take("coast_s"));
  if (config.coast_time_s < 0.0) throw ConfigError("coast_s", "must be >= 0");
  config.trial_interval_s = take_positive("interval_s");
  if (config.trial_interval_s < config.geometry.measurement_window_s)
    throw ConfigError("interval_s", "must be >= window_s");
  config.n_trials = parse_int("trials", take("trials"));
  if (config.n_trials < 1) throw ConfigError("trials", "must be >= 1");
  config.seed = parse_uint("seed", take("seed"));

  const std::string mode = take("mode");
  if (mode == "entangled")
    config.mode = CorrelationMode::Entangled;
  else if (mode == "uncorrelated")
    config.mode = CorrelationMode::Uncorrelated;
  else
    throw ConfigError("mode", "must be 'entangled' or 'uncorrelated'");

  // Readout noise keys are the only optional ones.
  if (entries.count("alice_noise_std_counts")) {
    const double v = parse_double("alice_noise_std_counts",
                                  take("alice_noise_std_counts"));
    if (v < 0.0) throw ConfigError("alice_noise_std_counts", "must be >= 0");
    config.readout.alice_count_noise_std = v;
  }
  if (entries.count("polarimeter_noise_std_rad")) {
    const double v = parse_double("polarimeter_noise_std_rad",
                                  take("polarimeter_noise_std_rad"));
    if (v < 0.0) throw ConfigError("polarimeter_noise_std_rad", "must be >= 0");
    config.readout.polarimeter_angle_noise_std_rad = v;
  }

  if (!entries.empty())
    throw ConfigError(entries.begin()->first, "unknown key");

  config.validate();
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, "cannot open config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string print_config(const ExperimentConfig& config) {
  char line[160];
  std::string out;
  const auto emit = [&](const char* key, double value) {
    std::snprintf(line, sizeof line, "%s = %.17g\n", key, value);
    out += line;
  };
  emit("pair_rate_hz", config.source.pair_rate_hz);
  emit("wavelength_m", config.source.wavelength_m);
  emit("gain", config.amplifier.gain);
  emit("density_kg_m3", config.plate.mass_density_kg_m3);
  emit("thickness_m", config.plate.thickness_m);
  emit("radius_m", config.plate.radius_m);
  emit("birefringence", config.plate.birefringence);
  emit("separation_m", config.geometry.separation_m);
  emit("window_s", config.geometry.measurement_window_s);
  emit("coast_s", config.coast_time_s);
  emit("interval_s", config.trial_interval_s);
  emit("alice_noise_std_counts", config.readout.alice_count_noise_std);
  emit("polarimeter_noise_std_rad",
       config.readout.polarimeter_angle_noise_std_rad);
  std::snprintf(line, sizeof line, "trials = %lld\n",
                static_cast<long long>(config.n_trials));
  out += line;
  std::snprintf(line, sizeof line, "seed = %llu\n",
                static_cast<unsigned long long>(config.seed));
  out += line;
  out += "mode = ";
  out += config.mode == CorrelationMode::Entangled ? "entangled"
                                                   : "uncorrelated";
  out += "\n";
  return out;
}

}  // namespace cpmech
