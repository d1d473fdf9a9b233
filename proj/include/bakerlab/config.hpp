#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bakerlab/error.hpp"

namespace bakerlab {

struct config_error : error {
  using error::error;
};

// Flat key=value experiment description. Two on-disk forms, one schema:
// '#'-comment text files and flat JSON objects.
struct ExperimentConfig {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  std::string get_string(const std::string& key) const;
  std::string get_string(const std::string& key, const std::string& dflt) const;
  double get_real(const std::string& key) const;
  double get_real(const std::string& key, double dflt) const;
  long get_int(const std::string& key) const;
  long get_int(const std::string& key, long dflt) const;

  // canonical "k=v\n" text in key order; hashed into the manifest
  std::string canonical() const;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text);

// rejects unknown keys and missing required keys for the config's kind
void validate_config(const ExperimentConfig& cfg);

}  // namespace bakerlab
