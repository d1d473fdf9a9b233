#include "bakerlab/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bakerlab {

std::string ExperimentConfig::get_string(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw config_error("missing config key '" + key + "'");
  return it->second;
}

std::string ExperimentConfig::get_string(const std::string& key,
                                         const std::string& dflt) const {
  auto it = values.find(key);
  return it == values.end() ? dflt : it->second;
}

double ExperimentConfig::get_real(const std::string& key) const {
  const std::string s = get_string(key);
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("config key '" + key + "' is not a number: " + s);
  }
}

double ExperimentConfig::get_real(const std::string& key, double dflt) const {
  return has(key) ? get_real(key) : dflt;
}

long ExperimentConfig::get_int(const std::string& key) const {
  const std::string s = get_string(key);
  try {
    size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw config_error("config key '" + key + "' is not an integer: " + s);
  }
}

long ExperimentConfig::get_int(const std::string& key, long dflt) const {
  return has(key) ? get_int(key) : dflt;
}

std::string ExperimentConfig::canonical() const {
  std::string out;
  for (const auto& [k, v] : values) {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

ExperimentConfig parse_json_text(const std::string& text) {
  ExperimentConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("invalid JSON config: ") + e.what());
  }
  if (!j.is_object()) throw config_error("JSON config must be a flat object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const auto& v = *it;
    if (v.is_string())
      cfg.values[it.key()] = v.get<std::string>();
    else if (v.is_number_integer())
      cfg.values[it.key()] = std::to_string(v.get<long long>());
    else if (v.is_number_float()) {
      std::ostringstream os;
      os.precision(17);
      os << v.get<double>();
      cfg.values[it.key()] = os.str();
    } else if (v.is_boolean())
      cfg.values[it.key()] = v.get<bool>() ? "1" : "0";
    else
      throw config_error("JSON config values must be scalars (key '" +
                         it.key() + "')");
  }
  return cfg;
}

}  // namespace

ExperimentConfig parse_config_text(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '{') return parse_json_text(text);
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw config_error("config line " + std::to_string(lineno) +
                         " is not key=value: " + s);
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (key.empty()) throw config_error("empty key on line " + std::to_string(lineno));
    if (cfg.values.count(key))
      throw config_error("duplicate config key '" + key + "'");
    cfg.values[key] = val;
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("cannot read config file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config_text(os.str());
}

namespace {

const std::set<std::string> kCommon = {"kind", "seed", "threads", "out"};

const std::map<std::string, std::pair<std::set<std::string>, std::set<std::string>>>&
schema() {
  // kind -> (required keys, optional keys); kCommon is implicitly allowed
  static const std::map<std::string,
                        std::pair<std::set<std::string>, std::set<std::string>>>
      s = {
          {"render",
           {{"map", "center_re", "center_im", "width", "height", "px_w", "px_h"},
            {"n_max", "escape_radius", "bounded_radius", "alpha"}}},
          {"circle-stats",
           {{"inner", "samples", "n"},
            {"arc_eps", "arc_lo", "arc_hi", "lambda", "shift"}}},
          {"classify", {{"map"}, {"depth", "alpha"}}},
          {"periodic",
           {{"map", "re_lo", "re_hi", "im_lo", "im_hi"},
            {"max_period", "count", "grid_nx", "grid_ny", "alpha"}}},
          {"boundary-class",
           {{"map", "re_lo", "re_hi", "im_lo", "im_hi"},
            {"count", "horizon", "alpha"}}},
          {"dimension",
           {{"mode"},
            {"b1", "b2", "map", "base_re", "base_im", "base_radius", "chains",
             "alpha"}}},
          {"probe",
           {{"inner", "mode"},
            {"target", "depth", "budget", "eps", "windows", "count"}}},
      };
  return s;
}

}  // namespace

void validate_config(const ExperimentConfig& cfg) {
  std::string kind = cfg.get_string("kind");
  auto it = schema().find(kind);
  if (it == schema().end()) {
    std::string known;
    for (const auto& [k, v] : schema()) known += " " + k;
    throw config_error("unknown experiment kind '" + kind + "'; known:" + known);
  }
  const auto& [required, optional] = it->second;
  for (const auto& k : required)
    if (!cfg.has(k))
      throw config_error("kind '" + kind + "' requires config key '" + k + "'");
  for (const auto& [k, v] : cfg.values) {
    if (kCommon.count(k) || required.count(k) || optional.count(k)) continue;
    throw config_error("unknown config key '" + k + "' for kind '" + kind + "'");
  }
}

}  // namespace bakerlab
