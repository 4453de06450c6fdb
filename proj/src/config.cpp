#include "staopt/config.hpp"

#include <fstream>
#include <sstream>

namespace staopt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

ConfigMap parse_config_text(const std::string& text, const std::string& origin) {
  ConfigMap cfg;
  std::stringstream ss(text);
  std::string line;
  std::string section;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": unterminated section header");
      }
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
    }
    cfg[section.empty() ? key : section + "." + key] = trim(line.substr(eq + 1));
  }
  return cfg;
}

ConfigMap parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str(), path);
}

void apply_overrides(ConfigMap& cfg, const std::vector<std::string>& overrides) {
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("override must be key=value: " + o);
    cfg[trim(o.substr(0, eq))] = trim(o.substr(eq + 1));
  }
}

ExperimentConfig build_experiment_config(const ConfigMap& cfg) {
  ExperimentConfig out;
  auto get = [&](const std::string& key) -> const std::string* {
    auto it = cfg.find("experiment." + key);
    if (it == cfg.end()) it = cfg.find(key);
    return it == cfg.end() ? nullptr : &it->second;
  };
  auto parse_ll = [&](const std::string& key, const std::string& v) {
    try {
      return std::stoll(v);
    } catch (const std::exception&) {
      throw ConfigError("invalid integer for " + key + ": " + v);
    }
  };
  auto parse_d = [&](const std::string& key, const std::string& v) {
    try {
      return std::stod(v);
    } catch (const std::exception&) {
      throw ConfigError("invalid number for " + key + ": " + v);
    }
  };

  std::size_t default_dim = 2;
  if (const auto* v = get("dim")) default_dim = static_cast<std::size_t>(parse_ll("dim", *v));

  if (const auto* v = get("functions")) {
    for (const auto& item : split_list(*v)) {
      const auto colon = item.find(':');
      FunctionCase fc;
      if (colon == std::string::npos) {
        fc.id = item;
        fc.dim = default_dim;
      } else {
        fc.id = trim(item.substr(0, colon));
        fc.dim = static_cast<std::size_t>(parse_ll("functions", item.substr(colon + 1)));
      }
      out.functions.push_back(fc);
    }
  }
  if (const auto* v = get("variants")) {
    for (const auto& name : split_list(*v)) {
      VariantConfig vc;
      vc.variant = variant_from_string(name);
      out.variants.push_back(vc);
    }
  }
  if (const auto* v = get("reps")) out.repetitions = static_cast<int>(parse_ll("reps", *v));
  if (const auto* v = get("seed")) out.base_seed = static_cast<std::uint64_t>(parse_ll("seed", *v));
  if (const auto* v = get("budget")) out.budget = parse_ll("budget", *v);
  if (const auto* v = get("epsilon")) out.success_epsilon = parse_d("epsilon", *v);
  if (const auto* v = get("term_epsilon")) out.termination_epsilon = parse_d("term_epsilon", *v);
  if (const auto* v = get("reference")) out.reference_variant = *v;
  if (const auto* v = get("output")) out.output_dir = *v;
  if (const auto* v = get("workers"))
    out.workers = static_cast<std::size_t>(parse_ll("workers", *v));
  if (const auto* v = get("curves")) out.write_curves = (*v == "true" || *v == "1");
  return out;
}

}  // namespace staopt
