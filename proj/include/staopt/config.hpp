#ifndef STAOPT_CONFIG_HPP
#define STAOPT_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "staopt/harness.hpp"

namespace staopt {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key-value config with [section] headers and '#' comments. Keys are
/// stored as "section.key"; keys before any section header keep their bare
/// name. Parse errors carry line diagnostics.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(const std::string& text, const std::string& origin = "<config>");
ConfigMap parse_config_file(const std::string& path);

/// Apply "key=value" override strings on top of file values.
void apply_overrides(ConfigMap& cfg, const std::vector<std::string>& overrides);

/// Build an ExperimentConfig from the [experiment] section. Recognized keys:
/// functions (comma list of ID or ID:D), variants (comma list), reps, seed,
/// budget, epsilon, term_epsilon, reference, output, workers, curves, dim.
ExperimentConfig build_experiment_config(const ConfigMap& cfg);

}  // namespace staopt

#endif
