#ifndef NETFORM_PRESETS_HPP
#define NETFORM_PRESETS_HPP

#include <string>
#include <vector>

#include "netform/experiment.hpp"

namespace netform {

// A named, ready-to-run experiment configuration.
struct Preset {
  std::string name;
  std::string description;
  ExperimentConfig config;
};

const std::vector<Preset>& preset_table();

// Throws std::invalid_argument on an unknown name. A couple of short
// aliases are accepted (friends1 -> friends1-n10, friends2 -> friends2-n10).
ExperimentConfig preset_config(const std::string& name);

// Executes an already-resolved configuration and, when out_dir is set,
// writes the summary and per-replica matrices.
ExperimentResult run_configured(const ExperimentConfig& cfg);

// preset_config + overrides applied by the caller, then run_configured.
ExperimentResult run_preset(const std::string& name);

}  // namespace netform

#endif  // NETFORM_PRESETS_HPP
