#include "netform/presets.hpp"

#include <stdexcept>

#include "netform/io.hpp"

namespace netform {

namespace {

ExperimentConfig base(const std::string& model, int agents,
                      std::int64_t rounds, int runs, std::int64_t stride) {
  ExperimentConfig cfg;
  cfg.model = model;
  cfg.agents = agents;
  cfg.rounds = rounds;
  cfg.runs = runs;
  cfg.stride = stride;
  return cfg;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> presets;

  {
    auto cfg = base("friends1", 3, 10000, 500, 1000);
    presets.push_back({"friends1-n3",
                       "asymmetric uniform reinforcement, 3 agents; limit "
                       "entries are Uniform(0,1)",
                       cfg});
  }
  {
    auto cfg = base("friends1", 10, 1000, 100, 100);
    presets.push_back({"friends1-n10",
                       "asymmetric uniform reinforcement, 10 agents, the "
                       "1000-round baseline run",
                       cfg});
  }
  {
    auto cfg = base("friends2", 3, 1000, 500, 100);
    presets.push_back({"friends2-n3",
                       "reciprocal reinforcement, 3 agents; tracks proximity "
                       "to the three unstable rest states",
                       cfg});
  }
  {
    auto cfg = base("friends2", 10, 1000, 100, 100);
    presets.push_back({"friends2-n10",
                       "reciprocal uniform reinforcement, 10 agents",
                       cfg});
  }
  {
    auto cfg = base("enemies1", 5, 10000, 200, 1000);
    presets.push_back({"enemies1-resistance",
                       "asymmetric punishment with resistance dynamics; "
                       "drives the matrix uniform",
                       cfg});
  }
  {
    auto cfg = base("enemies2", 5, 10000, 200, 1000);
    presets.push_back({"enemies2-resistance",
                       "reciprocal punishment with resistance dynamics",
                       cfg});
  }
  {
    auto cfg = base("transfer", 3, 10000, 20, 1);  // odd stride: the chain alternates parity
    presets.push_back({"ehrenfest-2ball",
                       "ball-transfer punishment, 2 balls per agent pair; "
                       "prints the exact stationary vector",
                       cfg});
  }
  {
    auto cfg = base("transfer", 3, 2000, 20, 1);
    cfg.init_weight = 5;  // 10 balls per two-urn system
    presets.push_back({"ehrenfest-mixing",
                       "ball-transfer punishment with 10 balls; reports lazy-"
                       "chain mixing toward the binomial law",
                       cfg});
  }
  {
    auto cfg = base("friends1", 10, 2000, 200, 200);
    cfg.discount = 0.9;
    presets.push_back({"discounted-friends1",
                       "discounted asymmetric reinforcement; every agent "
                       "locks onto a single partner",
                       cfg});
  }
  {
    auto cfg = base("friends2", 10, 2000, 200, 200);
    cfg.discount = 0.9;
    presets.push_back({"discounted-friends2",
                       "discounted reciprocal reinforcement; the group "
                       "freezes into pairs and stars",
                       cfg});
  }
  {
    auto cfg = base("friends2", 3, 10000, 100, 1000);
    cfg.noise = 0.1;
    presets.push_back({"noisy-friends2",
                       "reciprocal reinforcement with exploration noise; the "
                       "uniform matrix is the only stable point",
                       cfg});
  }
  {
    auto cfg = base("friends2", 4, 100000, 4, 10);
    cfg.discount = 0.9;
    cfg.noise = 0.01;
    presets.push_back({"noisy-discounted-friends2",
                       "discounting plus vanishing noise, 4 agents; all-pairs "
                       "states dominate the occupied time",
                       cfg});
  }
  {
    auto cfg = base("staghunt", 10, 100000, 50, 1000);
    presets.push_back({"staghunt-frozen",
                       "stag hunt with frozen types, 5 of each; cross-type "
                       "visits die out",
                       cfg});
  }
  {
    auto cfg = base("staghunt", 10, 10000, 100, 1000);
    cfg.discount = 0.9;
    presets.push_back({"staghunt-discounted",
                       "stag hunt with discounting and frozen types",
                       cfg});
  }
  {
    auto cfg = base("staghunt", 10, 1000, 500, 100);
    cfg.revision_prob = 0.1;
    presets.push_back({"staghunt-coevolve-q1",
                       "co-evolving types, fast revision (q=0.1); most groups "
                       "coordinate on rabbit",
                       cfg});
  }
  {
    auto cfg = base("staghunt", 10, 1000, 500, 100);
    cfg.revision_prob = 0.01;
    presets.push_back({"staghunt-coevolve-q01",
                       "co-evolving types, slow revision (q=0.01); most "
                       "groups coordinate on stag",
                       cfg});
  }
  {
    auto cfg = base("staghunt", 10, 1000, 500, 100);
    cfg.revision_prob = 0.1;
    cfg.init_weight = 1000;
    presets.push_back({"staghunt-heavy-weights",
                       "co-evolving types under heavy initial weights; stag "
                       "coordination becomes rare",
                       cfg});
  }

  for (auto& p : presets) p.config.out_dir = "results/" + p.name;
  return presets;
}

}  // namespace

const std::vector<Preset>& preset_table() {
  static const std::vector<Preset> presets = build_presets();
  return presets;
}

ExperimentConfig preset_config(const std::string& name) {
  std::string wanted = name;
  // Short aliases for the two baseline models at the default population.
  if (wanted == "friends1") wanted = "friends1-n10";
  if (wanted == "friends2") wanted = "friends2-n10";
  for (const auto& preset : preset_table()) {
    if (preset.name == wanted) return preset.config;
  }
  throw std::invalid_argument("preset: unknown preset '" + name + "'");
}

ExperimentResult run_configured(const ExperimentConfig& cfg) {
  ExperimentResult result = run_experiment(cfg);
  if (!cfg.out_dir.empty()) {
    write_experiment_files(result);
  }
  return result;
}

ExperimentResult run_preset(const std::string& name) {
  return run_configured(preset_config(name));
}

}  // namespace netform
