#include "netform/cli.hpp"

#include <CLI11.hpp>
#include <ostream>

#include "netform/io.hpp"
#include "netform/presets.hpp"

namespace netform {

namespace {

constexpr const char* kUsage =
    "netform: reinforcement-driven social network simulator\n"
    "\n"
    "Usage:\n"
    "  netform run [flags]            run an explicitly configured experiment\n"
    "  netform preset <name> [flags]  run a named preset (flags override)\n"
    "  netform list-presets           list the available presets\n"
    "\n";

// Flag values land here; only options the user (or a config file) actually
// set are folded onto the base configuration.
struct FlagParser {
  CLI::App app{"netform experiment flags"};
  ExperimentConfig cfg;
  CLI::Option* model;
  CLI::Option* agents;
  CLI::Option* rounds;
  CLI::Option* runs;
  CLI::Option* seed;
  CLI::Option* discount;
  CLI::Option* noise;
  CLI::Option* revision_prob;
  CLI::Option* init_weight;
  CLI::Option* graph_eps;
  CLI::Option* fixation_tol;
  CLI::Option* stride;
  CLI::Option* out;
  CLI::Option* format;
  CLI::Option* threads;

  FlagParser() {
    model = app.add_option("--model", cfg.model,
                           "friends1|friends2|enemies1|enemies2|transfer|"
                           "staghunt|loglik-friends1|loglik-friends2");
    agents = app.add_option("--agents", cfg.agents, "population size");
    rounds = app.add_option("--rounds", cfg.rounds, "visit rounds per run");
    runs = app.add_option("--runs", cfg.runs, "ensemble replicas");
    seed = app.add_option("--seed", cfg.seed, "master seed");
    discount = app.add_option("--discount", cfg.discount,
                              "per-round weight decay d in (0,1]");
    noise = app.add_option("--noise", cfg.noise,
                           "uniform exploration weight in [0,1)");
    revision_prob = app.add_option("--revision-prob", cfg.revision_prob,
                                   "per-agent type-revision probability");
    init_weight = app.add_option("--init-weight", cfg.init_weight,
                                 "initial off-diagonal weight");
    graph_eps = app.add_option("--graph-eps", cfg.graph_eps,
                               "edge threshold, 0 = auto 1/(4n)");
    fixation_tol = app.add_option("--fixation-tol", cfg.fixation_tol,
                                  "degeneracy tolerance for classification");
    stride = app.add_option("--stride", cfg.stride, "snapshot stride");
    out = app.add_option("--out", cfg.out_dir, "output directory");
    format = app.add_option("--format", cfg.format, "csv or json");
    threads = app.add_option("--threads", cfg.threads,
                             "worker threads, 0 = hardware");
    app.set_config("--config", "", "read options from an INI/TOML file");
    app.allow_config_extras(false);
  }

  // Parses the flag tail; config-file values count as set, and flags given
  // on the command line win over them.
  void parse(std::vector<std::string> args) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      throw CliHelpRequested{kUsage + app.help()};
    } catch (const CLI::ParseError& e) {
      throw std::invalid_argument(e.what());
    }
  }

  void apply(ExperimentConfig& base) const {
    auto set = [](const CLI::Option* opt) { return opt->count() > 0; };
    if (set(model)) base.model = cfg.model;
    if (set(agents)) base.agents = cfg.agents;
    if (set(rounds)) base.rounds = cfg.rounds;
    if (set(runs)) base.runs = cfg.runs;
    if (set(seed)) base.seed = cfg.seed;
    if (set(discount)) base.discount = cfg.discount;
    if (set(noise)) base.noise = cfg.noise;
    if (set(revision_prob)) base.revision_prob = cfg.revision_prob;
    if (set(init_weight)) base.init_weight = cfg.init_weight;
    if (set(graph_eps)) base.graph_eps = cfg.graph_eps;
    if (set(fixation_tol)) base.fixation_tol = cfg.fixation_tol;
    if (set(stride)) base.stride = cfg.stride;
    if (set(out)) base.out_dir = cfg.out_dir;
    if (set(format)) base.format = cfg.format;
    if (set(threads)) base.threads = cfg.threads;
  }
};

}  // namespace

ParsedCommand parse_command(const std::vector<std::string>& args) {
  if (args.empty()) {
    throw CliHelpRequested{kUsage};
  }

  ParsedCommand parsed;
  std::vector<std::string> tail;
  const std::string& head = args.front();

  if (head == "-h" || head == "--help") {
    FlagParser help_parser;
    throw CliHelpRequested{kUsage + help_parser.app.help()};
  }
  if (head == "list-presets") {
    if (args.size() > 1) {
      throw std::invalid_argument("list-presets takes no arguments");
    }
    parsed.action = CliAction::ListPresets;
    return parsed;
  }
  if (head == "preset") {
    if (args.size() < 2 || args[1].empty() || args[1][0] == '-') {
      throw std::invalid_argument("preset: missing preset name");
    }
    parsed.action = CliAction::Preset;
    parsed.preset_name = args[1];
    parsed.config = preset_config(args[1]);  // throws on unknown name
    tail.assign(args.begin() + 2, args.end());
  } else if (head == "run") {
    parsed.action = CliAction::Run;
    tail.assign(args.begin() + 1, args.end());
  } else if (head[0] == '-') {
    // Bare flags mean an implicit `run`.
    parsed.action = CliAction::Run;
    tail = args;
  } else {
    throw std::invalid_argument("unknown subcommand '" + head +
                                "'; expected run, preset, or list-presets");
  }

  FlagParser flags;
  flags.parse(tail);
  flags.apply(parsed.config);
  validate_experiment(parsed.config);
  return parsed;
}

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  ParsedCommand parsed;
  try {
    parsed = parse_command(args);
  } catch (const CliHelpRequested& help) {
    out << help.text;
    return 0;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    switch (parsed.action) {
      case CliAction::ListPresets: {
        for (const auto& preset : preset_table()) {
          out << preset.name << "\n    " << preset.description << "\n";
        }
        return 0;
      }
      case CliAction::Run:
      case CliAction::Preset: {
        ExperimentResult result = run_configured(parsed.config);
        out << summary_json(result);
        if (!result.written_files.empty()) {
          err << "wrote " << result.written_files.size() << " files to "
              << parsed.config.out_dir << "\n";
        }
        return 0;
      }
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace netform
