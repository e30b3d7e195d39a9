#ifndef NETFORM_CLI_HPP
#define NETFORM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "netform/experiment.hpp"

namespace netform {

enum class CliAction { Run, Preset, ListPresets };

// Thrown by parse_command when the user asked for --help; carries the text
// to print. Not an error.
struct CliHelpRequested {
  std::string text;
};

struct ParsedCommand {
  CliAction action = CliAction::Run;
  std::string preset_name;
  ExperimentConfig config;  // defaults (or preset defaults) with flags applied
};

// Parses subcommand + flags (+ optional --config file). Precedence is
// flags over file values over defaults; unknown flags, unknown config keys
// and out-of-range values throw std::invalid_argument with a message that
// names the offending key.
ParsedCommand parse_command(const std::vector<std::string>& args);

// Full CLI behavior behind the binary: parse, execute, print. Returns the
// process exit status.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace netform

#endif  // NETFORM_CLI_HPP
