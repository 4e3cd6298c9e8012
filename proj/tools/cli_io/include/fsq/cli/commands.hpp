#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fsq/cli/config.hpp"
#include "fsq/cli/export.hpp"

namespace fsq::cli {

// A rendered command output and the exit code it implies.
struct CommandOutput {
  ExportTable table;
  // When set, written instead of the rendered table (certify in csv format).
  std::string raw_text;
  ExitCode code = ExitCode::kOk;
};

// Widths shown in the squeezed-square-wave reproduction.
inline constexpr double kFig3SqueezeXi = 0.9;
inline constexpr double kFig3StretchXi = 1.1;

CommandOutput reproduce_table1(const RunConfig& config);
// n = 0 for fig1, n = 1 for fig2; widths 1 and config.xi.
CommandOutput reproduce_lattice_figure(const RunConfig& config, int n);
CommandOutput reproduce_fig3(const RunConfig& config);

CommandOutput compute_states(const RunConfig& config);
CommandOutput compute_gram(const RunConfig& config);
CommandOutput compute_certify(const RunConfig& config);
CommandOutput compute_squeeze(const RunConfig& config, const StateVector& input);
CommandOutput compute_orthogonalize(const RunConfig& config);

// Renders per config.format and writes atomically to config.output_path.
void write_output(const RunConfig& config, std::string_view command, CommandOutput& out);

/// Runs `body`, writes its output and maps every failure onto the exit-code
/// contract; diagnostics go to `diag`.
ExitCode run_command(std::string_view command, const RunConfig& config,
                     const std::function<CommandOutput()>& body, std::ostream& diag);

// Full dispatch used by the executable: reproduce <target> or a compute
// subcommand name. Validates the config first.
ExitCode dispatch(std::string_view command, std::string_view target, RunConfig config,
                  std::ostream& diag);

}  // namespace fsq::cli
