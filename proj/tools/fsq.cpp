#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fsq/cli/commands.hpp"

namespace {

struct Flags {
  int n = 13;
  double xi = 1.0;
  int nl = 0;
  double threshold_cross = 1e-4;
  double threshold_drift = 1e-4;
  std::string out;
  std::string format;
  std::string state_in;
  int half_width = 2;
  std::string kind = "unitary";
  std::string method = "seq";
  std::uint64_t seed = 0;
};

struct Handles {
  CLI::Option* xi = nullptr;
  CLI::Option* nl = nullptr;
  CLI::Option* out = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* state_in = nullptr;
};

Handles add_common(CLI::App* app, Flags& f) {
  Handles h;
  app->add_option("--n", f.n, "Grid dimension N");
  h.xi = app->add_option("--xi", f.xi, "Squeezing parameter");
  h.nl = app->add_option("--nl", f.nl, "Evaluate this low-block size instead of scanning");
  app->add_option("--threshold-cross", f.threshold_cross, "Cross-block overlap bound");
  app->add_option("--threshold-drift", f.threshold_drift, "Low-block drift bound");
  h.out = app->add_option("--out", f.out, "Output file");
  h.format = app->add_option("--format", f.format, "csv or structured");
  app->add_option("--half-width", f.half_width, "Square-wave half width");
  app->add_option("--kind", f.kind, "unitary, oblique or provisional");
  app->add_option("--method", f.method, "seq, reseq or sym");
  app->add_option("--seed", f.seed, "Random seed (recorded in provenance)");
  return h;
}

}  // namespace

int main(int argc, char** argv) {
  using fsq::cli::ExitCode;
  CLI::App app{"Finite-lattice squeezing toolkit"};
  app.set_version_flag("--version", std::string(FSQ_VERSION_STRING));
  app.require_subcommand(1);

  Flags flags;
  std::string target;
  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a reference table or figure");
  reproduce->add_option("target", target, "table1, fig1, fig2 or fig3")
      ->required()
      ->check(CLI::IsMember({"table1", "fig1", "fig2", "fig3"}));
  std::vector<std::pair<CLI::App*, Handles>> subs;
  subs.emplace_back(reproduce, add_common(reproduce, flags));
  for (const char* name : {"states", "gram", "certify", "squeeze", "orthogonalize"}) {
    auto* sub = app.add_subcommand(name);
    Handles h = add_common(sub, flags);
    if (std::string(name) == "squeeze") {
      h.state_in = sub->add_option("--state-in", flags.state_in, "Input state (k,re,im)")->required();
    }
    subs.emplace_back(sub, h);
  }
  reproduce->description("Regenerate table1, fig1, fig2 or fig3");
  app.get_subcommand("states")->description("Oscillator basis amplitudes");
  app.get_subcommand("gram")->description("Overlap matrix and structure report");
  app.get_subcommand("certify")->description("Low/high block partition certificate");
  app.get_subcommand("squeeze")->description("Squeeze a state read from --state-in");
  app.get_subcommand("orthogonalize")->description("Dispersion monotonicity under orthogonalization");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::kParseFailure);
  }

  CLI::App* chosen = nullptr;
  Handles handles;
  for (auto& [sub, h] : subs) {
    if (sub->parsed()) {
      chosen = sub;
      handles = h;
    }
  }
  const std::string command = chosen->get_name();

  fsq::cli::RunConfig config;
  try {
    config.n = flags.n;
    config.xi = flags.xi;
    if (handles.xi->count() == 0 && command == "reproduce" && (target == "fig1" || target == "fig2")) {
      config.xi = 1.3;
    }
    if (handles.nl->count() > 0) config.low_block_override = flags.nl;
    config.thresholds.cross_block = flags.threshold_cross;
    config.thresholds.xi_drift = flags.threshold_drift;
    config.half_width = flags.half_width;
    config.kind = fsq::cli::parse_kind(flags.kind);
    config.method = fsq::cli::parse_method(flags.method);
    config.seed = flags.seed;
    if (handles.state_in && handles.state_in->count() > 0) config.state_in = flags.state_in;
    const bool format_flag = handles.format->count() > 0;
    if (format_flag) config.format = fsq::cli::parse_format(flags.format);
    if (handles.out->count() > 0) config.output_path = flags.out;
    const std::string base = command == "reproduce" ? target : command;
    fsq::cli::apply_environment(config, format_flag, handles.out->count() > 0, base,
                                fsq::cli::process_env, command == "certify" ? ".txt" : ".csv");
  } catch (const fsq::cli::ConfigError& e) {
    std::cerr << "fsq " << command << ": " << e.what() << "\n";
    return static_cast<int>(ExitCode::kParseFailure);
  }
  return static_cast<int>(fsq::cli::dispatch(command, target, config, std::cerr));
}
