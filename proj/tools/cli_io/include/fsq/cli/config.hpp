#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fsq/certifier.hpp"
#include "fsq/engine.hpp"
#include "fsq/errors.hpp"

namespace fsq::cli {

// Process exit codes. Nothing else is ever returned.
enum class ExitCode : int {
  kOk = 0,
  kReferenceMismatch = 2,
  kIoFailure = 3,
  kParseFailure = 4,
  kRefused = 5,
};

enum class Format { kCsv, kStructured };

// Raised for invalid flags, environment values or input files.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// Effective settings of one command after flags, environment and defaults
/// have been merged (flags > FSQ_* environment > defaults).
struct RunConfig {
  int n = 13;
  double xi = 1.0;
  std::optional<int> low_block_override;
  Thresholds thresholds;
  std::filesystem::path output_path;
  Format format = Format::kCsv;
  std::uint64_t seed = 0;
  int half_width = 2;
  OperatorKind kind = OperatorKind::kUnitary;
  OrthoMethod method = OrthoMethod::kSequential;
  std::optional<std::filesystem::path> state_in;

  // Throws ConfigError on the first invalid field.
  void validate() const;
  // (key, value) pairs for the provenance header, fixed order.
  std::vector<std::pair<std::string, std::string>> echo() const;
};

std::string_view to_string(Format f) noexcept;
Format parse_format(std::string_view s);
OperatorKind parse_kind(std::string_view s);
OrthoMethod parse_method(std::string_view s);
std::string_view method_flag(OrthoMethod m) noexcept;

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

// Reads the real process environment.
std::optional<std::string> process_env(const std::string& name);

/// Fills the environment-controlled fields that were not given as flags:
/// FSQ_FORMAT and FSQ_OUT_DIR (directory for `default_file`).
void apply_environment(RunConfig& config, bool format_from_flag, bool out_from_flag,
                       const std::string& default_file, const EnvLookup& env,
                       const std::string& csv_extension = ".csv");

}  // namespace fsq::cli
