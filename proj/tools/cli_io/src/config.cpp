#include "fsq/cli/config.hpp"

#include <cmath>
#include <cstdlib>

#include "fsq/cli/export.hpp"

namespace fsq::cli {

std::string_view to_string(Format f) noexcept {
  return f == Format::kCsv ? "csv" : "structured";
}

Format parse_format(std::string_view s) {
  if (s == "csv") return Format::kCsv;
  if (s == "structured") return Format::kStructured;
  throw ConfigError("unknown format '" + std::string(s) + "' (expected csv|structured)");
}

OperatorKind parse_kind(std::string_view s) {
  if (s == "unitary") return OperatorKind::kUnitary;
  if (s == "oblique") return OperatorKind::kOblique;
  if (s == "provisional") return OperatorKind::kProvisional;
  throw ConfigError("unknown operator kind '" + std::string(s) +
                    "' (expected unitary|oblique|provisional)");
}

OrthoMethod parse_method(std::string_view s) {
  if (s == "seq") return OrthoMethod::kSequential;
  if (s == "reseq") return OrthoMethod::kReorderedSequential;
  if (s == "sym") return OrthoMethod::kSymmetric;
  throw ConfigError("unknown method '" + std::string(s) + "' (expected seq|reseq|sym)");
}

std::string_view method_flag(OrthoMethod m) noexcept {
  switch (m) {
    case OrthoMethod::kSequential: return "seq";
    case OrthoMethod::kReorderedSequential: return "reseq";
    case OrthoMethod::kSymmetric: return "sym";
  }
  return "seq";
}

void RunConfig::validate() const {
  const bool odd_ok = n % 2 != 0 && n >= LatticeGrid::kMinOdd && n <= LatticeGrid::kMaxOdd;
  const bool even_ok = n % 2 == 0 && n >= LatticeGrid::kMinEven && n <= LatticeGrid::kMaxEven;
  if (!odd_ok && !even_ok) {
    throw ConfigError("--n " + std::to_string(n) + " outside supported range (odd 3..201, even 4..200)");
  }
  if (!(xi > 0.0) || !std::isfinite(xi) || !std::isfinite(1.0 / xi)) {
    throw ConfigError("--xi must be positive and finite");
  }
  if (low_block_override && (*low_block_override < 1 || *low_block_override > n)) {
    throw ConfigError("--nl must lie in [1, " + std::to_string(n) + "]");
  }
  if (!(thresholds.cross_block > 0.0) || !(thresholds.xi_drift > 0.0)) {
    throw ConfigError("thresholds must be positive");
  }
  if (half_width < 0 || half_width > (n % 2 != 0 ? (n - 1) / 2 : n / 2 - 1)) {
    throw ConfigError("--half-width " + std::to_string(half_width) + " does not fit on N=" +
                      std::to_string(n));
  }
  if (output_path.empty()) throw ConfigError("no output path (use --out or FSQ_OUT_DIR)");
}

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("N", std::to_string(n));
  out.emplace_back("xi", format_number(xi));
  out.emplace_back("N_l_override", low_block_override ? std::to_string(*low_block_override) : "none");
  out.emplace_back("threshold_cross", format_number(thresholds.cross_block));
  out.emplace_back("threshold_drift", format_number(thresholds.xi_drift));
  out.emplace_back("half_width", std::to_string(half_width));
  out.emplace_back("kind", std::string(to_string(kind)));
  out.emplace_back("method", std::string(method_flag(method)));
  out.emplace_back("state_in", state_in ? state_in->generic_string() : "none");
  out.emplace_back("seed", std::to_string(seed));
  out.emplace_back("format", std::string(to_string(format)));
  out.emplace_back("output", output_path.generic_string());
  return out;
}

std::optional<std::string> process_env(const std::string& name) {
  if (const char* v = std::getenv(name.c_str())) return std::string(v);
  return std::nullopt;
}

void apply_environment(RunConfig& config, bool format_from_flag, bool out_from_flag,
                       const std::string& default_file, const EnvLookup& env,
                       const std::string& csv_extension) {
  if (!format_from_flag) {
    if (auto f = env("FSQ_FORMAT"); f && !f->empty()) config.format = parse_format(*f);
  }
  if (!out_from_flag) {
    std::filesystem::path dir = ".";
    if (auto d = env("FSQ_OUT_DIR"); d && !d->empty()) dir = *d;
    const std::string ext = config.format == Format::kCsv ? csv_extension : ".json";
    config.output_path = dir / (default_file + ext);
  }
}

}  // namespace fsq::cli
