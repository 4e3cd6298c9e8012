#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "fsq/lattice.hpp"

namespace fsq::cli {

// 17 significant digits, '.' separator,
// independent of the C/C++ locale.
std::string format_number(double v);

/// A rectangular numeric table plus provenance and summary metadata.
/// Rendering is byte-deterministic for identical content.
struct ExportTable {
  std::vector<std::pair<std::string, std::string>> provenance;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  std::vector<std::pair<std::string, std::string>> summary;
};

// '#'-prefixed provenance lines, header row, data rows, '#'-prefixed
// summary lines; '\n' line endings.
std::string render_csv(const ExportTable& table);
// JSON object {provenance, columns, rows, summary} with fixed key order.
std::string render_structured(const ExportTable& table);

// Writes via a sibling temporary file and rename. Throws IoError.
void write_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

// Table with columns k, re, im (one row per label).
ExportTable state_table(const StateVector& state);

/// Parses a state exported by state_table. Comment lines start with '#'.
/// Throws ConfigError with a "line N:" prefix on malformed content.
StateVector parse_state_csv(const std::string& text);

}  // namespace fsq::cli
