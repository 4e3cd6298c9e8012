#include "fsq/cli/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "fsq/cli/config.hpp"

namespace fsq::cli {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string render_csv(const ExportTable& table) {
  std::string out;
  for (const auto& [key, value] : table.provenance) {
    out += "# " + key + ": " + value + "\n";
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out += ',';
    out += table.columns[c];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      out += format_number(row[c]);
    }
    out += '\n';
  }
  for (const auto& [key, value] : table.summary) {
    out += "# " + key + "=" + value + "\n";
  }
  return out;
}

std::string render_structured(const ExportTable& table) {
  nlohmann::ordered_json doc;
  auto& prov = doc["provenance"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.provenance) prov[key] = value;
  doc["columns"] = table.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto& r = rows.emplace_back(nlohmann::ordered_json::array());
    for (double v : row) {
      // JSON has no NaN/inf; keep them as strings.
      if (std::isfinite(v)) r.push_back(v);
      else r.push_back(format_number(v));
    }
  }
  auto& summary = doc["summary"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.summary) summary[key] = value;
  return doc.dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot move output into place at " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ExportTable state_table(const StateVector& state) {
  ExportTable t;
  t.columns = {"k", "re", "im"};
  for (std::size_t i = 0; i < state.size(); ++i) {
    const Complex a = state.amplitudes()(static_cast<Eigen::Index>(i));
    t.rows.push_back({static_cast<double>(state.grid().label(i)), a.real(), a.imag()});
  }
  return t;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ' && ch != '\t' && ch != '\r') {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_field(const std::string& s, int line_no, const std::string& column) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw ConfigError("line " + std::to_string(line_no) + ": cannot parse " + column +
                      " value '" + s + "'");
  }
  return v;
}

}  // namespace

StateVector parse_state_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int k_col = -1, re_col = -1, im_col = -1;
  std::size_t width = 0;
  std::map<int, Complex> values;
  int header_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_fields(line);
    if (header_line == 0) {
      header_line = line_no;
      width = fields.size();
      for (std::size_t c = 0; c < fields.size(); ++c) {
        if (fields[c] == "k") k_col = static_cast<int>(c);
        if (fields[c] == "re") re_col = static_cast<int>(c);
        if (fields[c] == "im") im_col = static_cast<int>(c);
      }
      if (k_col < 0 || re_col < 0 || im_col < 0) {
        throw ConfigError("line " + std::to_string(line_no) + ": header must name columns k, re, im");
      }
      continue;
    }
    if (fields.size() != width) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(width) + " fields, found " + std::to_string(fields.size()));
    }
    const double k = parse_field(fields[k_col], line_no, "k");
    if (k != std::floor(k) || std::fabs(k) > 1e6) {
      throw ConfigError("line " + std::to_string(line_no) + ": label k must be an integer");
    }
    const int label = static_cast<int>(k);
    const Complex a(parse_field(fields[re_col], line_no, "re"),
                    parse_field(fields[im_col], line_no, "im"));
    if (!values.emplace(label, a).second) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate label " +
                        std::to_string(label));
    }
  }
  if (header_line == 0) throw ConfigError("line " + std::to_string(line_no) + ": no header row");
  const int n = static_cast<int>(values.size());
  std::optional<LatticeGrid> grid;
  try {
    grid.emplace(n);
  } catch (const Error& e) {
    throw ConfigError("line " + std::to_string(line_no) + ": " + std::to_string(n) +
                      " rows do not form a supported grid");
  }
  Eigen::VectorXcd amplitudes(n);
  for (std::size_t i = 0; i < grid->size(); ++i) {
    const auto it = values.find(grid->label(i));
    if (it == values.end()) {
      throw ConfigError("line " + std::to_string(line_no) + ": label " +
                        std::to_string(grid->label(i)) + " missing for N=" + std::to_string(n));
    }
    amplitudes(static_cast<Eigen::Index>(i)) = it->second;
  }
  return StateVector(*grid, std::move(amplitudes));
}

}  // namespace fsq::cli
