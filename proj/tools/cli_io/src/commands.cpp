#include "fsq/cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <optional>
#include <ostream>

#include "fsq/cli/reference.hpp"
#include "fsq/fsq.hpp"

#ifndef FSQ_VERSION
#define FSQ_VERSION "0.0.0"
#endif

namespace fsq::cli {

namespace {

std::string kind_name(CellKind k) {
  switch (k) {
    case CellKind::kDiagonal: return "diagonal";
    case CellKind::kStructuralZero: return "structural-zero";
    case CellKind::kNegligible: return "negligible";
    case CellKind::kValue: return "value";
  }
  return "value";
}

PartitionCert certificate_for(const RunConfig& config, const OscillatorBasis& unit,
                              const OscillatorBasis& target) {
  if (!config.low_block_override) return certify_partition(unit, target, config.thresholds);
  PartitionCert cert = certify_partition(unit, target, config.thresholds);
  const int low = *config.low_block_override;
  const PartitionDiagnostics d = partition_diagnostics(gram(unit), gram(target), low);
  cert.low_block = low;
  cert.high_block = cert.dimension - low;
  cert.cross_block_max = d.cross_block_max;
  cert.xi_drift_max = d.xi_drift_max;
  cert.pass = d.cross_block_max < config.thresholds.cross_block &&
              d.xi_drift_max < config.thresholds.xi_drift;
  return cert;
}

void add_cert_summary(ExportTable& t, const PartitionCert& c, const std::string& prefix) {
  t.summary.emplace_back(prefix + "N_l", std::to_string(c.low_block));
  t.summary.emplace_back(prefix + "pass", c.pass ? "true" : "false");
  t.summary.emplace_back(prefix + "cross_block_max", format_number(c.cross_block_max));
  t.summary.emplace_back(prefix + "xi_drift_max", format_number(c.xi_drift_max));
}

// Shortest round-trip form, for column and key names.
std::string label(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

CommandOutput reproduce_table1(const RunConfig& config) {
  const LatticeGrid grid(config.n);
  const GramMatrix g = gram(build_basis(grid, SqueezeParam(config.xi)));
  CommandOutput out;
  out.table.columns.push_back("n");
  for (int c = 0; c < g.dimension(); ++c) out.table.columns.push_back("m" + std::to_string(c));
  for (int r = 0; r < g.dimension(); ++r) {
    std::vector<double> row{static_cast<double>(r)};
    for (int c = 0; c < g.dimension(); ++c) row.push_back(g(r, c));
    out.table.rows.push_back(std::move(row));
  }
  const GramStructureReport structure = gram_structure_check(g);
  out.table.summary.emplace_back("structure_violations", std::to_string(structure.violations.size()));

  if (config.n != kTable1Dimension || config.xi != kTable1Xi) {
    out.table.summary.emplace_back("reference", "not-applicable");
    return out;
  }
  const TableComparison cmp = compare_table1(g);
  for (const CellCheck& cell : cmp.cells) {
    if (cell.kind == CellKind::kDiagonal || cell.kind == CellKind::kStructuralZero) {
      if (cell.magnitude_ok) continue;
    }
    if (cell.row > cell.col) continue;
    std::string status = cell.magnitude_ok ? "ok" : "mismatch";
    if (cell.magnitude_ok && !cell.sign_ok) status = "sign-flip";
    out.table.summary.emplace_back(
        "check(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")",
        kind_name(cell.kind) + " reference=" + cell.reference +
            " computed=" + format_number(cell.computed) + " status=" + status);
  }
  out.table.summary.emplace_back("mismatches", std::to_string(cmp.mismatches()));
  out.table.summary.emplace_back("sign_flips", std::to_string(cmp.sign_flips()));
  out.table.summary.emplace_back("table1_match", cmp.magnitudes_ok() ? "true" : "false");
  out.code = cmp.magnitudes_ok() ? ExitCode::kOk : ExitCode::kReferenceMismatch;
  return out;
}

CommandOutput reproduce_lattice_figure(const RunConfig& config, int n) {
  const LatticeGrid grid(config.n);
  const Eigen::VectorXd unit = lattice_function(n, SqueezeParam(1.0), grid);
  const Eigen::VectorXd wide = lattice_function(n, SqueezeParam(config.xi), grid);
  CommandOutput out;
  out.table.columns = {"k", "f" + std::to_string(n) + "_xi1",
                       "f" + std::to_string(n) + "_xi" + label(config.xi)};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto e = static_cast<Eigen::Index>(i);
    out.table.rows.push_back({static_cast<double>(grid.label(i)), unit(e), wide(e)});
  }
  return out;
}

CommandOutput reproduce_fig3(const RunConfig& config) {
  const LatticeGrid grid(config.n);
  const StateVector input = square_wave(grid, config.half_width);
  const OscillatorBasis unit = build_basis(grid, SqueezeParam(1.0));

  CommandOutput out;
  out.table.columns = {"k", "input", "squeezed_" + label(kFig3SqueezeXi),
                       "squeezed_" + label(kFig3StretchXi)};
  std::vector<SqueezeResult> results;
  for (double xi : {kFig3SqueezeXi, kFig3StretchXi}) {
    RunConfig c = config;
    c.xi = xi;
    const OscillatorBasis target = build_basis(grid, SqueezeParam(xi));
    const PartitionCert cert = certificate_for(c, unit, target);
    add_cert_summary(out.table, cert, "cert_" + label(xi) + ".");
    results.push_back(apply_squeeze(input, SqueezeParam(xi), cert, config.kind));
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto e = static_cast<Eigen::Index>(i);
    out.table.rows.push_back({static_cast<double>(grid.label(i)), input.amplitudes()(e).real(),
                              results[0].state.amplitudes()(e).real(),
                              results[1].state.amplitudes()(e).real()});
  }
  const double s_in = coordinate_stats(input).dispersion;
  const double s_lo = coordinate_stats(results[0].state).dispersion;
  const double s_hi = coordinate_stats(results[1].state).dispersion;
  out.table.summary.emplace_back("dispersion_input", format_number(s_in));
  out.table.summary.emplace_back("dispersion_squeezed_" + label(kFig3SqueezeXi), format_number(s_lo));
  out.table.summary.emplace_back("dispersion_squeezed_" + label(kFig3StretchXi), format_number(s_hi));
  out.table.summary.emplace_back("norm_deviation_" + label(kFig3SqueezeXi),
                                 format_number(results[0].norm_deviation));
  out.table.summary.emplace_back("norm_deviation_" + label(kFig3StretchXi),
                                 format_number(results[1].norm_deviation));
  const bool ordered = s_lo < s_in && s_in < s_hi;
  out.table.summary.emplace_back("dispersion_ordered", ordered ? "true" : "false");
  out.code = ordered ? ExitCode::kOk : ExitCode::kReferenceMismatch;
  return out;
}

CommandOutput compute_states(const RunConfig& config) {
  const LatticeGrid grid(config.n);
  const OscillatorBasis basis = build_basis(grid, SqueezeParam(config.xi));
  CommandOutput out;
  out.table.columns.push_back("k");
  for (int n = 0; n < basis.dimension(); ++n) out.table.columns.push_back("n" + std::to_string(n));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<double> row{static_cast<double>(grid.label(i))};
    for (int n = 0; n < basis.dimension(); ++n) {
      row.push_back(basis.amplitudes()(static_cast<Eigen::Index>(i), n));
    }
    out.table.rows.push_back(std::move(row));
  }
  std::string indices, norms;
  for (int n = 0; n < basis.dimension(); ++n) {
    if (n) {
      indices += ' ';
      norms += ' ';
    }
    indices += std::to_string(basis.function_indices()[n]);
    norms += format_number(basis.norms()[n]);
  }
  out.table.summary.emplace_back("function_indices", indices);
  out.table.summary.emplace_back("norms", norms);
  return out;
}

CommandOutput compute_gram(const RunConfig& config) {
  const GramMatrix g = gram(build_basis(LatticeGrid(config.n), SqueezeParam(config.xi)));
  CommandOutput out;
  out.table.columns.push_back("n");
  for (int c = 0; c < g.dimension(); ++c) out.table.columns.push_back("m" + std::to_string(c));
  for (int r = 0; r < g.dimension(); ++r) {
    std::vector<double> row{static_cast<double>(r)};
    for (int c = 0; c < g.dimension(); ++c) row.push_back(g(r, c));
    out.table.rows.push_back(std::move(row));
  }
  const GramStructureReport r = gram_structure_check(g);
  out.table.summary.emplace_back("structure_modulus", std::to_string(r.modulus));
  out.table.summary.emplace_back("structure_violations", std::to_string(r.violations.size()));
  for (const GramViolation& v : r.violations) {
    out.table.summary.emplace_back(
        "violation(" + std::to_string(v.row) + "," + std::to_string(v.col) + ")",
        format_number(v.value));
  }
  for (int cls = 0; cls < 4; ++cls) {
    out.table.summary.emplace_back("class_max_mod4_" + std::to_string(cls),
                                   format_number(r.class_max[cls]));
  }
  out.code = ExitCode::kOk;
  return out;
}

CommandOutput compute_certify(const RunConfig& config) {
  const LatticeGrid grid(config.n);
  const OscillatorBasis unit = build_basis(grid, SqueezeParam(1.0));
  const OscillatorBasis target = build_basis(grid, SqueezeParam(config.xi));
  const PartitionCert cert = certificate_for(config, unit, target);
  CommandOutput out;
  out.raw_text = to_key_value(cert);
  out.table.columns = {"key", "value"};
  // Structured output: the same pairs as a summary object.
  std::string kv = out.raw_text;
  std::size_t pos = 0;
  while (pos < kv.size()) {
    const std::size_t eol = kv.find('\n', pos);
    const std::string line = kv.substr(pos, eol - pos);
    const std::size_t eq = line.find('=');
    out.table.summary.emplace_back(line.substr(0, eq), line.substr(eq + 1));
    pos = eol + 1;
  }
  out.table.columns.clear();
  return out;
}

CommandOutput compute_squeeze(const RunConfig& config, const StateVector& input) {
  const LatticeGrid& grid = input.grid();
  const SqueezeParam xi(config.xi);
  PartitionCert cert;
  if (config.kind == OperatorKind::kUnitary) {
    const OscillatorBasis unit = build_basis(grid, SqueezeParam(1.0));
    const OscillatorBasis target = build_basis(grid, xi);
    cert = certificate_for(config, unit, target);
  }
  const SqueezeResult result = apply_squeeze(input, xi, cert, config.kind);
  CommandOutput out;
  out.table = state_table(result.state);
  out.table.summary.emplace_back("kind", std::string(to_string(config.kind)));
  if (config.kind == OperatorKind::kUnitary) add_cert_summary(out.table, cert, "cert.");
  out.table.summary.emplace_back("norm_deviation", format_number(result.norm_deviation));
  out.table.summary.emplace_back("dispersion_input", format_number(coordinate_stats(input).dispersion));
  out.table.summary.emplace_back("dispersion_output",
                                 format_number(coordinate_stats(result.state).dispersion));
  return out;
}

CommandOutput compute_orthogonalize(const RunConfig& config) {
  const LatticeGrid grid(config.n);
  const std::vector<double> xi_grid{0.8, 0.9, 1.0, 1.1, 1.2};
  const ExperimentReport report = orthogonalization_experiment(grid, xi_grid, config.method);
  CommandOutput out;
  out.table.columns.push_back("n");
  for (double xi : xi_grid) out.table.columns.push_back("sigma_xi" + label(xi));
  out.table.columns.push_back("monotone");
  for (int n = 0; n < grid.dimension(); ++n) {
    std::vector<double> row{static_cast<double>(n)};
    row.insert(row.end(), report.dispersion[n].begin(), report.dispersion[n].end());
    row.push_back(report.monotone[n] ? 1.0 : 0.0);
    out.table.rows.push_back(std::move(row));
  }
  out.table.summary.emplace_back("method", std::string(to_string(report.method)));
  out.table.summary.emplace_back("violations", std::to_string(report.violations.size()));
  out.table.summary.emplace_back("orthonormality_error", format_number(report.orthonormality_error));
  out.table.summary.emplace_back("span_error", format_number(report.span_error));
  out.table.summary.emplace_back("note", "method is a reconstruction; monotonicity loss is an expected observation");
  return out;
}

void write_output(const RunConfig& config, std::string_view command, CommandOutput& out) {
  std::vector<std::pair<std::string, std::string>> prov;
  prov.emplace_back("command", std::string(command));
  prov.emplace_back("version", FSQ_VERSION);
  for (auto& [k, v] : config.echo()) prov.emplace_back("config." + k, v);
  out.table.provenance = prov;

  std::string content;
  if (config.format == Format::kStructured) {
    content = render_structured(out.table);
  } else if (!out.raw_text.empty()) {
    for (const auto& [k, v] : prov) content += "# " + k + ": " + v + "\n";
    content += out.raw_text;
  } else {
    content = render_csv(out.table);
  }
  write_atomic(config.output_path, content);
}

ExitCode run_command(std::string_view command, const RunConfig& config,
                     const std::function<CommandOutput()>& body, std::ostream& diag) {
  try {
    CommandOutput out = body();
    write_output(config, command, out);
    if (out.code == ExitCode::kReferenceMismatch) {
      diag << "fsq " << command << ": output does not match the reference (see summary in "
           << config.output_path.string() << ")\n";
    }
    return out.code;
  } catch (const ConfigError& e) {
    diag << "fsq " << command << ": " << e.what() << "\n";
    return ExitCode::kParseFailure;
  } catch (const IoError& e) {
    diag << "fsq " << command << ": " << e.what() << "\n";
    return ExitCode::kIoFailure;
  } catch (const std::exception& e) {
    diag << "fsq " << command << ": refused: " << e.what() << "\n";
    return ExitCode::kRefused;
  }
}

ExitCode dispatch(std::string_view command, std::string_view target, RunConfig config,
                  std::ostream& diag) {
  const std::string name =
      command == "reproduce" ? "reproduce " + std::string(target) : std::string(command);
  std::optional<StateVector> input;
  try {
    if (command == "squeeze") {
      if (!config.state_in) throw ConfigError("squeeze needs --state-in");
      std::string text;
      try {
        text = read_file(*config.state_in);
      } catch (const IoError& e) {
        diag << "fsq " << name << ": " << e.what() << "\n";
        return ExitCode::kIoFailure;
      }
      input.emplace(parse_state_csv(text));
      if (std::fabs(input->norm() - 1.0) > 1e-8) {
        throw ConfigError("input state is not normalized (norm " + format_number(input->norm()) + ")");
      }
      config.n = input->grid().dimension();
    }
    config.validate();
  } catch (const ConfigError& e) {
    diag << "fsq " << name << ": " << e.what() << "\n";
    return ExitCode::kParseFailure;
  }

  std::function<CommandOutput()> body;
  if (command == "reproduce") {
    if (target == "table1") body = [&] { return reproduce_table1(config); };
    else if (target == "fig1") body = [&] { return reproduce_lattice_figure(config, 0); };
    else if (target == "fig2") body = [&] { return reproduce_lattice_figure(config, 1); };
    else if (target == "fig3") body = [&] { return reproduce_fig3(config); };
  } else if (command == "states") {
    body = [&] { return compute_states(config); };
  } else if (command == "gram") {
    body = [&] { return compute_gram(config); };
  } else if (command == "certify") {
    body = [&] { return compute_certify(config); };
  } else if (command == "squeeze") {
    body = [&] { return compute_squeeze(config, *input); };
  } else if (command == "orthogonalize") {
    body = [&] { return compute_orthogonalize(config); };
  }
  if (!body) {
    diag << "fsq: unknown command '" << name << "'\n";
    return ExitCode::kParseFailure;
  }
  return run_command(name, config, body, diag);
}

}  // namespace fsq::cli
