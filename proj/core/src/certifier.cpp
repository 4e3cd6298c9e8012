#include "fsq/certifier.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "fsq/errors.hpp"

namespace fsq {

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

PartitionDiagnostics partition_diagnostics(const GramMatrix& reference, const GramMatrix& target,
                                           int low_block) {
  const int n = target.dimension();
  PartitionDiagnostics d;
  for (int lo = 0; lo < low_block; ++lo) {
    for (int hi = low_block; hi < n; ++hi) {
      const double v = target(hi, lo);
      d.cross_block_max = std::max(d.cross_block_max, v * v);
    }
    for (int m = 0; m < low_block; ++m) {
      const double a = reference(lo, m);
      const double b = target(lo, m);
      d.xi_drift_max = std::max(d.xi_drift_max, std::fabs(a * a - b * b));
    }
  }
  return d;
}

PartitionCert certify_partition(const OscillatorBasis& reference, const OscillatorBasis& target,
                                const Thresholds& thresholds) {
  if (!(reference.grid() == target.grid())) {
    throw GridMismatchError("certification needs both bases on the same grid");
  }
  if (!reference.grid().is_odd()) {
    throw DomainError("partition certification is defined for odd N only");
  }
  const GramMatrix g_ref = gram(reference);
  const GramMatrix g_tgt = gram(target);
  const int n = reference.dimension();

  PartitionCert cert;
  cert.dimension = n;
  cert.xi = target.xi().value();
  cert.thresholds = thresholds;

  PartitionDiagnostics chosen{};
  for (int low = n; low >= 1; --low) {
    const PartitionDiagnostics d = partition_diagnostics(g_ref, g_tgt, low);
    chosen = d;
    if (d.cross_block_max < thresholds.cross_block && d.xi_drift_max < thresholds.xi_drift) {
      cert.low_block = low;
      cert.pass = true;
      break;
    }
  }
  cert.high_block = n - cert.low_block;
  cert.cross_block_max = chosen.cross_block_max;
  cert.xi_drift_max = chosen.xi_drift_max;

  const int low = std::max(cert.low_block, 1);
  try {
    const DualBasis d_ref = dual(reference);
    const Eigen::MatrixXd mixed = d_ref.duals().transpose() * target.amplitudes();
    double worst = 0.0;
    for (int m = 0; m < low; ++m) {
      for (int k = low; k < n; ++k) worst = std::max(worst, mixed(m, k) * mixed(m, k));
    }
    cert.dual_cross_max = worst;
  } catch (const SingularOverlapError&) {
    cert.dual_cross_max = std::numeric_limits<double>::quiet_NaN();
  }
  return cert;
}

double unitarity_deviation(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw DomainError("unitarity deviation needs a square matrix");
  const auto id = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  const double left = (m * m.adjoint() - id).cwiseAbs().maxCoeff();
  const double right = (m.adjoint() * m - id).cwiseAbs().maxCoeff();
  return std::max(left, right);
}

double unitarity_deviation(const LinearMap& map) { return unitarity_deviation(map.matrix()); }

GramStructureReport gram_structure_check(const GramMatrix& g) {
  return gram_structure_check(g, g.basis_xi().value() == 1.0 ? 4 : 2);
}

GramStructureReport gram_structure_check(const GramMatrix& g, int modulus) {
  if (modulus != 2 && modulus != 4) throw DomainError("structure modulus must be 2 or 4");
  GramStructureReport report;
  report.modulus = modulus;
  const int n = g.dimension();
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (r == c) continue;
      const int diff = std::abs(r - c);
      const double mag = std::fabs(g(r, c));
      report.class_max[diff % 4] = std::max(report.class_max[diff % 4], mag);
      if (diff % modulus != 0 && mag > report.tolerance && r < c) {
        report.violations.push_back({r, c, g(r, c)});
      }
    }
  }
  return report;
}

std::string to_key_value(const PartitionCert& cert) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out.append(key).append("=").append(value).append("\n");
  };
  line("N", std::to_string(cert.dimension));
  line("xi", format_double(cert.xi));
  line("N_l", std::to_string(cert.low_block));
  line("N_h", std::to_string(cert.high_block));
  line("cross_block_max", format_double(cert.cross_block_max));
  line("xi_drift_max", format_double(cert.xi_drift_max));
  line("dual_cross_max", format_double(cert.dual_cross_max));
  line("threshold_cross", format_double(cert.thresholds.cross_block));
  line("threshold_drift", format_double(cert.thresholds.xi_drift));
  line("pass", cert.pass ? "true" : "false");
  return out;
}

}  // namespace fsq
