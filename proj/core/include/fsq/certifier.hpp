#pragma once

#include <array>
#include <string>
#include <vector>

#include "fsq/basis.hpp"
#include "fsq/squeezers.hpp"

namespace fsq {

struct Thresholds {
  double cross_block = 1e-4;  // bound on |<m;xi|n;xi>|^2, n < N_l <= m
  double xi_drift = 1e-4;     // bound on | |<n;1|m;1>|^2 - |<n;xi|m;xi>|^2 |, n, m < N_l
};

/// Block partition of the oscillator index range into a low block of size
/// N_l (where squeezing acts) and a high block of size N_h = N - N_l.
struct PartitionCert {
  int dimension = 0;
  double xi = 1.0;
  int low_block = 0;
  int high_block = 0;
  double cross_block_max = 0.0;
  double xi_drift_max = 0.0;
  // max |(m;1|n;xi>|^2 over n < N_l <= m; NaN when the xi=1 duals are unavailable.
  double dual_cross_max = 0.0;
  Thresholds thresholds;
  bool pass = false;
};

// Cross-block and drift maxima for one candidate N_l.
struct PartitionDiagnostics {
  double cross_block_max = 0.0;
  double xi_drift_max = 0.0;
};

PartitionDiagnostics partition_diagnostics(const GramMatrix& reference, const GramMatrix& target,
                                           int low_block);

/// Largest N_l for which both overlap conditions hold, scanning from N down
/// to 1. No passing size yields N_l = 0, pass = false, with diagnostics of
/// the N_l = 1 candidate. Requires odd N and bases on the same grid.
PartitionCert certify_partition(const OscillatorBasis& reference, const OscillatorBasis& target,
                                const Thresholds& thresholds = {});

// max(||M M^+ - 1||_max, ||M^+ M - 1||_max)
double unitarity_deviation(const Eigen::MatrixXcd& m);
double unitarity_deviation(const LinearMap& map);

struct GramViolation {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

struct GramStructureReport {
  // 4 at xi = 1 (DFT eigenvalue classes), 2 otherwise (parity only).
  int modulus = 4;
  double tolerance = 1e-12;
  std::vector<GramViolation> violations;
  // Largest |off-diagonal| per class (n - n') mod 4.
  std::array<double, 4> class_max{};

  bool clean() const noexcept { return violations.empty(); }
};

/// Lists entries that should vanish but do not. Entries with (n - n') not a
/// multiple of `modulus` must stay below 1e-12.
GramStructureReport gram_structure_check(const GramMatrix& g);
GramStructureReport gram_structure_check(const GramMatrix& g, int modulus);

// One key=value per line, fixed order, 17 significant digits.
std::string to_key_value(const PartitionCert& cert);

}  // namespace fsq
