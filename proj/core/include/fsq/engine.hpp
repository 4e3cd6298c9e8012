#pragma once

#include <string_view>
#include <vector>

#include "fsq/basis.hpp"
#include "fsq/certifier.hpp"
#include "fsq/lattice.hpp"

namespace fsq {

/// Moments of the coordinate operator Q|u_k> = o(k)|u_k>.
struct CoordinateStats {
  double mean = 0.0;
  double second_moment = 0.0;
  double dispersion = 0.0;  // <Q^2> - <Q>^2
};

// v-tagged states are first brought back to the u-representation.
CoordinateStats coordinate_stats(const StateVector& state);

// Amplitudes in the u-representation (inverse DFT for v-tagged input).
StateVector to_u_representation(const StateVector& state);

enum class OperatorKind { kUnitary, kOblique, kProvisional };
std::string_view to_string(OperatorKind kind) noexcept;

struct SqueezeResult {
  StateVector state;
  // ||output|| - 1; outputs are never renormalized.
  double norm_deviation = 0.0;
};

/// Squeezes `state` to width xi. The state is decomposed on the xi = 1 frame
/// through its duals; the unitary kind uses the certified N_l and refuses
/// (RefusalError) an uncertified partition or one issued for another
/// (N, xi).
SqueezeResult apply_squeeze(const StateVector& state, const SqueezeParam& xi,
                            const PartitionCert& cert, OperatorKind kind);

// Amplitudes 1/sqrt(2w+1) on |j| <= w, zero elsewhere.
StateVector square_wave(const LatticeGrid& grid, int half_width);

// exp(-j^2 / (2 s^2)) with s = l/3, normalized.
StateVector truncated_gaussian(const LatticeGrid& grid);

// psi(j) -> exp(2 pi i b j / N) psi(j - a), labels taken cyclically.
StateVector displace(const StateVector& state, int shift, int boost);

enum class OrthoMethod { kSequential, kReorderedSequential, kSymmetric };
std::string_view to_string(OrthoMethod method) noexcept;

// Orthonormalizes the columns of a full-rank basis with the chosen method.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& basis, OrthoMethod method);

struct MonotonicityViolation {
  int state = 0;
  double xi_from = 0.0;
  double xi_to = 0.0;
};

struct ExperimentReport {
  OrthoMethod method = OrthoMethod::kSequential;
  std::vector<double> xi_grid;
  // dispersion[n][i]: dispersion of orthonormalized state n at xi_grid[i].
  std::vector<std::vector<double>> dispersion;
  std::vector<bool> monotone;
  std::vector<MonotonicityViolation> violations;
  double orthonormality_error = 0.0;  // max over xi of ||Q^T Q - 1||_max
  double span_error = 0.0;            // max over xi of projector difference
};

/// Orthonormalizes the oscillator basis at each xi and checks whether the
/// dispersion of each resulting state still increases with xi.
ExperimentReport orthogonalization_experiment(const LatticeGrid& grid,
                                              const std::vector<double>& xi_grid,
                                              OrthoMethod method);

}  // namespace fsq
