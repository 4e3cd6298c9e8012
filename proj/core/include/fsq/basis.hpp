#pragma once

#include <vector>

#include <Eigen/Dense>

#include "fsq/lattice.hpp"

namespace fsq {

/// The N discrete oscillator states |n; xi> of one width.
///
/// amplitudes() stacks the (real) states as columns, so column n holds
/// f_{function_index(n)}(k; xi) / norm(n) over the grid labels.
class OscillatorBasis {
 public:
  OscillatorBasis(LatticeGrid grid, SqueezeParam xi, Eigen::MatrixXd amplitudes,
                  std::vector<int> function_indices, std::vector<double> norms);

  const LatticeGrid& grid() const noexcept { return grid_; }
  const SqueezeParam& xi() const noexcept { return xi_; }
  int dimension() const noexcept { return grid_.dimension(); }

  const Eigen::MatrixXd& amplitudes() const noexcept { return amplitudes_; }
  Eigen::VectorXd column(int n) const { return amplitudes_.col(n); }
  StateVector state(int n) const;

  const std::vector<int>& function_indices() const noexcept { return function_indices_; }
  // Normalization constants N_{n,xi} (Euclidean norm of the raw f_n vector).
  const std::vector<double>& norms() const noexcept { return norms_; }

 private:
  LatticeGrid grid_;
  SqueezeParam xi_;
  Eigen::MatrixXd amplitudes_;
  std::vector<int> function_indices_;
  std::vector<double> norms_;
};

// Rank tolerance: smallest/largest singular value of the stacked basis.
inline constexpr double kRankTolerance = 1e-8;
// Largest odd N for which build_basis enforces full rank.
inline constexpr int kRankCheckedMaxN = 41;

/// Builds all N states (even N substitutes f_{N+3} in slot N-1). For odd
/// N <= 41 full numerical rank is enforced (CompletenessError otherwise).
OscillatorBasis build_basis(const LatticeGrid& grid, const SqueezeParam& xi);

// sigma_min / sigma_max of a square matrix.
double singular_value_ratio(const Eigen::MatrixXd& m);

/// Overlap matrix <n'; xi | n; xi> of a basis. Real and symmetric.
class GramMatrix {
 public:
  GramMatrix(Eigen::MatrixXd entries, SqueezeParam basis_xi);

  int dimension() const noexcept { return static_cast<int>(entries_.rows()); }
  double operator()(int row, int col) const { return entries_(row, col); }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  const SqueezeParam& basis_xi() const noexcept { return basis_xi_; }

 private:
  Eigen::MatrixXd entries_;
  SqueezeParam basis_xi_;
};

GramMatrix gram(const OscillatorBasis& basis);

// Gram matrices above this 2-norm condition number are refused.
inline constexpr double kMaxGramCondition = 1e10;

/// Biorthogonal set |m; xi) with (m; xi | n; xi> = delta_mn.
class DualBasis {
 public:
  DualBasis(OscillatorBasis source, Eigen::MatrixXd duals, double condition_number);

  const OscillatorBasis& source() const noexcept { return source_; }
  // Column m is |m; xi).
  const Eigen::MatrixXd& duals() const noexcept { return duals_; }
  double condition_number() const noexcept { return condition_number_; }

  // Coefficients (n; xi | psi> of a u-representation vector.
  Eigen::VectorXcd coefficients(const Eigen::VectorXcd& psi) const {
    return duals_.transpose().cast<Complex>() * psi;
  }

 private:
  OscillatorBasis source_;
  Eigen::MatrixXd duals_;
  double condition_number_;
};

// 2-norm condition number from singular values.
double condition_number(const Eigen::MatrixXd& m);

/// Duals |m; xi) = sum_n (G^{-1})_{n m} |n; xi>, solved through a pivoted
/// LDL^T factorization of G. Throws SingularOverlapError if cond(G) > 1e10.
DualBasis dual(const OscillatorBasis& basis);

}  // namespace fsq
