#include "fsq/basis.hpp"

#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "fsq/errors.hpp"
#include "fsq/states.hpp"

namespace fsq {

OscillatorBasis::OscillatorBasis(LatticeGrid grid, SqueezeParam xi, Eigen::MatrixXd amplitudes,
                                 std::vector<int> function_indices, std::vector<double> norms)
    : grid_(std::move(grid)),
      xi_(xi),
      amplitudes_(std::move(amplitudes)),
      function_indices_(std::move(function_indices)),
      norms_(std::move(norms)) {
  const auto n = static_cast<Eigen::Index>(grid_.size());
  if (amplitudes_.rows() != n || amplitudes_.cols() != n ||
      function_indices_.size() != grid_.size() || norms_.size() != grid_.size()) {
    throw GridMismatchError("oscillator basis shape does not match its grid");
  }
}

StateVector OscillatorBasis::state(int n) const {
  return StateVector(grid_, amplitudes_.col(n).cast<Complex>());
}

double singular_value_ratio(const Eigen::MatrixXd& m) {
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0.0;
  return s(s.size() - 1) / s(0);
}

double condition_number(const Eigen::MatrixXd& m) {
  const double ratio = singular_value_ratio(m);
  return ratio > 0.0 ? 1.0 / ratio : std::numeric_limits<double>::infinity();
}

OscillatorBasis build_basis(const LatticeGrid& grid, const SqueezeParam& xi) {
  const int big_n = grid.dimension();
  Eigen::MatrixXd amplitudes(big_n, big_n);
  std::vector<int> indices(grid.size());
  std::vector<double> norms(grid.size());
  for (int n = 0; n < big_n; ++n) {
    indices[n] = function_index(n, grid);
    const Eigen::VectorXd f = lattice_function(indices[n], xi, grid);
    norms[n] = f.norm();
    if (!(norms[n] > 0.0)) {
      throw DegenerateStateError("f_" + std::to_string(indices[n]) + " vanishes on the grid");
    }
    amplitudes.col(n) = f / norms[n];
  }

  if (grid.is_odd() && big_n <= kRankCheckedMaxN) {
    const double ratio = singular_value_ratio(amplitudes);
    if (!(ratio > kRankTolerance)) {
      std::ostringstream msg;
      msg << "oscillator basis N=" << big_n << " xi=" << xi.value()
          << " is rank deficient: sigma_min/sigma_max = " << ratio;
      throw CompletenessError(msg.str(), ratio);
    }
  }
  return OscillatorBasis(grid, xi, std::move(amplitudes), std::move(indices), std::move(norms));
}

GramMatrix::GramMatrix(Eigen::MatrixXd entries, SqueezeParam basis_xi)
    : entries_(std::move(entries)), basis_xi_(basis_xi) {
  if (entries_.rows() != entries_.cols()) throw GridMismatchError("Gram matrix must be square");
}

GramMatrix gram(const OscillatorBasis& basis) {
  const Eigen::MatrixXd& b = basis.amplitudes();
  const Eigen::Index n = b.cols();
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = r; c < n; ++c) {
      g(r, c) = b.col(r).dot(b.col(c));
      g(c, r) = g(r, c);
    }
  }
  return GramMatrix(std::move(g), basis.xi());
}

DualBasis::DualBasis(OscillatorBasis source, Eigen::MatrixXd duals, double condition_number)
    : source_(std::move(source)), duals_(std::move(duals)), condition_number_(condition_number) {}

DualBasis dual(const OscillatorBasis& basis) {
  const GramMatrix g = gram(basis);
  const double cond = condition_number(g.entries());
  if (!(cond <= kMaxGramCondition)) {
    std::ostringstream msg;
    msg << "overlap matrix at N=" << basis.dimension() << " xi=" << basis.xi().value()
        << " is singular for dual construction: condition number " << cond;
    throw SingularOverlapError(msg.str(), cond);
  }
  // D G = B  <=>  G D^T = B^T (G symmetric).
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(g.entries());
  Eigen::MatrixXd duals = ldlt.solve(basis.amplitudes().transpose()).transpose();
  return DualBasis(basis, std::move(duals), cond);
}

}  // namespace fsq
