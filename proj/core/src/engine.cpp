#include "fsq/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fsq/errors.hpp"
#include "fsq/squeezers.hpp"
#include "fsq/states.hpp"

namespace fsq {

StateVector to_u_representation(const StateVector& state) {
  if (state.representation() == Representation::kU) return state;
  const Eigen::MatrixXcd inverse = dft_matrix(state.grid()).adjoint();
  return StateVector(state.grid(), inverse * state.amplitudes(), Representation::kU);
}

CoordinateStats coordinate_stats(const StateVector& state) {
  const StateVector u = to_u_representation(state);
  const LatticeGrid& grid = u.grid();
  CoordinateStats s;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double p = std::norm(u.amplitudes()(static_cast<Eigen::Index>(i)));
    const double q = grid.eigenvalue(i);
    s.mean += q * p;
    s.second_moment += q * q * p;
  }
  s.dispersion = s.second_moment - s.mean * s.mean;
  return s;
}

std::string_view to_string(OperatorKind kind) noexcept {
  switch (kind) {
    case OperatorKind::kUnitary: return "unitary";
    case OperatorKind::kOblique: return "oblique";
    case OperatorKind::kProvisional: return "provisional";
  }
  return "unitary";
}

SqueezeResult apply_squeeze(const StateVector& state, const SqueezeParam& xi,
                            const PartitionCert& cert, OperatorKind kind) {
  const LatticeGrid& grid = state.grid();
  if (kind == OperatorKind::kUnitary) {
    if (!cert.pass || cert.low_block < 1) {
      throw RefusalError("unitary squeeze refused: partition is not certified");
    }
    if (cert.dimension != grid.dimension() || cert.xi != xi.value()) {
      throw RefusalError("unitary squeeze refused: certificate was issued for N=" +
                         std::to_string(cert.dimension) + " xi=" + std::to_string(cert.xi));
    }
  }
  const StateVector input = to_u_representation(state);
  const OscillatorBasis unit = build_basis(grid, SqueezeParam(1.0));
  const OscillatorBasis target = build_basis(grid, xi);

  Eigen::VectorXcd out;
  switch (kind) {
    case OperatorKind::kProvisional:
      out = squeezer_provisional(unit, target).matrix() * input.amplitudes();
      break;
    case OperatorKind::kOblique: {
      // sum_n (n;1|phi> |n;xi>
      const DualBasis unit_dual = dual(unit);
      out = target.amplitudes().cast<Complex>() * unit_dual.coefficients(input.amplitudes());
      break;
    }
    case OperatorKind::kUnitary: {
      const DualBasis unit_dual = dual(unit);
      const Eigen::VectorXcd coeff = unit_dual.coefficients(input.amplitudes());
      const int low = cert.low_block;
      const int high = grid.dimension() - low;
      out = target.amplitudes().leftCols(low).cast<Complex>() * coeff.head(low);
      if (high > 0) out += unit.amplitudes().rightCols(high).cast<Complex>() * coeff.tail(high);
      break;
    }
  }
  StateVector result(grid, std::move(out), Representation::kU);
  const double deviation = result.norm() - 1.0;
  return {std::move(result), deviation};
}

StateVector square_wave(const LatticeGrid& grid, int half_width) {
  if (half_width < 0 || half_width > grid.half_width() ||
      (!grid.is_odd() && half_width == grid.half_width())) {
    throw DomainError("square wave half width " + std::to_string(half_width) +
                      " does not fit on the N=" + std::to_string(grid.dimension()) + " grid");
  }
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(grid.dimension());
  const double height = 1.0 / std::sqrt(2.0 * half_width + 1.0);
  for (int j = -half_width; j <= half_width; ++j) {
    a(static_cast<Eigen::Index>(grid.index_of(j))) = height;
  }
  return StateVector(grid, std::move(a));
}

StateVector truncated_gaussian(const LatticeGrid& grid) {
  const double s = grid.half_width() / 3.0;
  Eigen::VectorXcd a(grid.dimension());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double j = grid.label(i);
    a(static_cast<Eigen::Index>(i)) = std::exp(-j * j / (2.0 * s * s));
  }
  return StateVector::normalized(grid, std::move(a));
}

StateVector displace(const StateVector& state, int shift, int boost) {
  const LatticeGrid& grid = state.grid();
  const long n = grid.dimension();
  Eigen::VectorXcd out(n);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const long j = grid.label(i);
    long phase = (static_cast<long>(boost) * j) % n;
    if (phase < 0) phase += n;
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(phase) /
                                          static_cast<double>(n));
    out(static_cast<Eigen::Index>(i)) =
        w * state.amplitudes()(static_cast<Eigen::Index>(grid.index_of(static_cast<int>(j) - shift)));
  }
  return StateVector(grid, std::move(out), state.representation());
}

std::string_view to_string(OrthoMethod method) noexcept {
  switch (method) {
    case OrthoMethod::kSequential: return "sequential-projection";
    case OrthoMethod::kReorderedSequential: return "reordered-sequential";
    case OrthoMethod::kSymmetric: return "symmetric-diagonalization";
  }
  return "sequential-projection";
}

namespace {

// Classical Gram-Schmidt with one re-orthogonalization pass, visiting the
// columns in `order`.
Eigen::MatrixXd gram_schmidt(const Eigen::MatrixXd& b, const std::vector<int>& order) {
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(b.rows(), b.cols());
  std::vector<int> done;
  for (int col : order) {
    Eigen::VectorXd v = b.col(col);
    for (int pass = 0; pass < 2; ++pass) {
      Eigen::VectorXd proj = Eigen::VectorXd::Zero(v.size());
      for (int prev : done) proj += q.col(prev).dot(v) * q.col(prev);
      v -= proj;
    }
    const double nrm = v.norm();
    if (!(nrm > 0.0)) throw CompletenessError("Gram-Schmidt hit a dependent column", 0.0);
    q.col(col) = v / nrm;
    done.push_back(col);
  }
  return q;
}

}  // namespace

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& basis, OrthoMethod method) {
  const int n = static_cast<int>(basis.cols());
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  switch (method) {
    case OrthoMethod::kSequential:
      return gram_schmidt(basis, order);
    case OrthoMethod::kReorderedSequential:
      std::reverse(order.begin(), order.end());
      return gram_schmidt(basis, order);
    case OrthoMethod::kSymmetric: {
      const Eigen::MatrixXd g = basis.transpose() * basis;
      const double cond = condition_number(g);
      if (!(cond <= kMaxGramCondition)) {
        throw SingularOverlapError("overlap matrix too ill-conditioned for G^{-1/2}", cond);
      }
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
      return basis * eig.operatorInverseSqrt();
    }
  }
  return basis;
}

ExperimentReport orthogonalization_experiment(const LatticeGrid& grid,
                                              const std::vector<double>& xi_grid,
                                              OrthoMethod method) {
  if (!grid.is_odd()) throw DomainError("orthogonalization experiment needs odd N");
  if (xi_grid.empty()) throw DomainError("xi grid is empty");
  for (std::size_t i = 0; i < xi_grid.size(); ++i) {
    if (xi_grid[i] < 0.8 || xi_grid[i] > 1.25) {
      throw DomainError("xi grid values must lie in [0.8, 1.25]");
    }
    if (i > 0 && !(xi_grid[i] > xi_grid[i - 1])) {
      throw DomainError("xi grid must be strictly increasing");
    }
  }
  const int n = grid.dimension();
  ExperimentReport report;
  report.method = method;
  report.xi_grid = xi_grid;
  report.dispersion.assign(n, std::vector<double>(xi_grid.size()));

  for (std::size_t x = 0; x < xi_grid.size(); ++x) {
    const OscillatorBasis basis = build_basis(grid, SqueezeParam(xi_grid[x]));
    const Eigen::MatrixXd q = orthonormalize(basis.amplitudes(), method);
    const auto id = Eigen::MatrixXd::Identity(n, n);
    report.orthonormality_error = std::max(
        report.orthonormality_error, (q.transpose() * q - id).cwiseAbs().maxCoeff());
    // Projectors onto both spans; the input one goes through its duals.
    const Eigen::MatrixXd p_in =
        basis.amplitudes() * (basis.amplitudes().transpose() * basis.amplitudes())
                                 .ldlt()
                                 .solve(basis.amplitudes().transpose());
    const Eigen::MatrixXd p_out = q * q.transpose();
    report.span_error = std::max(report.span_error, (p_in - p_out).cwiseAbs().maxCoeff());
    for (int s = 0; s < n; ++s) {
      const StateVector st(grid, q.col(s).cast<Complex>());
      report.dispersion[s][x] = coordinate_stats(st).dispersion;
    }
  }

  report.monotone.assign(n, true);
  for (int s = 0; s < n; ++s) {
    for (std::size_t x = 1; x < xi_grid.size(); ++x) {
      if (!(report.dispersion[s][x] > report.dispersion[s][x - 1])) {
        report.monotone[s] = false;
        report.violations.push_back({s, xi_grid[x - 1], xi_grid[x]});
      }
    }
  }
  return report;
}

}  // namespace fsq
