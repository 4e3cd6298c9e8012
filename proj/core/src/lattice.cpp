#include "fsq/lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "fsq/errors.hpp"

namespace fsq {

namespace {

int checked_dimension(int n) {
  const bool odd_ok = n % 2 != 0 && n >= LatticeGrid::kMinOdd && n <= LatticeGrid::kMaxOdd;
  const bool even_ok = n % 2 == 0 && n >= LatticeGrid::kMinEven && n <= LatticeGrid::kMaxEven;
  if (!odd_ok && !even_ok) {
    throw DomainError("grid dimension " + std::to_string(n) +
                      " outside supported range (odd 3..201, even 4..200)");
  }
  return n;
}

}  // namespace

LatticeGrid::LatticeGrid(int dimension)
    : dimension_(checked_dimension(dimension)),
      min_label_(dimension % 2 != 0 ? -(dimension - 1) / 2 : -dimension / 2) {}

LatticeGrid::LatticeGrid(int dimension, std::vector<double> eigenvalues)
    : LatticeGrid(dimension) {
  if (eigenvalues.size() != size()) {
    throw DomainError("eigenvalue map must have one entry per label");
  }
  for (double v : eigenvalues) {
    if (!std::isfinite(v)) throw DomainError("eigenvalue map entries must be finite");
  }
  eigenvalues_ = std::move(eigenvalues);
}

int LatticeGrid::reduce(int j) const noexcept {
  int r = (j - min_label_) % dimension_;
  if (r < 0) r += dimension_;
  return r + min_label_;
}

double LatticeGrid::eigenvalue(std::size_t index) const noexcept {
  if (eigenvalues_) return (*eigenvalues_)[index];
  return static_cast<double>(label(index));
}

SqueezeParam::SqueezeParam(double xi) : xi_(xi) {
  if (!(xi > 0.0) || !std::isfinite(xi) || !std::isfinite(1.0 / xi)) {
    throw DomainError("squeeze parameter must be positive and finite, got " +
                      std::to_string(xi));
  }
}

double grid_epsilon(const LatticeGrid& grid) noexcept {
  return std::sqrt(2.0 * std::numbers::pi / grid.dimension());
}

StateVector::StateVector(LatticeGrid grid, Eigen::VectorXcd amplitudes, Representation rep)
    : grid_(std::move(grid)), amplitudes_(std::move(amplitudes)), rep_(rep) {
  if (static_cast<std::size_t>(amplitudes_.size()) != grid_.size()) {
    throw GridMismatchError("amplitude count " + std::to_string(amplitudes_.size()) +
                            " does not match grid dimension " +
                            std::to_string(grid_.dimension()));
  }
}

StateVector StateVector::normalized(LatticeGrid grid, Eigen::VectorXcd amplitudes,
                                    Representation rep) {
  const double n = amplitudes.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DegenerateStateError("cannot normalize a zero or non-finite amplitude vector");
  }
  amplitudes /= n;
  return StateVector(std::move(grid), std::move(amplitudes), rep);
}

}  // namespace fsq
