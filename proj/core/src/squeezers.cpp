#include "fsq/squeezers.hpp"

#include <string>

#include "fsq/errors.hpp"
#include "fsq/states.hpp"

namespace fsq {

namespace {

void require_same_grid(const OscillatorBasis& a, const OscillatorBasis& b) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatchError("bases live on different grids (N=" +
                            std::to_string(a.dimension()) + " vs N=" +
                            std::to_string(b.dimension()) + ")");
  }
}

void require_dual_of(const DualBasis& d, const OscillatorBasis& b) {
  if (!(d.source().grid() == b.grid()) || !(d.source().xi() == b.xi())) {
    throw GridMismatchError("dual set does not belong to the given basis");
  }
}

}  // namespace

std::string_view to_string(Provenance p) noexcept {
  switch (p) {
    case Provenance::kProvisional: return "provisional";
    case Provenance::kOblique: return "oblique";
    case Provenance::kObliqueInverse: return "oblique-inverse";
    case Provenance::kUnitarySqueezer: return "unitary-squeezer";
    case Provenance::kDft: return "dft";
    case Provenance::kDisplacement: return "displacement";
    case Provenance::kCustom: return "custom";
  }
  return "custom";
}

LinearMap::LinearMap(LatticeGrid grid, Eigen::MatrixXcd matrix, Provenance provenance)
    : grid_(std::move(grid)), matrix_(std::move(matrix)), provenance_(provenance) {
  const auto n = static_cast<Eigen::Index>(grid_.size());
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw GridMismatchError("operator matrix is " + std::to_string(matrix_.rows()) + "x" +
                            std::to_string(matrix_.cols()) + ", grid has N=" +
                            std::to_string(grid_.dimension()));
  }
}

StateVector LinearMap::apply(const StateVector& state) const {
  if (!(state.grid() == grid_)) throw GridMismatchError("state and operator grids differ");
  return StateVector(grid_, matrix_ * state.amplitudes(), state.representation());
}

LinearMap squeezer_provisional(const OscillatorBasis& source, const OscillatorBasis& target) {
  require_same_grid(source, target);
  const Eigen::MatrixXd m = target.amplitudes() * source.amplitudes().transpose();
  return LinearMap(source.grid(), m.cast<Complex>(), Provenance::kProvisional);
}

std::pair<LinearMap, LinearMap> squeezer_oblique(const OscillatorBasis& source,
                                                 const OscillatorBasis& target,
                                                 const DualBasis& source_dual,
                                                 const DualBasis& target_dual) {
  require_same_grid(source, target);
  require_dual_of(source_dual, source);
  require_dual_of(target_dual, target);
  const Eigen::MatrixXd forward = target.amplitudes() * source_dual.duals().transpose();
  const Eigen::MatrixXd backward = source.amplitudes() * target_dual.duals().transpose();
  return {LinearMap(source.grid(), forward.cast<Complex>(), Provenance::kOblique),
          LinearMap(source.grid(), backward.cast<Complex>(), Provenance::kObliqueInverse)};
}

LinearMap squeezer_unitary(const OscillatorBasis& source, const OscillatorBasis& target,
                           const DualBasis& source_dual, int low_block) {
  require_same_grid(source, target);
  require_dual_of(source_dual, source);
  const int n = source.dimension();
  if (low_block < 1 || low_block > n) {
    throw DomainError("low block size " + std::to_string(low_block) + " outside [1, " +
                      std::to_string(n) + "]");
  }
  const int high = n - low_block;
  const Eigen::MatrixXd& d = source_dual.duals();
  Eigen::MatrixXd m = target.amplitudes().leftCols(low_block) * d.leftCols(low_block).transpose();
  if (high > 0) m += source.amplitudes().rightCols(high) * d.rightCols(high).transpose();
  return LinearMap(source.grid(), m.cast<Complex>(), Provenance::kUnitarySqueezer);
}

LinearMap dft_map(const LatticeGrid& grid) {
  return LinearMap(grid, dft_matrix(grid), Provenance::kDft);
}

}  // namespace fsq
